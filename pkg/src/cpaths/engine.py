"""Rewriting paths with the rule catalog.

Two strategies are offered:

``"lo"`` (leftmost-outermost, the default)
    Walk the tree in pre-order; at each node try the rules in catalog order;
    fire the first hit.
``"priority"``
    Fire the lowest-numbered rule that applies anywhere, at its
    leftmost-outermost position.

Subtrees found to contain no redex are flagged on the (immutable) nodes, so
repeated searches skip them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import CoherenceError, FuelExhausted, PreconditionError
from .paths import (Mu, Nu, Path, Rho, Sigma, Tau, Xi, check_well_formed,
                    replace_subpath, subpaths)
from .rules import RULE, RULES_BY_HEAD, Rule, RuleId
from .syntax import print_location, print_path

DEFAULT_FUEL = 10_000
STRATEGIES = ("lo", "priority")


@dataclass(frozen=True)
class RwStep:
    """One rule application: ``after`` is ``before`` with the node at ``position`` rewritten."""

    rule: RuleId
    position: tuple
    before: Path
    after: Path

    @property
    def redex(self) -> Path:
        from .paths import subpath_at

        return subpath_at(self.before, self.position)

    @property
    def contractum(self) -> Path:
        from .paths import subpath_at

        return subpath_at(self.after, self.position)


@dataclass
class RwTrace:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def rules(self) -> list[str]:
        return [s.rule.name for s in self.steps]

    def is_chained(self) -> bool:
        return all(a.after is b.before or a.after == b.before
                   for a, b in zip(self.steps, self.steps[1:]))


def _endpoints_kept(old: Path, new: Path) -> bool:
    return old.source == new.source and old.target == new.target


def _apply(rule: Rule, node: Path, literal39: bool):
    rhs = rule.match(node, literal39)
    if rhs is None:
        return None
    if rule.guarded:
        if not (rhs.wf and _endpoints_kept(node, rhs)):
            return None
    elif not (literal39 and rule.id is RuleId.tst) and not _endpoints_kept(node, rhs):
        raise CoherenceError(
            f"rule {rule.label} changed the endpoints of {print_path(node)}",
            node.source, rhs.source)
    return rhs


def apply_rule(rule, p: Path, *, rule39_literal: bool = False):
    """Fire one rule (id, number or label) at the root of ``p``; None if it does not apply."""
    if not isinstance(rule, Rule):
        rule = RULE[RuleId[rule]] if isinstance(rule, str) else RULE[RuleId(rule)]
    if not isinstance(p, rule.head):
        return None
    return _apply(rule, p, rule39_literal)


def _first_at(node: Path, literal39: bool):
    for rule in RULES_BY_HEAD.get(type(node), ()):
        rhs = _apply(rule, node, literal39)
        if rhs is not None:
            return rule, rhs
    return None


def _mark_normal(node: Path):
    object.__setattr__(node, "_normal", True)


def _search_lo(root: Path, literal39: bool):
    stack = [(root, (), False)]
    while stack:
        node, pos, done = stack.pop()
        if done:
            _mark_normal(node)
            continue
        if node._normal:
            continue
        hit = _first_at(node, literal39)
        if hit is not None:
            return pos, hit[0], hit[1]
        stack.append((node, pos, True))
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((kids[i], pos + (i,), False))
    return None


def _search_priority(root: Path, literal39: bool):
    best = None
    dirty = set()
    stack = [(root, (), False)]
    while stack:
        node, pos, done = stack.pop()
        if done:
            if pos not in dirty:
                _mark_normal(node)
            continue
        if node._normal:
            continue
        hit = _first_at(node, literal39)
        if hit is not None:
            for k in range(len(pos) + 1):
                dirty.add(pos[:k])
            if best is None or hit[0].number < best[1].number:
                best = (pos, hit[0], hit[1])
        stack.append((node, pos, True))
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((kids[i], pos + (i,), False))
    return best


def _search(p: Path, strategy: str, literal39: bool):
    if strategy == "lo":
        return _search_lo(p, literal39)
    if strategy == "priority":
        return _search_priority(p, literal39)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def contract_once(p: Path, strategy: str = "lo", *, rule39_literal: bool = False):
    """Fire one rule; return ``(new_path, RwStep)`` or None when ``p`` is rw-normal."""
    found = _search(p, strategy, rule39_literal)
    if found is None:
        return None
    pos, rule, rhs = found
    new = replace_subpath(p, pos, rhs)
    return new, RwStep(rule.id, pos, p, new)


def is_normal(p: Path) -> bool:
    return _search_lo(p, False) is None


def normalize(p: Path, fuel: int = DEFAULT_FUEL, strategy: str = "lo", *,
              rule39_literal: bool = False) -> tuple[Path, RwTrace]:
    """Rewrite ``p`` until no rule applies, returning the normal form and the trace.

    Raises CoherenceError on an ill-formed path and FuelExhausted (carrying
    the partial trace) if ``fuel`` steps do not reach a normal form.
    """
    if fuel < 1:
        raise ValueError("fuel must be positive")
    check_well_formed(p)
    trace = RwTrace()
    cur = p
    for _ in range(fuel):
        found = _search(cur, strategy, rule39_literal)
        if found is None:
            return cur, trace
        pos, rule, rhs = found
        new = replace_subpath(cur, pos, rhs)
        trace.steps.append(RwStep(rule.id, pos, cur, new))
        cur = new
    if _search(cur, strategy, rule39_literal) is None:
        return cur, trace
    raise FuelExhausted(f"no rw-normal form within {fuel} steps", partial=trace)


def normal_form(p: Path, fuel: int = DEFAULT_FUEL, strategy: str = "lo") -> Path:
    return normalize(p, fuel, strategy)[0]


def rw_equal(p: Path, q: Path, fuel: int = DEFAULT_FUEL, strategy: str = "lo") -> bool:
    """Decide rw-equality by comparing normal forms (paths need common endpoints)."""
    check_well_formed(p)
    check_well_formed(q)
    if p.source != q.source or p.target != q.target:
        raise CoherenceError(
            f"paths have different endpoints: {p.source} = {p.target} versus "
            f"{q.source} = {q.target}", (p.source, p.target), (q.source, q.target))
    return normal_form(p, fuel, strategy) == normal_form(q, fuel, strategy)


_RHO_STEP = {Sigma: RuleId.sr, Tau: RuleId.trr, Mu: RuleId.mxp, Nu: RuleId.nxp,
             Xi: RuleId.xxp}


def reduce_rho_generated(p: Path) -> RwTrace:
    """Collapse a path built from reflexivities by sigma, tau, mu, nu and xi to a
    single reflexivity, by structural recursion (children first).

    Each node turns into rho with one step: ``sr``, ``trr``, ``mxp``, ``nxp``
    or ``xxp`` according to its constructor.
    """
    for pos, node in subpaths(p):
        if not isinstance(node, Rho) and type(node) not in _RHO_STEP:
            raise PreconditionError(
                f"{type(node).__name__} at position {print_location(pos)} is not "
                "allowed in a path generated from reflexivity")
    check_well_formed(p)
    post = _post_order(p)
    trace = RwTrace()
    cur = p
    for pos in post:
        node = _at(cur, pos)
        if isinstance(node, Rho):
            continue
        rule = RULE[_RHO_STEP[type(node)]]
        rhs = rule.match(node, False)
        if not isinstance(rhs, Rho):  # pragma: no cover - children are rho by now
            raise PreconditionError(f"cannot collapse {print_path(node)}")
        new = replace_subpath(cur, pos, rhs)
        trace.steps.append(RwStep(rule.id, pos, cur, new))
        cur = new
    return trace


def _at(p, pos):
    for i in pos:
        p = p.children[i]
    return p


def _post_order(p: Path) -> list:
    out = []
    stack = [((), p, False)]
    while stack:
        pos, node, done = stack.pop()
        if done:
            out.append(pos)
            continue
        stack.append((pos, node, True))
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((pos + (i,), kids[i], False))
    return out


# -- trace export ----------------------------------------------------------

TRACE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "rewrite trace",
    "type": "object",
    "required": ["input", "normal_form", "steps"],
    "properties": {
        "input": {"type": "string"},
        "normal_form": {"type": "string"},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["step", "rule", "number", "position", "before", "after"],
                "additionalProperties": False,
                "properties": {
                    "step": {"type": "integer", "minimum": 1},
                    "rule": {"type": "string"},
                    "number": {"type": "integer", "minimum": 1, "maximum": 42},
                    "position": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "before": {"type": "string"},
                    "after": {"type": "string"},
                },
            },
        },
    },
}


def trace_records(trace: RwTrace) -> list[dict]:
    return [{"step": i, "rule": s.rule.name, "number": int(s.rule),
             "position": list(s.position), "before": print_path(s.before),
             "after": print_path(s.after)}
            for i, s in enumerate(trace, 1)]


def trace_document(p: Path, nf: Path, trace: RwTrace) -> dict:
    return {"input": print_path(p), "normal_form": print_path(nf),
            "steps": trace_records(trace)}


def trace_to_json(p: Path, nf: Path, trace: RwTrace) -> str:
    return json.dumps(trace_document(p, nf, trace), indent=2, ensure_ascii=False) + "\n"


def format_trace(trace: RwTrace) -> str:
    lines = []
    for rec in trace_records(trace):
        lines.append(f"{rec['step']:>4}  {rec['rule']:<6} (rule {rec['number']:>2}) at "
                     f"{print_location(rec['position'])}")
        lines.append(f"      {rec['before']}")
        lines.append(f"   => {rec['after']}")
    return "\n".join(lines) + ("\n" if lines else "")
