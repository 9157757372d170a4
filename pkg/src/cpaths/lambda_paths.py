"""Paths that certify beta-eta equality of two lambda terms."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CoherenceError, FuelExhausted
from .paths import BetaStep, EtaStep, Path, Rho, Sigma, Tau
from .terms import Term, contract_at, format_location, next_redex, redex_kind, subterm_at

FORWARD = "forward"
REVERSED = "reversed"


@dataclass(frozen=True)
class SeqStep:
    loc: tuple
    kind: str  # "beta", "eta" or "alpha"
    direction: str = FORWARD


@dataclass(frozen=True)
class ReductionSequence:
    """Terms ``P0 .. Pn`` and the one-step relation between each neighbouring pair."""

    terms: tuple
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "steps", tuple(self.steps))
        if len(self.terms) != len(self.steps) + 1:
            raise CoherenceError(
                f"a sequence of {len(self.steps)} steps needs {len(self.steps) + 1} terms, "
                f"got {len(self.terms)}")


def _atom(t: Term, step: SeqStep) -> Path:
    cls = BetaStep if step.kind == "beta" else EtaStep
    return cls(t, step.loc)


def path_from_sequence(seq: ReductionSequence) -> Path:
    """Fold the steps into one path with left-nested ``Tau``.

    A reversed step contributes ``Sigma`` of the forward contraction; alpha
    steps contribute nothing since terms are compared up to renaming.
    """
    terms = seq.terms
    if not terms:
        raise CoherenceError("empty reduction sequence")
    path = None
    for i, step in enumerate(seq.steps):
        here, there = terms[i], terms[i + 1]
        if step.kind == "alpha":
            if here != there:
                raise CoherenceError(f"step {i}: terms differ by more than renaming",
                                     here, there, i)
            continue
        start = here if step.direction == FORWARD else there
        end = there if step.direction == FORWARD else here
        try:
            if redex_kind(subterm_at(start, step.loc)) != step.kind:
                raise ValueError
            got = contract_at(start, step.loc)
        except Exception:
            raise CoherenceError(
                f"step {i}: no {step.kind}-redex at {format_location(step.loc)}",
                start, end, i) from None
        if got != end:
            raise CoherenceError(f"step {i}: contracting gives {got}, not {end}", got, end, i)
        atom = _atom(start, step)
        if step.direction == REVERSED:
            atom = Sigma(atom)
        path = atom if path is None else Tau(path, atom)
    return Rho(terms[0]) if path is None else path


def reduction_to_normal(t: Term, fuel: int = 1000) -> ReductionSequence:
    """Contract redexes (eta before beta, each leftmost-outermost) to normal form."""
    terms, steps = [t], []
    for _ in range(fuel):
        nxt = next_redex(terms[-1])
        if nxt is None:
            return ReductionSequence(terms, steps)
        loc, kind = nxt
        terms.append(contract_at(terms[-1], loc))
        steps.append(SeqStep(loc, kind))
    if next_redex(terms[-1]) is None:
        return ReductionSequence(terms, steps)
    raise FuelExhausted(f"no beta-eta normal form within {fuel} steps",
                        partial=ReductionSequence(terms, steps))


def find_path(m: Term, n: Term, fuel: int = 1000) -> Path | None:
    """A path from ``m`` to ``n`` through their common normal form, or None.

    The certificate is ``m -> nf`` followed by the inverse of ``n -> nf``;
    an empty half is left out, so an already normal ``n`` gives exactly the
    forward reduction of ``m``.
    """
    seqs = []
    for side, t in (("left", m), ("right", n)):
        try:
            seqs.append(reduction_to_normal(t, fuel))
        except FuelExhausted as e:
            raise FuelExhausted(f"{side} term has no normal form within {fuel} steps",
                                partial=e.partial, side=side) from None
    sm, sn = seqs
    if sm.terms[-1] != sn.terms[-1]:
        return None
    if not sm.steps and not sn.steps:
        return Rho(m)
    down = path_from_sequence(sm) if sm.steps else None
    up = Sigma(path_from_sequence(sn)) if sn.steps else None
    if down is None:
        return up
    if up is None:
        return down
    return Tau(down, up)
