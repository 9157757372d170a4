"""The circle and its fundamental group, read off as winding numbers.

A loop expression is built from ``loop`` and ``rho(base)`` with ``sigma``
and ``tau`` only. Its canonical form ``loop^n`` is the right-nested chain
produced by :func:`to_path`::

    to_path(2)  == Tau(Loop(), Tau(Loop(), Rho(Base())))
    to_path(-1) == Tau(Sigma(Loop()), Rho(Base()))

The rewrite engine drops the trailing ``rho`` (rule trr), so
:func:`to_integer` accepts chains with or without it.
"""
from __future__ import annotations

from .engine import DEFAULT_FUEL, normalize
from .errors import CanonicalFormError, PreconditionError
from .paths import Loop, Path, Rho, Sigma, Tau, check_well_formed, subpaths
from .syntax import print_location, print_path
from .terms import Base

RHO_BASE = Rho(Base())


def is_loop_expr(p: Path) -> bool:
    return all(isinstance(node, (Loop, Sigma, Tau)) or node == RHO_BASE
               for _, node in subpaths(p))


def check_loop_expr(p: Path) -> None:
    for pos, node in subpaths(p):
        if not (isinstance(node, (Loop, Sigma, Tau)) or node == RHO_BASE):
            raise PreconditionError(
                f"{print_path(node)} at {print_location(pos)} is not a loop expression; "
                "only loop, (rho base), sigma and tau are allowed")
    check_well_formed(p)


def _letter(p: Path) -> int:
    if isinstance(p, Loop):
        return 1
    if isinstance(p, Sigma) and isinstance(p.p, Loop):
        return -1
    return 0


def to_integer(w: Path) -> int:
    """Winding number of a canonical ``loop^n``.

    ``rho`` is 0, ``loop^n`` is the successor of ``loop^(n-1)`` for positive
    ``n`` and the predecessor of ``loop^(n+1)`` for negative ``n``.
    """
    steps = []
    cur = w
    while isinstance(cur, Tau) and _letter(cur.p):
        steps.append(_letter(cur.p))
        cur = cur.q
    if cur == RHO_BASE:
        pass
    elif _letter(cur):
        steps.append(_letter(cur))
    else:
        raise CanonicalFormError(f"not of the form loop^n: {print_path(w)}")
    if len(set(steps)) > 1:
        raise CanonicalFormError(f"mixes loop and (sigma loop): {print_path(w)}")
    n = 0
    for s in reversed(steps):
        n = n + 1 if s > 0 else n - 1
    return n


def to_path(n: int) -> Path:
    """``loop^n``: ``to_path(n-1) o loop`` above zero, ``to_path(n+1) o sigma(loop)`` below."""
    p: Path = RHO_BASE
    letter = Loop() if n > 0 else Sigma(Loop())
    for _ in range(abs(n)):
        p = Tau(letter, p)
    return p


def format_power(n: int) -> str:
    """Short name for the canonical loop: ``rho``, ``loop``, ``loop^3``, ``loop^-2``."""
    if n == 0:
        return "rho"
    return "loop" if n == 1 else f"loop^{n}"


def circle_normalize(w: Path, fuel: int = DEFAULT_FUEL, strategy: str = "lo") -> int:
    check_loop_expr(w)
    nf, _ = normalize(w, fuel, strategy)
    return to_integer(nf)


def winding_trace(w: Path, fuel: int = DEFAULT_FUEL, strategy: str = "lo"):
    check_loop_expr(w)
    nf, trace = normalize(w, fuel, strategy)
    return to_integer(nf), nf, trace


def group_op(r: Path, s: Path) -> Path:
    """``r o s``, which is ``tau(s, r)``."""
    return Tau(s, r)


def group_inverse(r: Path) -> Path:
    return Sigma(r)


def group_identity() -> Path:
    return RHO_BASE


# -- an independent normaliser following the inductive proof ----------------

def letters(w: Path) -> list[int]:
    """The word of ``w`` as +1 (loop) and -1 (sigma loop), in travel order."""
    out = []
    stack = [(w, False)]
    while stack:
        node, flip = stack.pop()
        if isinstance(node, Loop):
            out.append(-1 if flip else 1)
        elif isinstance(node, Sigma):
            stack.append((node.p, not flip))
        elif isinstance(node, Tau):
            first, second = (node.q, node.p) if flip else (node.p, node.q)
            stack.append((second, flip))
            stack.append((first, flip))
        elif node != RHO_BASE:
            raise PreconditionError(f"not a loop expression: {print_path(node)}")
    return out


def extend(n: int, letter: int) -> tuple[int, str]:
    """One inductive step: ``loop^n`` composed with one letter.

    Returns the new exponent and the name of the case used.
    """
    if letter > 0:
        if n == 0:
            return 1, "rho.loop"
        if n > 0:
            return n + 1, "pos.loop"
        return n + 1, "neg.loop"
    if n == 0:
        return -1, "rho.sigma"
    if n > 0:
        return n - 1, "pos.sigma"
    return n - 1, "neg.sigma"


def winding_by_induction(w: Path) -> int:
    n = 0
    for letter in letters(w):
        n, _ = extend(n, letter)
    return n
