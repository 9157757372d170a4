"""The path space of the natural numbers: code, encode and decode."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .engine import normal_form
from .errors import CoherenceError, ContractError, UninhabitedError
from .paths import Mu, Path, Rho, check_well_formed
from .terms import SUCC, Star, Succ, Term, Zero, numeral, numeral_value


class Code(enum.Enum):
    UNIT = "1"
    EMPTY = "0"


@dataclass(frozen=True)
class CodeWitness:
    inhabited: bool
    witness: Optional[Term] = None

    def __post_init__(self):
        if self.inhabited and self.witness != Star():
            raise ValueError("an inhabited code is witnessed by star")
        if not self.inhabited and self.witness is not None:
            raise ValueError("the empty code has no witness")


STAR = CodeWitness(True, Star())
UNINHABITED = CodeWitness(False)


def as_numeral(n) -> Term:
    if isinstance(n, int):
        return numeral(n)
    if numeral_value(n) is None:
        raise ValueError(f"{n} is not a numeral")
    return n


def code(m, n) -> Code:
    m, n = as_numeral(m), as_numeral(n)
    while True:
        if isinstance(m, Zero) and isinstance(n, Zero):
            return Code.UNIT
        if isinstance(m, Succ) and isinstance(n, Zero):
            return Code.EMPTY
        if isinstance(m, Zero) and isinstance(n, Succ):
            return Code.EMPTY
        m, n = m.pred, n.pred


def rfun(n) -> CodeWitness:
    """The canonical element of ``code(n, n)``."""
    n = as_numeral(n)
    while isinstance(n, Succ):
        n = n.pred
    return STAR


def witnesses(w: CodeWitness, m, n) -> bool:
    return code(m, n) is Code.UNIT and w.inhabited


def _endpoint_numerals(p: Path) -> tuple[int, int]:
    a, b = numeral_value(p.source), numeral_value(p.target)
    if a is None or b is None:
        raise CoherenceError(f"not a path between numerals: {p.source} = {p.target}",
                             p.source, p.target)
    return a, b


def transport_code(m, p: Path, w: CodeWitness) -> CodeWitness:
    """Carry ``w : code(m, a)`` along ``p : a = b`` to a witness of ``code(m, b)``.

    ``p`` is normalised first; only a reflexivity is accepted, along which
    transport is the identity.
    """
    check_well_formed(p)
    a, b = _endpoint_numerals(p)
    if not witnesses(w, m, a):
        raise ContractError(f"{w} does not witness code({numeral_value(as_numeral(m))}, {a})")
    nf = normal_form(p)
    if not isinstance(nf, Rho):
        raise ContractError(f"path does not reduce to a reflexivity: {nf}")
    return w


def encode(m, n, p: Path) -> CodeWitness:
    check_well_formed(p)
    a, b = _endpoint_numerals(p)
    mi, ni = numeral_value(as_numeral(m)), numeral_value(as_numeral(n))
    if (a, b) != (mi, ni):
        raise CoherenceError(f"path goes from {a} to {b}, expected {mi} to {ni}", a, mi)
    return transport_code(m, p, rfun(m))


def decode(m, n, c: CodeWitness) -> Path:
    """Build ``mu_succ^k(rho_0)``; raises UninhabitedError when ``code(m, n)`` is empty."""
    m, n = as_numeral(m), as_numeral(n)
    if code(m, n) is Code.EMPTY:
        raise UninhabitedError(
            f"code({numeral_value(m)}, {numeral_value(n)}) is empty, so it has no element to decode")
    if not c.inhabited:
        raise UninhabitedError("decode needs an element of code(m, n)")
    depth = numeral_value(m)
    p: Path = Rho(Zero())
    for _ in range(depth):
        p = Mu(p, SUCC)
    return p


def nat_path_normalizes_to_rho(p: Path) -> bool:
    return isinstance(normal_form(p), Rho)
