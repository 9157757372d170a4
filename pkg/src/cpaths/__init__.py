"""Computational paths over lambda terms and a rewrite system that normalises them."""

from .circle import (circle_normalize, group_identity, group_inverse, group_op, format_power,
                     is_loop_expr, letters, to_integer, to_path, winding_by_induction, winding_trace)
from .engine import (DEFAULT_FUEL, RwStep, RwTrace, apply_rule, contract_once, format_trace,
                     is_normal, normal_form, normalize, reduce_rho_generated, rw_equal,
                     trace_document, trace_to_json)
from .errors import (CanonicalFormError, CoherenceError, ContractError, CPathError,
                     FuelExhausted, ParseError, PreconditionError, RedexError,
                     UninhabitedError)
from .lambda_paths import (ReductionSequence, SeqStep, find_path, path_from_sequence,
                           reduction_to_normal)
from .nat import STAR, Code, CodeWitness, code, decode, encode, rfun, transport_code
from .paths import (BetaStep, EtaStep, Loop, Mu, Mu1, Mu2, Mu2arg, Mu3arg, Nu, Path, Rho,
                    Sigma, SubL, SubR, Tau, Xi, Xi1, Xi2, XiPair, compose, inverse,
                    well_formed)
from .rules import RuleId, rule_catalog
from .syntax import parse_path, parse_term, print_path, print_term
from .terms import (SUCC, App, Base, Lam, Star, Succ, Term, Var, Zero, alpha_eq, numeral,
                    pretty, substitute)

__version__ = "0.1.0"
