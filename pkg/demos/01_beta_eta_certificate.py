"""Two lambda terms, one equality, and the path that proves it.

Run:  python3 demos/01_beta_eta_certificate.py
"""
from cpaths import find_path, normalize, pretty, print_path, reduction_to_normal
from cpaths.syntax import parse_term

left = parse_term("(app (lam x (app (lam y (app (var y) (var x))) (lam w (app (var z) (var w))))) (var v))")
right = parse_term("(app (var z) (var v))")

print("left :", pretty(left))
print("right:", pretty(right))

# The reduction strategy contracts eta redexes before beta ones.
seq = reduction_to_normal(left)
for before, step, after in zip(seq.terms, seq.steps, seq.terms[1:]):
    print(f"  {step.kind:<4} at {list(step.loc)!s:<10} {pretty(before)}  ->  {pretty(after)}")

p = find_path(left, right)
print("\ncertificate:")
print(" ", print_path(p))

# The certificate is itself a path, so it can be rewritten. Composing it
# with its own inverse collapses back to reflexivity.
from cpaths import Rho, Sigma, Tau

nf, trace = normalize(Tau(p, Sigma(p)))
print(f"\np followed by sigma(p), normal form after {len(trace)} step(s):")
print(" ", print_path(nf))
assert nf == Rho(left)
