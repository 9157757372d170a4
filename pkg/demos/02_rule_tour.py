"""A short walk through the rewrite system: a few rules, two strategies,
and a pair of paths where the strategies part ways."""
from cpaths import Loop, Rho, Sigma, Tau, format_trace, normalize, print_path, rule_catalog
from cpaths.syntax import parse_path
from cpaths.terms import Base

print(f"{len(rule_catalog())} rules; the first few:")
for rid, lhs, rhs in rule_catalog()[:6]:
    print(f"  {int(rid):>2} {rid.name:<6} {lhs}  =>  {rhs}")

p = parse_path("(sigma (tau (tau loop (sigma loop)) (tau (rho base) loop)))")
print("\ninput:", print_path(p))
for strategy in ("lo", "priority"):
    nf, trace = normalize(p, strategy=strategy)
    print(f"\n{strategy}: {len(trace)} steps, normal form {print_path(nf)}")
    print(format_trace(trace), end="")

# The catalog has overlaps that do not close up. Here rule tlr and rule
# tsbrl both fire at the root and leave two different normal forms.
from cpaths import Mu, SubR, apply_rule
from cpaths.terms import Var

s = Mu(Loop(), Var("f"))
q = Tau(Rho(s.source), SubR(Loop(), Rho(s.source)))
print("\noverlap:", print_path(q))
print("  tlr   ->", print_path(apply_rule("tlr", q)))
print("  tsbrl ->", print_path(apply_rule("tsbrl", q)))

assert normalize(Tau(Sigma(Loop()), Loop()))[0] == Rho(Base())
