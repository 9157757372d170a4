"""Paths between numerals, measured by a code family.

code(m, n) is the unit type when m = n and the empty type otherwise.
encode turns a path into a witness; decode turns a witness back into a path.
"""
import random

from cpaths import STAR, code, decode, encode, normal_form, print_path, rw_equal
from cpaths.generate import nat_path
from cpaths.errors import UninhabitedError

for m, n in [(0, 0), (2, 2), (2, 3), (5, 1)]:
    print(f"code({m}, {n}) = {code(m, n).value}")

p = decode(3, 3, STAR)
print("\ndecode(3, 3, star) =", print_path(p))
print("encode back        =", encode(3, 3, p).witness)

try:
    decode(2, 0, STAR)
except UninhabitedError as e:
    print("\ndecode(2, 0, _):", e)

rng = random.Random(3)
q = nat_path(rng, 4, depth=5)
print("\na generated path at 4:", print_path(q))
print("its normal form      :", print_path(normal_form(q)))
print("decode(encode(q)) rw-equal to it:", rw_equal(decode(4, 4, encode(4, 4, q)), q))
