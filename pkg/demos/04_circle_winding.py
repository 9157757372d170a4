"""Winding numbers on the circle, computed two ways."""
import random

from cpaths import (circle_normalize, group_op, letters, print_path, to_path,
                    winding_by_induction, winding_trace)
from cpaths.generate import word_to_path
from cpaths.syntax import parse_path

w = parse_path("(tau (tau loop (sigma loop)) (sigma (sigma (tau loop loop))))")
n, nf, trace = winding_trace(w)
print(print_path(w))
print(f"  winding {n}, normal form {print_path(nf)}, {len(trace)} rewrite steps")
print("  letters in travel order:", letters(w))
print("  counted letter by letter:", winding_by_induction(w))

print("\ncanonical loops:")
for k in (-2, 0, 3):
    print(f"  {k:>2}: {print_path(to_path(k))}")

# Composition adds winding numbers.
a, b = to_path(3), to_path(-5)
print("\n3 + (-5) =", circle_normalize(group_op(a, b)))

rng = random.Random(1)
word = [rng.choice((1, -1)) for _ in range(40)]
big = word_to_path(rng, word)
print(f"\na random 40-letter word: engine {circle_normalize(big)}, "
      f"induction {winding_by_induction(big)}, count {sum(word)}")
