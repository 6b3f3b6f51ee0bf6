"""Minimum-variance orderings: exhaustive for small n, local search beyond."""
import random
import time
from fractions import Fraction as F

from orderedpmf import SearchConfig, geometric_normalize, min_variance_ordering

rng = random.Random(7)
scores = [rng.randint(60, 100) for _ in range(8)]
seq = geometric_normalize(scores).normalized
print("scores:", scores, "-> normalized exactly?", seq.is_exact)

t = time.perf_counter()
exact = min_variance_ordering(seq)
print(f"exhaustive: variance {exact.best_variance:.10g} over {exact.classes_examined} classes "
      f"({time.perf_counter() - t:.2f}s)")

local = min_variance_ordering(seq, SearchConfig(mode="local", seed=1))
print(f"local:      variance {local.best_variance:.10g} after {local.classes_examined} evaluations")

# in exact arithmetic the comparison is exact too
values = [F(3, 2), F(2, 3), 2, F(1, 2), F(5, 4), F(4, 5)]
out = min_variance_ordering(values)
print("exact best:", ", ".join(map(str, out.best_ordering)), "variance", out.best_variance)

# n = 14 is past the exhaustive limit, so auto mode searches locally
big = geometric_normalize([rng.randint(60, 100) for _ in range(14)]).normalized
out = min_variance_ordering(big, SearchConfig(seed=42))
print(f"n=14: method {out.method}, variance {out.best_variance:.10g}")
