"""Ordered pmf of a short unit-product sequence, step by step."""
from fractions import Fraction as F

from orderedpmf import opm, product, verify_partition_identity
from orderedpmf.pmf import opm_denominators

seq = [F(5, 6), 1, 1, F(6, 5)]
print("sequence:", ", ".join(map(str, seq)), "  product:", product(seq))

# each denominator sums the cyclic partial products starting at that item
for x, d in zip(seq, opm_denominators(seq)):
    print(f"  p({x}) = {x} / {d} = {x / d}")

dist = opm(seq)
print("probabilities:", [str(p) for p in dist.probs], " sum:", sum(dist.probs))

# the terms add to exactly one for any sequence whose product is one
print("identity residual, (2, 3, 1/6):", verify_partition_identity([2, 3, F(1, 6)]))

# rotating the sequence rotates the probabilities with it ...
print("rotated:", [str(p) for p in opm(seq[1:] + seq[:1]).probs])
# ... but swapping two items changes them
print("swapped:", [str(p) for p in opm([F(5, 6), 1, F(6, 5), 1]).probs])
