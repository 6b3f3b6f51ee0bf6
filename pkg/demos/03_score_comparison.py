"""Two players with the same four scores in a different order.

Sample mean and variance cannot tell them apart.  After dividing each
sequence by its geometric mean, the ordered pmf can: the sequence with the
smaller variance is ranked first.
"""
import statistics

from orderedpmf import compare

alice = [90, 95, 85, 90]
bob = [85, 95, 90, 90]
print("mean/variance:", statistics.mean(alice), statistics.pvariance(alice),
      "|", statistics.mean(bob), statistics.pvariance(bob))

report = compare([("Alice", alice), ("Bob", bob)], extras=True)
for ev in report.evaluations:
    probs = " ".join(f"{p:.6f}" for p in ev.distribution.probs)
    print(f"{ev.name:<6} scale={ev.normalization.scale:.6f}  OPM {probs}"
          f"  E={ev.expectation:.6g}  Var={ev.variance:.6g}")
print("winner:", report.winner)

# rescaling a player's scores (say, percent to a 0-1 scale) changes nothing
rescaled = compare([("Alice", [x / 100 for x in alice]), ("Bob", bob)])
print("after rescaling Alice:", rescaled.winner, rescaled.evaluations[0].variance)
