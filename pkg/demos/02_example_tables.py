"""APM, GPM and every rotation-distinct OPM for two small multisets."""
from fractions import Fraction as F

from orderedpmf import apm, enumerate_cyclic_classes, gpm, moments, opm


def row(label, seq, dist):
    m = moments(dist)
    probs = ", ".join(str(p) for p in dist.probs)
    order = ", ".join(str(x) for x in seq)
    print(f"{order:<22} {label}: {probs:<34} E={float(m.expectation):.6g}  Var={float(m.variance):.6g}")


for seq in ([F(6, 5), 1, 1, F(5, 6)], [F(6, 5), F(7, 6), F(6, 7), F(5, 6)]):
    print()
    row("APM", seq, apm(seq))
    row("GPM", seq, gpm(seq))
    variances = []
    for cls in enumerate_cyclic_classes(seq):
        # show each class rotated to start with 6/5, like a hand-made table would
        rep = list(cls.representative)
        k = rep.index(F(6, 5))
        order = rep[k:] + rep[:k]
        dist = opm(order)
        variances.append((moments(dist).variance, order))
        row("OPM", order, dist)
    best_var, best = min(variances)
    print("smallest OPM variance:", ", ".join(map(str, best)), f"{float(best_var):.6g}")
    print("GPM variance:         ", f"{float(moments(gpm(seq)).variance):.6g}")
