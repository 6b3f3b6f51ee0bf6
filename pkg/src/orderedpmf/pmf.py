"""Average, general and ordered probability mass functions and their moments.

Given a positive sequence ``x_1, ..., x_n``:

==========  ==============================================================
``apm``     every outcome gets ``1/n``
``gpm``     outcome ``i`` gets ``x_i / sum(x)``
``opm``     outcome ``i`` gets ``x_i / D_i``, where ``D_i`` is the sum of
            the cyclic partial products that start at ``x_i``:
            ``1 + x_i + x_i x_{i+1} + ... + x_i ... x_{i-2}``.  Requires
            ``prod(x) == 1``, and depends on the order of the items.
==========  ==============================================================

Repeated values stay separate outcomes with their own probabilities.

>>> from fractions import Fraction as F
>>> d = opm([F(5, 6), 1, 1, F(6, 5)])
>>> [str(p) for p in d.probs]
['5/21', '5/21', '5/21', '2/7']
>>> expectation(opm([F(6, 5), 1, 1, F(5, 6)]))
Fraction(701, 690)
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DomainError, PreconditionError
from .numeric import (
    APPROX,
    EXACT,
    ValueSequence,
    as_sequence,
    has_unit_product,
    product,
)

__all__ = [
    "APM",
    "GPM",
    "OPM",
    "Distribution",
    "Moments",
    "apm",
    "gpm",
    "opm",
    "opm_denominators",
    "expectation",
    "variance",
    "moments",
    "verify_partition_identity",
    "require_unit_product",
]

APM = "APM"
GPM = "GPM"
OPM = "OPM"
KINDS = (APM, GPM, OPM)

# An approximate OPM built from a product accepted at the default
# tol_prod can miss 1 by roughly that much, so this is not 1e-12.
APPROX_SUM_TOL = 1e-9


def _sum(values, mode):
    if mode == EXACT:
        return sum(values, Fraction(0))
    return math.fsum(values)


@dataclass(frozen=True)
class Distribution:
    """Probabilities attached to the items of a sequence, in sequence order."""

    support: ValueSequence
    probs: tuple
    kind: str

    def __post_init__(self):
        support = as_sequence(self.support)
        object.__setattr__(self, "support", support)
        if support.is_exact:
            probs = tuple(Fraction(p) for p in self.probs)
        else:
            probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        if len(probs) != len(support):
            raise DomainError(f"{len(support)} support values but {len(probs)} probabilities")
        for i, p in enumerate(probs):
            if not 0 < p <= 1 + (0 if support.is_exact else APPROX_SUM_TOL):
                raise DomainError(f"probability {i} is {p}, outside (0, 1]", i)
        total = _sum(probs, support.mode)
        if support.is_exact:
            if total != 1:
                raise DomainError(f"probabilities sum to {total}, not 1")
        elif abs(total - 1.0) > APPROX_SUM_TOL:
            raise DomainError(f"probabilities sum to {total!r}, not 1")

    @property
    def mode(self):
        return self.support.mode

    def __len__(self):
        return len(self.probs)

    def pairs(self):
        """List of ``(value, probability)`` tuples."""
        return list(zip(self.support, self.probs))


@dataclass(frozen=True)
class Moments:
    expectation: object
    variance: object


def apm(seq):
    """Uniform distribution over the items of ``seq``."""
    seq = as_sequence(seq)
    n = len(seq)
    p = Fraction(1, n) if seq.is_exact else 1.0 / n
    return Distribution(seq, (p,) * n, APM)


def gpm(seq):
    """Distribution proportional to the item values."""
    seq = as_sequence(seq)
    total = _sum(seq, seq.mode)
    return Distribution(seq, tuple(x / total for x in seq), GPM)


def require_unit_product(seq, tol_prod=None):
    """Raise :class:`PreconditionError` unless ``prod(seq) == 1``.

    ``tol_prod`` only applies to approximate sequences.
    """
    seq = as_sequence(seq)
    if not has_unit_product(seq, None if seq.is_exact else tol_prod):
        p = product(seq)
        raise PreconditionError(
            f"ordered pmf needs a unit product, got {p} (normalize the sequence first)",
            product=p,
        )
    return seq


def opm_denominators(seq):
    """The cyclic partial-product sums ``D_i`` for every start index.

    ``D_i = sum_{k=0}^{n-1} prod_{j=0}^{k-1} x_{(i+j) mod n}``.  No
    unit-product check is made here.
    """
    seq = as_sequence(seq)
    n = len(seq)
    x = seq.items
    one = Fraction(1) if seq.is_exact else 1.0
    out = []
    for i in range(n):
        term = one
        total = 0
        for k in range(n):
            total += term
            term *= x[(i + k) % n]
        out.append(total)
    return out


def _opm_terms(seq):
    return [x / d for x, d in zip(seq, opm_denominators(seq))]


def opm(seq, tol_prod=None):
    """Ordered probability mass function of a unit-product sequence.

    Raises
    ------
    PreconditionError
        If the product of ``seq`` is not one (exactly, or within
        ``tol_prod`` for floats).  The measured product is attached.
    """
    seq = require_unit_product(seq, tol_prod)
    return Distribution(seq, tuple(_opm_terms(seq)), OPM)


def expectation(dist):
    """sum_i x_i p_i"""
    return _sum((x * p for x, p in zip(dist.support, dist.probs)), dist.mode)


def variance(dist):
    """Centered two-pass variance sum_i p_i (x_i - E)^2."""
    mean = expectation(dist)
    return _sum((p * (x - mean) ** 2 for x, p in zip(dist.support, dist.probs)), dist.mode)


def moments(dist):
    mean = expectation(dist)
    var = _sum((p * (x - mean) ** 2 for x, p in zip(dist.support, dist.probs)), dist.mode)
    return Moments(mean, var)


def verify_partition_identity(seq, tol_prod=None):
    """Return ``sum_i x_i / D_i - 1`` for a unit-product sequence.

    For exact input this is ``Fraction(0)`` whenever the identity holds,
    which it does for every unit-product sequence.
    """
    seq = require_unit_product(seq, tol_prod)
    terms = _opm_terms(seq)
    if seq.mode == APPROX:
        return math.fsum(terms) - 1.0
    return sum(terms, Fraction(0)) - 1
