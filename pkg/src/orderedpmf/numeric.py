"""Dual-mode scalar arithmetic and geometric-mean standardization.

Values live in one of two modes:

* ``exact``: :class:`fractions.Fraction`, closed and loss-free under
  ``+ - * /``.  Integers and :class:`decimal.Decimal` inputs enter here.
* ``approx``: Python ``float`` (IEEE binary64).

A :class:`ValueSequence` holds strictly positive values of a single mode.
Plain ``int`` items adapt to whatever mode the other items dictate, but a
``Fraction`` and a ``float`` in the same sequence is an error.

>>> seq = ValueSequence([Fraction(6, 5), 1, 1, Fraction(5, 6)])
>>> product(seq)
Fraction(1, 1)
>>> geometric_normalize([4, 1]).normalized
ValueSequence([Fraction(2, 1), Fraction(1, 2)])
"""

import math
import numbers
from collections.abc import Sequence
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .exceptions import DomainError

__all__ = [
    "EXACT",
    "APPROX",
    "DEFAULT_TOL_PROD",
    "ValueSequence",
    "NormalizationResult",
    "as_sequence",
    "product",
    "has_unit_product",
    "integer_nth_root",
    "geometric_normalize",
    "random_unit_product",
]

EXACT = "exact"
APPROX = "approx"

DEFAULT_TOL_PROD = 1e-9


def _classify(value, index):
    """Return (mode or None, converted value); None means 'int, adapts'."""
    if isinstance(value, bool):
        raise DomainError(f"item {index}: booleans are not numbers here", index)
    if isinstance(value, numbers.Integral):
        return None, int(value)
    if isinstance(value, Fraction):
        return EXACT, value
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise DomainError(f"item {index}: {value} is not finite", index)
        return EXACT, Fraction(value)
    if isinstance(value, numbers.Rational):
        return EXACT, Fraction(value.numerator, value.denominator)
    if isinstance(value, numbers.Real):
        value = float(value)
        if not math.isfinite(value):
            raise DomainError(f"item {index}: {value} is not finite", index)
        return APPROX, value
    raise DomainError(f"item {index}: unsupported type {type(value).__name__}", index)


class ValueSequence(Sequence):
    """Immutable, nonempty sequence of strictly positive values in one mode.

    Parameters
    ----------
    items : iterable of int, Fraction, Decimal or float
    mode : {"exact", "approx"}, optional
        Force a mode.  ``"approx"`` converts every item to float;
        ``"exact"`` rejects floats.  By default the mode is inferred, and
        an all-integer sequence is exact.
    """

    __slots__ = ("_items", "_mode")

    def __init__(self, items, mode=None):
        if isinstance(items, ValueSequence) and mode in (None, items.mode):
            self._items = items._items
            self._mode = items._mode
            return
        if mode not in (None, EXACT, APPROX):
            raise ValueError(f"unknown mode {mode!r}")
        classified = [_classify(v, i) for i, v in enumerate(items)]
        if not classified:
            raise DomainError("a value sequence needs at least one item")
        modes = {m for m, _ in classified if m is not None}
        if mode == APPROX:
            values = tuple(float(v) for _, v in classified)
        else:
            if len(modes) > 1:
                raise DomainError("cannot mix exact and approximate items in one sequence")
            inferred = modes.pop() if modes else EXACT
            if mode == EXACT and inferred == APPROX:
                raise DomainError("float items cannot enter an exact-mode sequence")
            mode = inferred
            if mode == EXACT:
                values = tuple(Fraction(v) for _, v in classified)
            else:
                values = tuple(float(v) for _, v in classified)
        for i, v in enumerate(values):
            if not v > 0:
                raise DomainError(f"item {i} is {v}; all values must be strictly positive", i)
        self._items = values
        self._mode = mode

    @classmethod
    def _trusted(cls, values, mode):
        obj = cls.__new__(cls)
        obj._items = tuple(values)
        obj._mode = mode
        return obj

    @property
    def items(self):
        return self._items

    @property
    def mode(self):
        return self._mode

    @property
    def is_exact(self):
        return self._mode == EXACT

    def __len__(self):
        return len(self._items)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return ValueSequence._trusted(self._items[index], self._mode)
        return self._items[index]

    def __iter__(self):
        return iter(self._items)

    def __eq__(self, other):
        if isinstance(other, ValueSequence):
            return self._mode == other._mode and self._items == other._items
        return NotImplemented

    def __hash__(self):
        return hash((self._mode, self._items))

    def __repr__(self):
        return f"ValueSequence({list(self._items)!r})"

    def rotate(self, k):
        """Left rotation by ``k`` places: item ``k`` moves to the front."""
        n = len(self._items)
        k %= n
        return ValueSequence._trusted(self._items[k:] + self._items[:k], self._mode)

    def scaled(self, factor):
        """Multiply every item by a positive ``factor``."""
        factor = ValueSequence([factor])
        if self.is_exact and factor.is_exact:
            return ValueSequence._trusted((x * factor[0] for x in self._items), EXACT)
        c = float(factor[0])
        return ValueSequence._trusted((float(x) * c for x in self._items), APPROX)

    def as_approx(self):
        if self._mode == APPROX:
            return self
        return ValueSequence._trusted((float(x) for x in self._items), APPROX)


def as_sequence(values, mode=None):
    """Coerce ``values`` to a :class:`ValueSequence` (no copy if it already is one)."""
    if isinstance(values, ValueSequence) and mode in (None, values.mode):
        return values
    return ValueSequence(values, mode)


def product(seq):
    """Product of all items, in the sequence's mode."""
    seq = as_sequence(seq)
    start = Fraction(1) if seq.is_exact else 1.0
    return math.prod(seq, start=start)


def has_unit_product(seq, tol_prod=None):
    """True iff the product of ``seq`` is one.

    Exact sequences must multiply to exactly 1 and accept only
    ``tol_prod`` of ``None`` or ``0``.  Approximate sequences pass when
    ``|product - 1| <= tol_prod`` (default :data:`DEFAULT_TOL_PROD`).
    """
    seq = as_sequence(seq)
    if seq.is_exact:
        if tol_prod:
            raise DomainError("exact-mode sequences take no product tolerance")
        return product(seq) == 1
    if tol_prod is None:
        tol_prod = DEFAULT_TOL_PROD
    if tol_prod < 0:
        raise ValueError("tol_prod must be nonnegative")
    return abs(product(seq) - 1.0) <= tol_prod


def integer_nth_root(a, n):
    """Return the integer ``r`` with ``r**n == a``, or ``None`` if there is none."""
    if n < 1:
        raise ValueError("root degree must be positive")
    if a < 0:
        raise ValueError("negative radicand")
    if a < 2 or n == 1:
        return a
    if n == 2:
        r = math.isqrt(a)
        return r if r * r == a else None
    # Newton iteration from above on integers.
    x = 1 << -(-a.bit_length() // n)
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x if x**n == a else None


def _log(x):
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def _approx_root(seq):
    """Floating geometric mean: exp(mean log) refined by one Newton step."""
    n = len(seq)
    log_sum = math.fsum(_log(x) for x in seq)
    scale = math.exp(log_sum / n)
    if seq.is_exact:
        ratio = float(product(seq) / Fraction(scale) ** n)
    else:
        ratio = math.exp(log_sum - n * math.log(scale))
    # Newton on s**n = P: s <- s * (1 + (P / s**n - 1) / n)
    return scale * (1.0 + (ratio - 1.0) / n)


@dataclass(frozen=True)
class NormalizationResult:
    """A sequence divided by its geometric mean.

    Attributes
    ----------
    normalized : ValueSequence
        Items divided by ``scale``; their product is one.
    scale : Fraction or float
        The geometric mean of the original items.
    exact : bool
        Whether the root was representable exactly, so that ``normalized``
        stayed in exact mode.
    """

    normalized: ValueSequence
    scale: object
    exact: bool


def geometric_normalize(seq):
    """Divide ``seq`` by its geometric mean so the items multiply to one.

    Exact inputs stay exact when both numerator and denominator of the
    product have integer n-th roots; otherwise the result is a float
    sequence whose product is one to within rounding.

    >>> r = geometric_normalize([Fraction(1, 2), 8])
    >>> r.scale, r.exact
    (Fraction(2, 1), True)
    """
    seq = as_sequence(seq)
    n = len(seq)
    if seq.is_exact:
        p = product(seq)
        num = integer_nth_root(p.numerator, n)
        den = integer_nth_root(p.denominator, n)
        if num is not None and den is not None:
            scale = Fraction(num, den)
            normalized = ValueSequence._trusted((x / scale for x in seq), EXACT)
            return NormalizationResult(normalized, scale, True)
        scale = _approx_root(seq)
        exact_scale = Fraction(scale)
        normalized = ValueSequence._trusted((float(x / exact_scale) for x in seq), APPROX)
        return NormalizationResult(normalized, scale, False)
    scale = _approx_root(seq)
    normalized = ValueSequence._trusted((x / scale for x in seq), APPROX)
    return NormalizationResult(normalized, scale, False)


def random_unit_product(n, rng, low=1, high=100):
    """Random exact sequence of length ``n`` whose product is exactly one.

    The first ``n - 1`` items are ``p/q`` with ``p, q`` uniform on
    ``[low, high]``; the last is the reciprocal of their product.
    ``rng`` is a :class:`random.Random`.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    items = [Fraction(rng.randint(low, high), rng.randint(low, high)) for _ in range(n - 1)]
    items.append(1 / math.prod(items, start=Fraction(1)))
    return ValueSequence._trusted(items, EXACT)
