"""Search for the ordering of a multiset whose ordered pmf has least variance.

Rotating a sequence rotates its ordered pmf with it, so expectation and
variance are constant on rotation classes.  The exhaustive search therefore
visits one representative per class, the lexicographically smallest
rotation, which for ``n`` distinct values means ``(n-1)!`` evaluations.
Reversal is *not* a symmetry and reversed orderings are separate classes.

Beyond ``max_exhaustive`` items a seeded steepest-descent local search over
adjacent transpositions with random restarts is used instead; its answers
are labelled ``method="local_search"`` and carry no optimality guarantee.
"""

import math
import random
from fractions import Fraction
from itertools import accumulate
from operator import mul
from dataclasses import dataclass
from typing import Optional

from .exceptions import CapacityError, DomainError
from .numeric import EXACT, ValueSequence, as_sequence
from .pmf import opm, require_unit_product, variance

__all__ = [
    "OrderingClass",
    "SearchConfig",
    "SearchOutcome",
    "canonical_rotation",
    "iter_cyclic_classes",
    "enumerate_cyclic_classes",
    "min_variance_ordering",
    "DEFAULT_MAX_EXHAUSTIVE",
]

EXHAUSTIVE = "exhaustive"
LOCAL_SEARCH = "local_search"

DEFAULT_MAX_EXHAUSTIVE = 9
DEFAULT_RESTARTS = 16


@dataclass(frozen=True)
class OrderingClass:
    """One rotation class: its minimal rotation and how many raw orderings it holds."""

    representative: ValueSequence
    class_size: int


@dataclass(frozen=True)
class SearchConfig:
    max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE
    restarts: int = DEFAULT_RESTARTS
    seed: Optional[int] = 0
    mode: str = "auto"  # auto | exhaustive | local
    tol_prod: Optional[float] = None

    def __post_init__(self):
        if self.mode not in ("auto", "exhaustive", "local"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.max_exhaustive < 1:
            raise ValueError("max_exhaustive must be at least 1")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")


@dataclass(frozen=True)
class SearchOutcome:
    best_ordering: ValueSequence
    best_distribution: object
    best_variance: object
    method: str
    classes_examined: int
    seed: Optional[int] = None

    @property
    def representative(self):
        """Canonical (minimal) rotation of :attr:`best_ordering`."""
        return canonical_rotation(self.best_ordering)


def _min_rotation_start(items, key=None):
    n = len(items)
    keyed = list(items) if key is None else [key(i) for i in range(n)]
    best = 0
    best_rot = keyed
    for k in range(1, n):
        rot = keyed[k:] + keyed[:k]
        if rot < best_rot:
            best, best_rot = k, rot
    return best


def canonical_rotation(seq):
    """Lexicographically smallest rotation of ``seq``.

    Items are compared by value, then by their index in ``seq`` so that
    equal values keep a deterministic order.

    >>> from fractions import Fraction as F
    >>> list(canonical_rotation([1, F(6, 5), F(5, 6)]))
    [Fraction(5, 6), Fraction(1, 1), Fraction(6, 5)]
    """
    seq = as_sequence(seq)
    x = seq.items
    start = _min_rotation_start(x, key=lambda i: (x[i], i))
    return seq.rotate(start)


def _period(items):
    n = len(items)
    for p in range(1, n + 1):
        if n % p == 0 and items[p:] + items[:p] == items:
            return p
    return n


def _multiset_permutations(items):
    """Distinct permutations of a sorted list, in lexicographic order."""
    a = list(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _canonical_tuples(values):
    first, rest = values[0], values[1:]
    for tail in _multiset_permutations(rest):
        cand = (first,) + tail
        if _min_rotation_start(cand) == 0:
            yield cand


def iter_cyclic_classes(values, max_exhaustive=DEFAULT_MAX_EXHAUSTIVE):
    """Yield every :class:`OrderingClass` of ``values`` in lexicographic order."""
    seq = as_sequence(values)
    if len(seq) > max_exhaustive:
        raise CapacityError(
            f"{len(seq)} values exceed max_exhaustive={max_exhaustive}; "
            "use local search for sequences this long"
        )
    ordered = sorted(seq)
    for cand in _canonical_tuples(ordered):
        yield OrderingClass(ValueSequence._trusted(cand, seq.mode), _period(cand))


def enumerate_cyclic_classes(values, max_exhaustive=DEFAULT_MAX_EXHAUSTIVE):
    """All rotation-distinct arrangements of the multiset ``values``.

    Raises :class:`CapacityError` when there are more than
    ``max_exhaustive`` values.

    >>> from fractions import Fraction as F
    >>> len(enumerate_cyclic_classes([F(6, 5), 1, 1, F(5, 6)]))
    3
    """
    return list(iter_cyclic_classes(values, max_exhaustive))


def _variance_of_opm(items, mode):
    # With a unit product D_i = x_i * D_{i+1}, so p_i is proportional to the
    # prefix product x_0 ... x_i.  O(n) instead of the O(n^2) definition.
    if mode == EXACT:
        return _exact_variance_of_opm(items)
    weights = list(accumulate(items, mul))
    total = math.fsum(weights)
    mean = math.fsum(w * x for w, x in zip(weights, items)) / total
    return math.fsum(w * (x - mean) ** 2 for w, x in zip(weights, items)) / total


def _exact_variance_of_opm(items):
    # Integer-only: X_i = L x_i and W_i = L^n * prefix_i, one reduction at the end.
    n = len(items)
    scale = math.lcm(*(x.denominator for x in items))
    xs = [x.numerator * (scale // x.denominator) for x in items]
    weights = []
    acc = 1
    for i, v in enumerate(xs):
        acc *= v
        weights.append(acc * scale ** (n - 1 - i))
    total = sum(weights)
    first = sum(w * v for w, v in zip(weights, xs))
    second = sum(w * v * v for w, v in zip(weights, xs))
    return Fraction(second * total - first * first, (scale * total) ** 2)


def _exhaustive(seq):
    best = None
    count = 0
    for cand in _canonical_tuples(sorted(seq)):
        count += 1
        key = (_variance_of_opm(cand, seq.mode), cand)
        if best is None or key < best:
            best = key
    return best, count


def _canonical_key(items):
    k = _min_rotation_start(items)
    return items[k:] + items[:k]


def _descend(start, mode):
    """Steepest descent over adjacent transpositions from ``start``."""
    current = tuple(start)
    current_key = (_variance_of_opm(current, mode), _canonical_key(current))
    evaluations = 1
    n = len(current)
    while True:
        best_move = None
        for i in range(n - 1):
            nb = list(current)
            nb[i], nb[i + 1] = nb[i + 1], nb[i]
            nb = tuple(nb)
            key = (_variance_of_opm(nb, mode), _canonical_key(nb))
            evaluations += 1
            if best_move is None or key < best_move[0]:
                best_move = (key, nb)
        if best_move is None or not best_move[0][0] < current_key[0]:
            return current_key, evaluations
        current_key, current = best_move


def _local_search(seq, restarts, seed):
    best = None
    evaluations = 0
    for r in range(restarts):
        rng = random.Random(f"{seed}:{r}")
        start = list(seq)
        rng.shuffle(start)
        key, used = _descend(start, seq.mode)
        evaluations += used
        if best is None or key < best:
            best = key
    return best, evaluations


def _present(canonical, first):
    """Rotate a canonical tuple so it starts with ``first`` when possible."""
    n = len(canonical)
    starts = [k for k in range(n) if canonical[k] == first]
    if not starts:
        return canonical
    return min(canonical[k:] + canonical[:k] for k in starts)


def min_variance_ordering(values, config=None):
    """Find the arrangement of ``values`` whose ordered pmf has least variance.

    ``values`` must already multiply to one (normalize first).  With
    ``config.mode == "auto"`` the search is exhaustive over rotation classes
    when ``len(values) <= config.max_exhaustive`` and local otherwise.
    Ties in variance go to the lexicographically smallest class
    representative.

    The returned ordering is the optimal class rotated to begin with the
    first input value.
    """
    config = config or SearchConfig()
    seq = as_sequence(values)
    require_unit_product(seq, config.tol_prod)
    n = len(seq)
    method = config.mode
    if method == "auto":
        method = "exhaustive" if n <= config.max_exhaustive else "local"
    if method == "exhaustive":
        if n > config.max_exhaustive:
            raise CapacityError(
                f"{n} values exceed max_exhaustive={config.max_exhaustive}; "
                "use local search for sequences this long"
            )
        (best_var, best_items), examined = _exhaustive(seq)
        label, seed = EXHAUSTIVE, None
    elif method == "local":
        seed = 0 if config.seed is None else config.seed
        (best_var, best_items), examined = _local_search(seq, config.restarts, seed)
        label = LOCAL_SEARCH
    else:  # pragma: no cover - SearchConfig validates mode
        raise DomainError(f"unknown search mode {method!r}")
    ordering = ValueSequence._trusted(_present(best_items, seq[0]), seq.mode)
    dist = opm(ordering, config.tol_prod)
    # Equal to best_var exactly in exact mode; floats may differ in the last ulp.
    return SearchOutcome(ordering, dist, variance(dist), label, examined, seed)
