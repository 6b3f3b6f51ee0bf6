"""Ordered probability mass functions of positive sequences.

The ordered pmf of a sequence ``x_1, ..., x_n`` with ``prod(x) == 1``
assigns ``x_i / D_i`` to item ``i``, where ``D_i`` sums the cyclic partial
products starting at ``x_i``.  Unlike the uniform (APM) and proportional
(GPM) mass functions it depends on the order of the items.
"""

from .evaluator import ComparisonReport, SequenceEvaluation, compare, evaluate_sequence
from .exceptions import CapacityError, DomainError, OPMError, PreconditionError
from .numeric import (
    APPROX,
    EXACT,
    NormalizationResult,
    ValueSequence,
    geometric_normalize,
    has_unit_product,
    product,
    random_unit_product,
)
from .ordering import (
    OrderingClass,
    SearchConfig,
    SearchOutcome,
    canonical_rotation,
    enumerate_cyclic_classes,
    min_variance_ordering,
)
from .pmf import (
    Distribution,
    Moments,
    apm,
    expectation,
    gpm,
    moments,
    opm,
    variance,
    verify_partition_identity,
)

__version__ = "0.1.0"

__all__ = [
    "APPROX",
    "EXACT",
    "CapacityError",
    "ComparisonReport",
    "Distribution",
    "DomainError",
    "Moments",
    "NormalizationResult",
    "OPMError",
    "OrderingClass",
    "PreconditionError",
    "SearchConfig",
    "SearchOutcome",
    "SequenceEvaluation",
    "ValueSequence",
    "apm",
    "canonical_rotation",
    "compare",
    "enumerate_cyclic_classes",
    "evaluate_sequence",
    "expectation",
    "geometric_normalize",
    "gpm",
    "has_unit_product",
    "min_variance_ordering",
    "moments",
    "opm",
    "product",
    "random_unit_product",
    "variance",
    "verify_partition_identity",
]
