"""Compare raw positive score sequences by the variance of their ordered pmf.

Each sequence is divided by its own geometric mean so that it multiplies to
one, its ordered pmf is taken in the order given (never sorted), and the
sequences are ranked by ascending variance.  The smallest variance wins.
This is a decision rule taken as given, not a statistical test.

>>> report = compare([("Alice", [90, 95, 85, 90]), ("Bob", [85, 95, 90, 90])])
>>> report.winner
'Bob'
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .exceptions import DomainError
from .numeric import NormalizationResult, ValueSequence, as_sequence, geometric_normalize
from .pmf import Distribution, Moments, apm, gpm, moments, opm

__all__ = [
    "SequenceEvaluation",
    "ComparisonReport",
    "evaluate_sequence",
    "compare",
    "DEFAULT_TOL_TIE",
]

DEFAULT_TOL_TIE = 1e-12


@dataclass(frozen=True)
class SequenceEvaluation:
    name: str
    raw: ValueSequence
    normalization: NormalizationResult
    distribution: Distribution
    moments: Moments
    extras: Optional[dict] = None

    @property
    def variance(self):
        return self.moments.variance

    @property
    def expectation(self):
        return self.moments.expectation


@dataclass(frozen=True)
class ComparisonReport:
    evaluations: list
    ranking: list
    winner: object  # a name, or a tuple of tied names
    tie: bool
    table_extras: Optional[dict] = None
    warnings: list = field(default_factory=list)

    def evaluation(self, name):
        for ev in self.evaluations:
            if ev.name == name:
                return ev
        raise KeyError(name)


def evaluate_sequence(name, scores, extras=False):
    """Normalize ``scores`` and attach its ordered pmf and moments.

    With ``extras=True`` the APM and GPM of the normalized sequence, with
    their moments, are stored under ``evaluation.extras``.
    """
    try:
        raw = as_sequence(scores)
    except DomainError as exc:
        if exc.index is not None:
            raise DomainError(f"{name}: score {exc.index}: {exc}", exc.index) from exc
        raise DomainError(f"{name}: {exc}") from exc
    norm = geometric_normalize(raw)
    dist = opm(norm.normalized)
    extra = None
    if extras:
        extra = {}
        for d in (apm(norm.normalized), gpm(norm.normalized)):
            extra[d.kind] = (d, moments(d))
    return SequenceEvaluation(name, raw, norm, dist, moments(dist), extra)


def compare(entries, tol_tie=None, extras=False):
    """Rank labelled score sequences by ascending ordered-pmf variance.

    Parameters
    ----------
    entries : iterable of (label, scores)
    tol_tie : float, optional
        Variances within ``tol_tie`` of the smallest are tied with it.
        Defaults to 0 when every evaluation is exact and to
        :data:`DEFAULT_TOL_TIE` otherwise.
    extras : bool
        Also compute APM/GPM rows for context.

    Ties are reported as a tuple of names in ``winner`` and never broken.
    """
    entries = list(entries)
    if not entries:
        raise DomainError("compare needs at least one entry")
    names = [name for name, _ in entries]
    dupes = sorted(n for n, c in Counter(names).items() if c > 1)
    if dupes:
        raise DomainError(f"duplicate labels: {', '.join(map(str, dupes))}")
    if tol_tie is not None and tol_tie < 0:
        raise ValueError("tol_tie must be nonnegative")

    evaluations = [evaluate_sequence(name, scores, extras) for name, scores in entries]
    all_exact = all(ev.distribution.support.is_exact for ev in evaluations)
    if tol_tie is None:
        tol_tie = 0 if all_exact else DEFAULT_TOL_TIE

    order = sorted(range(len(evaluations)), key=lambda i: (evaluations[i].variance, i))
    ranking = [evaluations[i].name for i in order]
    lowest = evaluations[order[0]].variance
    tied = tuple(
        evaluations[i].name for i in order if evaluations[i].variance - lowest <= tol_tie
    )
    winner = tied[0] if len(tied) == 1 else tied

    warnings = []
    multisets = {tuple(sorted(ev.raw)) for ev in evaluations}
    if len(multisets) > 1:
        warnings.append(
            "entries do not share one multiset of scores; each was normalized "
            "by its own geometric mean"
        )
    table_extras = {ev.name: ev.extras for ev in evaluations} if extras else None
    return ComparisonReport(evaluations, ranking, winner, len(tied) > 1, table_extras, warnings)
