"""Twist normalisation and the finite classification lists.

Twisting a bundle weight by the polarization shifts every datum entry by
an integer, so the no-intermediate-cohomology property only depends on
the twist class.  Each class has a unique representative whose datum
minimum lies in ``(0, 1]``; those representatives with non-negative
coefficients form a finite search box, because an admissible weight must
keep the datum maximum below ``dim X + 1`` and the sum of all simple
roots witnesses that bound as a single linear inequality.

``enumerate_acm`` reports the classification the way such lists are
usually displayed: every admissible weight inside the smallest
coordinate box spanned by the twist-normalised representatives.  On
spaces with a single marked node the box adds nothing and the output is
exactly the set of representatives; with several marked nodes it also
contains the handful of twists that stay inside the box (for example the
nine line bundles ``0 <= a_1, a_2 <= 2`` on the full flag space of type
G2, three of which are twists of the trivial class).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil
from typing import Iterator, Sequence

from .datum import PolarizedSpace, is_acm, is_ulrich
from .roots import Coeffs

DEFAULT_CAP = 10_000_000


class EnumerationCapExceeded(RuntimeError):
    """Raised when an enumeration would inspect more candidates than allowed."""


@dataclass(frozen=True)
class CanonicalBundle:
    """A weight split as ``weight = representative + twist * varpi``."""

    representative: Coeffs
    twist: int


def normalized_minimum(ps: PolarizedSpace, weight: Sequence[int]) -> Fraction:
    """Datum minimum ``min_i (a_i + 1) / n_i`` over the marked nodes."""
    return min(
        Fraction(weight[i - 1] + 1, n) for i, n in zip(ps.marked, ps.polarization)
    )


def canonical_twist(ps: PolarizedSpace, weight: Sequence[int]) -> CanonicalBundle:
    """Normalise a weight so its datum minimum lies in ``(0, 1]``.

    Idempotent, and equivariant: twisting the input by ``k * varpi``
    changes only the reported twist.
    """
    weight = ps.validate_weight(weight)
    twist = ceil(normalized_minimum(ps, weight)) - 1
    shifted = tuple(a - twist * w for a, w in zip(weight, ps.ample_weight))
    return CanonicalBundle(shifted, twist)


def is_canonical(ps: PolarizedSpace, weight: Sequence[int]) -> bool:
    """Non-negative on the marked nodes with datum minimum in ``(0, 1]``."""
    marked = [weight[i - 1] for i in ps.marked]
    if any(a < 0 for a in marked):
        return False
    return any(a + 1 <= n for a, n in zip(marked, ps.polarization))


def candidate_box(
    ps: PolarizedSpace,
    cap: int = DEFAULT_CAP,
    tight: bool = False,
) -> Iterator[Coeffs]:
    """Every twist-normalised weight that could possibly be admissible.

    Yields all non-negative canonical weights with
    ``sum_i (a_i + 1) s_i <= (dim X + 1) * (varpi, alpha_hat)`` where
    ``alpha_hat`` is the sum of all simple roots; with ``tight=True``
    the same bound is additionally imposed root by root over all of the
    quotient roots, which prunes candidates but keeps every admissible
    weight.  Raises :class:`EnumerationCapExceeded` after ``cap``
    candidates.
    """
    rank = ps.rank
    lengths = ps.rs.half_lengths
    budget = (ps.dimension + 1) * sum(
        n * lengths[i - 1] for i, n in zip(ps.marked, ps.polarization)
    )
    # minimal residual cost of the still-unchosen coordinates
    residual = [0] * (rank + 1)
    for k in range(rank - 1, -1, -1):
        residual[k] = residual[k + 1] + lengths[k]
    seen = 0
    vector = [0] * rank

    def admissible(candidate: Coeffs) -> bool:
        if not is_canonical(ps, candidate):
            return False
        if tight:
            shifted = [a + 1 for a in candidate]
            bound = ps.dimension + 1
            for row, den in zip(ps._rows, ps._denominators):
                if sum(c * x for c, x in zip(row, shifted)) > bound * den:
                    return False
        return True

    def walk(k: int, cost: int) -> Iterator[Coeffs]:
        nonlocal seen
        if k == rank:
            seen += 1
            if seen > cap:
                raise EnumerationCapExceeded(
                    f"candidate cap {cap} exceeded while enumerating on {ps.lie_type}"
                    f"/P{list(ps.marked)}; raise the cap to continue"
                )
            candidate = tuple(vector)
            if admissible(candidate):
                yield candidate
            return
        top = (budget - cost - residual[k + 1]) // lengths[k] - 1
        for value in range(0, top + 1):
            vector[k] = value
            yield from walk(k + 1, cost + (value + 1) * lengths[k])
        vector[k] = 0

    return walk(0, 0)


def _coordinate_hull(weights: Sequence[Coeffs]) -> tuple[range, ...]:
    return tuple(range(max(w[k] for w in weights) + 1) for k in range(len(weights[0])))


def enumerate_acm(
    ps: PolarizedSpace,
    cap: int = DEFAULT_CAP,
    tight: bool = False,
) -> list[Coeffs]:
    """All admissible weights inside the hull of the twist-normalised ones.

    First filters the candidate box down to the canonical representatives
    that pass :func:`homacm.datum.is_acm`, then lists every passing
    weight inside their coordinate hull, in lexicographic order.
    """
    winners = [w for w in candidate_box(ps, cap=cap, tight=tight) if is_acm(ps, w)]
    if not winners:
        return []
    hull = _coordinate_hull(winners)
    seen = 0
    out = []
    for candidate in product(*hull):
        seen += 1
        if seen > cap:
            raise EnumerationCapExceeded(f"candidate cap {cap} exceeded in hull scan")
        if is_acm(ps, candidate):
            out.append(candidate)
    return sorted(out)


def enumerate_ulrich(ps: PolarizedSpace, cap: int = DEFAULT_CAP) -> list[Coeffs]:
    """All weights whose datum is exactly ``{1, ..., dim X}``.

    No twist normalisation is applied to the output: the property is
    twist-sensitive, and any weight with it already has datum minimum
    one, hence lies in the canonical candidate box.
    """
    return sorted(w for w in candidate_box(ps, cap=cap) if is_ulrich(ps, w))
