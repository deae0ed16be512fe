"""Polarized homogeneous spaces, associated data and the ACM/Ulrich tests.

A rational homogeneous space is fixed by a simple Lie type together with
a non-empty set ``I`` of marked nodes; a polarization assigns a positive
integer ``n_i`` to each marked node, giving the very ample weight
``varpi = sum n_i lambda_i``.  The irreducible bundle with highest
weight ``lambda`` is summarised by its *associated datum*: the multiset

    { (lambda + rho, alpha) / (varpi, alpha) : alpha positive, (varpi, alpha) != 0 }

of exact rationals, one per root not annihilated by the polarization.
The bundle has no intermediate cohomology in any twist iff every integer
between the minimum and maximum of the datum occurs in it, and it is
Ulrich iff the datum is exactly {1, ..., dim X}.  An independent check
of the first criterion walks the twists directly and classifies each
shifted weight as dominant-regular, antidominant-regular or singular.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, gcd
from typing import Optional, Sequence

from .roots import Coeffs, LieType, RootSystem, build, weyl_dimension


@dataclass(frozen=True)
class PolarizedSpace:
    """A homogeneous space with marked nodes and polarization weights.

    ``marked`` is the strictly increasing tuple of marked node indices
    (1-based); ``polarization[k]`` is the positive weight attached to
    ``marked[k]``.  All derived data is precomputed lazily and cached,
    so instances are cheap to share and reuse across queries.
    """

    rs: RootSystem
    marked: Coeffs
    polarization: Coeffs

    def __post_init__(self) -> None:
        n = self.rs.rank
        if not self.marked:
            raise ValueError("the marked index set must be non-empty")
        if list(self.marked) != sorted(set(self.marked)):
            raise ValueError(f"marked indices {self.marked} must be strictly increasing")
        if self.marked[0] < 1 or self.marked[-1] > n:
            raise ValueError(f"marked indices {self.marked} out of range 1..{n}")
        if len(self.polarization) != len(self.marked):
            raise ValueError("need one polarization weight per marked index")
        if any(w < 1 for w in self.polarization):
            raise ValueError(f"polarization weights {self.polarization} must be positive")

    @property
    def lie_type(self) -> LieType:
        return self.rs.lie_type

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def is_minimal(self) -> bool:
        return all(w == 1 for w in self.polarization)

    @cached_property
    def ample_weight(self) -> Coeffs:
        """The polarization in weight coordinates (zero off the marked nodes)."""
        weight = [0] * self.rank
        for index, value in zip(self.marked, self.polarization):
            weight[index - 1] = value
        return tuple(weight)

    @cached_property
    def quotient_roots(self) -> tuple[Coeffs, ...]:
        """Positive roots not annihilated by the polarization.

        Equivalently the roots with a nonzero coefficient at some marked
        node; their number is the dimension of the space.  Order follows
        ``rs.positive_roots``.
        """
        marked0 = [i - 1 for i in self.marked]
        return tuple(
            root for root in self.rs.positive_roots if any(root[i] for i in marked0)
        )

    @cached_property
    def levi_roots(self) -> tuple[Coeffs, ...]:
        """Positive roots supported away from the marked nodes."""
        quotient = set(self.quotient_roots)
        return tuple(root for root in self.rs.positive_roots if root not in quotient)

    @property
    def dimension(self) -> int:
        return len(self.quotient_roots)

    # Per-root integer data reused by every weight query on this space:
    # numerator rows are the pairing coefficients l_k * s_k, denominators
    # are (varpi, alpha).
    @cached_property
    def _rows(self) -> tuple[Coeffs, ...]:
        s = self.rs.half_lengths
        return tuple(tuple(l * w for l, w in zip(root, s)) for root in self.quotient_roots)

    @cached_property
    def _denominators(self) -> Coeffs:
        return tuple(self.rs.pairing(self.ample_weight, root) for root in self.quotient_roots)

    def validate_weight(self, weight: Sequence[int]) -> Coeffs:
        """Check that a weight is a legal highest weight for this space.

        Coefficients at unmarked nodes must be non-negative; marked
        coefficients may be any integer (twisting moves them freely).
        """
        if len(weight) != self.rank:
            raise ValueError(f"expected weight of length {self.rank}, got {len(weight)}")
        marked = set(self.marked)
        for position, value in enumerate(weight, start=1):
            if position not in marked and value < 0:
                raise ValueError(
                    f"coefficient a_{position} = {value} must be >= 0 at unmarked node"
                )
        return tuple(weight)


def space(lt: LieType, marked: Sequence[int], polarization: Optional[Sequence[int]] = None) -> PolarizedSpace:
    """Convenience constructor; polarization defaults to all ones."""
    marked = tuple(marked)
    if polarization is None:
        polarization = (1,) * len(marked)
    return PolarizedSpace(build(lt), marked, tuple(polarization))


def reduced_ratio_pairs(ps: PolarizedSpace, weight: Sequence[int]) -> list[tuple[int, int]]:
    """Datum entries as reduced ``(numerator, denominator)`` integer pairs.

    Hot path shared by the public datum object and the bulk verification
    sweeps; denominators are always positive.
    """
    shifted = [a + 1 for a in weight]
    pairs = []
    for row, den in zip(ps._rows, ps._denominators):
        num = sum(c * x for c, x in zip(row, shifted))
        g = gcd(num, den)
        pairs.append((num // g, den // g))
    return pairs


@dataclass(frozen=True)
class AssociatedDatum:
    """The multiset of twist ratios attached to one bundle weight."""

    entries: tuple[Fraction, ...]  # sorted, with multiplicity

    @cached_property
    def multiplicities(self) -> Counter:
        return Counter(self.entries)

    @property
    def minimum(self) -> Fraction:
        return self.entries[0]

    @property
    def maximum(self) -> Fraction:
        return self.entries[-1]

    def multiplicity(self, value: Fraction | int) -> int:
        return self.multiplicities[Fraction(value)]

    def __len__(self) -> int:
        return len(self.entries)


def associated_datum(ps: PolarizedSpace, weight: Sequence[int]) -> AssociatedDatum:
    """Compute the associated datum of a bundle weight, exactly.

    >>> ps = space(LieType("B", 2), [1])
    >>> [str(e) for e in associated_datum(ps, (0, 1)).entries]
    ['1', '2', '3']
    """
    weight = ps.validate_weight(weight)
    entries = sorted(Fraction(n, d) for n, d in reduced_ratio_pairs(ps, weight))
    datum = AssociatedDatum(tuple(entries))
    # The minimum always comes from a simple root at a marked node.
    assert datum.minimum == min(
        Fraction(weight[i - 1] + 1, n) for i, n in zip(ps.marked, ps.polarization)
    )
    return datum


def is_acm(ps: PolarizedSpace, weight: Sequence[int]) -> bool:
    """Whether the bundle has no intermediate cohomology in any twist.

    True iff every integer ``l`` with ``min(T) <= l <= max(T)`` occurs
    in the datum ``T``.
    """
    weight = ps.validate_weight(weight)
    pairs = reduced_ratio_pairs(ps, weight)
    integers = {num for num, den in pairs if den == 1}
    low = min(Fraction(n, d) for n, d in pairs)
    high = max(Fraction(n, d) for n, d in pairs)
    return all(l in integers for l in range(ceil(low), floor(high) + 1))


def is_ulrich(ps: PolarizedSpace, weight: Sequence[int]) -> bool:
    """Whether the datum is exactly {1, ..., dim X}.

    Since the datum has dim X entries counted with multiplicity, set
    equality forces every multiplicity to be one.
    """
    weight = ps.validate_weight(weight)
    pairs = reduced_ratio_pairs(ps, weight)
    wanted = {(l, 1) for l in range(1, ps.dimension + 1)}
    if set(pairs) != wanted:
        return False
    assert len(pairs) == len(set(pairs))  # forced: dim X entries, dim X values
    return True


@dataclass(frozen=True)
class CohomologyRecord:
    """Cohomology of one twist ``E(-twist)``: at most one nonzero degree.

    ``degree`` is ``None`` when every cohomology group vanishes;
    otherwise ``module_weight`` is the highest weight of the cohomology
    as a module for the full group and ``dimension`` its dimension.
    """

    twist: int
    degree: Optional[int]
    module_weight: Optional[Coeffs]
    dimension: Optional[int]

    @property
    def vanishes(self) -> bool:
        return self.degree is None


def cohomology(ps: PolarizedSpace, weight: Sequence[int], twist: int) -> CohomologyRecord:
    """All cohomology groups of the twisted bundle ``E_lambda(-twist)``.

    Shift ``lambda + rho`` by ``-twist * varpi``: a singular shift kills
    every group; a regular shift of index ``p`` leaves a single group in
    degree ``p``, obtained from the dominant representative.
    """
    weight = ps.validate_weight(weight)
    rs = ps.rs
    shifted = tuple(
        a + 1 - twist * w for a, w in zip(weight, ps.ample_weight)
    )
    index = rs.regularity_index(shifted)
    if index is None:
        return CohomologyRecord(twist, None, None, None)
    dominant, used = rs.to_dominant(shifted)
    assert used == index
    module_weight = tuple(c - 1 for c in dominant)
    return CohomologyRecord(twist, index, module_weight, weyl_dimension(rs, module_weight))


def bundle_rank(ps: PolarizedSpace, weight: Sequence[int]) -> int:
    """Rank of the irreducible bundle: a Weyl dimension over the Levi roots.

    Only unmarked coefficients enter the product, so any legal weight is
    acceptable (marked coefficients pair to zero with Levi roots).
    """
    weight = ps.validate_weight(weight)
    return weyl_dimension(ps.rs, weight, ps.levi_roots)


def is_acm_by_twists(ps: PolarizedSpace, weight: Sequence[int]) -> bool:
    """Independent ACM test that walks the twists directly.

    For each integer twist in ``[floor(min T) - 1, ceil(max T) + 1]``
    the shifted weight must be regular of index 0, regular of index
    dim X, or singular.  Outside that window the first two cases hold
    automatically: the shift is dominant for twists below the datum
    minimum and antidominant above the maximum.
    """
    weight = ps.validate_weight(weight)
    rs = ps.rs
    pairs = reduced_ratio_pairs(ps, weight)
    low = min(Fraction(n, d) for n, d in pairs)
    high = max(Fraction(n, d) for n, d in pairs)
    dim = ps.dimension
    for twist in range(floor(low) - 1, ceil(high) + 2):
        shifted = tuple(a + 1 - twist * w for a, w in zip(weight, ps.ample_weight))
        index = rs.regularity_index(shifted)
        if index not in (None, 0, dim):
            return False
    return True
