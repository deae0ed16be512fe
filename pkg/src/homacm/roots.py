"""Exact root-system data for the simple Lie types.

Everything here is integer arithmetic over two coordinate systems:

* root coordinates -- a root is a tuple of coefficients over the simple
  roots ``alpha_1 .. alpha_n``;
* weight coordinates -- a weight is a tuple of coefficients over the
  fundamental weights ``lambda_1 .. lambda_n``.

The invariant form is normalised so that short roots have squared length
2 (``half_lengths[i] = (alpha_i, alpha_i) / 2`` is 1, 2 or 3).  All
pairings between weights and roots are then plain integers, and every
quantity the rest of the package consumes is a ratio of such pairings,
so the overall scale of the form never matters.

Simple-root numbering follows the Bourbaki convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Coeffs = tuple[int, ...]

#: rank constraints per family
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

#: classical count of positive roots, used as a generation cross-check
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class LieType:
    """A simple Lie type, e.g. ``LieType('B', 3)``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RANGE:
            raise ValueError(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            span = f">= {lo}" if hi is None else (f"= {lo}" if lo == hi else f"in {{{lo}..{hi}}}")
            raise ValueError(f"{self.family} requires rank {span}, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def lie_type(token: str) -> LieType:
    """Parse a token such as ``"B3"`` or ``"E8"``.

    >>> lie_type("G2")
    LieType(family='G', rank=2)
    """
    token = token.strip()
    if len(token) < 2 or not token[1:].isdigit():
        raise ValueError(f"cannot parse Lie type {token!r}; expected e.g. 'A3', 'E7'")
    return LieType(token[0].upper(), int(token[1:]))


def _cartan_and_lengths(fam: str, n: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix ``A[i][j] = (alpha_i, alpha_j) / half_lengths[i]`` plus half-lengths."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if fam == "A":
        for i in range(n - 1):
            edge(i, i + 1)
        s = [1] * n
    elif fam == "B":
        # alpha_n is the short root
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -1, -2)
        s = [2] * (n - 1) + [1]
    elif fam == "C":
        # alpha_n is the long root
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -2, -1)
        s = [1] * (n - 1) + [2]
    elif fam == "D":
        for i in range(n - 3):
            edge(i, i + 1)
        edge(n - 3, n - 2)
        edge(n - 3, n - 1)
        s = [1] * n
    elif fam == "E":
        # chain 1-3-4-5-...-n with node 2 hanging off node 4
        chain = [0] + list(range(2, n))
        for x, y in zip(chain, chain[1:]):
            edge(x, y)
        edge(1, 3)
        s = [1] * n
    elif fam == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
        s = [2, 2, 1, 1]
    else:  # G
        # alpha_1 short, alpha_2 long
        edge(0, 1, -3, -1)
        s = [1, 3]
    return a, s


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one simple Lie type.

    ``cartan[i][j]`` is ``2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``;
    ``half_lengths[i]`` is ``(alpha_i, alpha_i) / 2``; ``positive_roots``
    holds root-coordinate tuples ordered by height.  Instances are safe
    to share between threads.
    """

    lie_type: LieType
    cartan: tuple[Coeffs, ...]
    half_lengths: Coeffs
    positive_roots: tuple[Coeffs, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def rho(self) -> Coeffs:
        """Sum of all fundamental weights, in weight coordinates."""
        return (1,) * self.rank

    def pairing(self, weight: Sequence[int], root: Sequence[int]) -> int:
        """Invariant form ``(weight, root)``, exact integer.

        With ``a`` the weight coefficients and ``l`` the root coefficients
        this is ``sum_i a_i * l_i * half_lengths[i]``.
        """
        if len(weight) != self.rank or len(root) != self.rank:
            raise ValueError(
                f"expected vectors of length {self.rank}, got {len(weight)} and {len(root)}"
            )
        return sum(a * l * s for a, l, s in zip(weight, root, self.half_lengths))

    def root_as_weight(self, root: Sequence[int]) -> Coeffs:
        """Rewrite a root-coordinate vector in weight coordinates.

        ``alpha_j = sum_k cartan[k][j] * lambda_k``, so the result at
        position ``k`` is ``sum_j l_j * cartan[k][j]``.
        """
        if len(root) != self.rank:
            raise ValueError(f"expected vector of length {self.rank}, got {len(root)}")
        return tuple(
            sum(l * self.cartan[k][j] for j, l in enumerate(root)) for k in range(self.rank)
        )

    def simple_reflection(self, weight: Sequence[int], i: int) -> Coeffs:
        """Reflect a weight in the hyperplane orthogonal to ``alpha_i`` (1-based)."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"reflection index {i} out of range 1..{self.rank}")
        a_i = weight[i - 1]
        alpha = self.root_as_weight(tuple(1 if k == i - 1 else 0 for k in range(self.rank)))
        return tuple(w - a_i * c for w, c in zip(weight, alpha))

    def regularity_index(self, weight: Sequence[int]) -> Optional[int]:
        """``None`` if the weight is singular, else its index.

        A weight is singular when it pairs to zero with some positive
        root; a regular weight has index equal to the number of positive
        roots it pairs negatively with.
        """
        index = 0
        for root in self.positive_roots:
            value = self.pairing(weight, root)
            if value == 0:
                return None
            if value < 0:
                index += 1
        return index

    def to_dominant(self, weight: Sequence[int]) -> tuple[Coeffs, int]:
        """Move a regular weight into the strictly dominant chamber.

        Repeatedly reflects at any simple root with a negative
        coefficient and returns ``(dominant_weight, reflections_used)``;
        the count equals the regularity index.  Raises on singular input,
        which has no regular dominant representative.
        """
        current = tuple(weight)
        used = 0
        while True:
            negative = next((k for k, c in enumerate(current) if c < 0), None)
            if negative is None:
                break
            current = self.simple_reflection(current, negative + 1)
            used += 1
        if 0 in current:
            raise ValueError("singular weight has no dominant representative")
        return current, used


def _generate_positive_roots(cartan: Sequence[Sequence[int]], n: int) -> list[Coeffs]:
    """Height-closure generation from the simple roots.

    A candidate ``gamma + alpha_i`` is a root iff ``p - <gamma, alpha_i^v> >= 1``
    where ``p`` is the largest ``k`` with ``gamma - k*alpha_i`` already a root
    and ``<gamma, alpha_i^v> = sum_j l_j * cartan[i][j]``.
    """
    roots: set[Coeffs] = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier: Iterable[Coeffs] = list(roots)
    while frontier:
        grown: list[Coeffs] = []
        for gamma in frontier:
            for i in range(n):
                up = list(gamma)
                up[i] += 1
                candidate = tuple(up)
                if candidate in roots:
                    continue
                p = 0
                down = list(gamma)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if p - sum(l * cartan[i][j] for j, l in enumerate(gamma)) >= 1:
                    roots.add(candidate)
                    grown.append(candidate)
        frontier = grown
    return sorted(roots, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build(lt: LieType) -> RootSystem:
    """Construct (and cache) the root system of a simple Lie type.

    >>> [sum(r) for r in build(lie_type("G2")).positive_roots]
    [1, 1, 2, 3, 4, 5]
    """
    cartan, lengths = _cartan_and_lengths(lt.family, lt.rank)
    positive = _generate_positive_roots(cartan, lt.rank)
    expected = _POSITIVE_ROOT_COUNT[lt.family](lt.rank)
    if len(positive) != expected:
        raise AssertionError(
            f"{lt}: generated {len(positive)} positive roots, expected {expected}"
        )
    return RootSystem(
        lie_type=lt,
        cartan=tuple(tuple(row) for row in cartan),
        half_lengths=tuple(lengths),
        positive_roots=tuple(positive),
    )


def weyl_dimension(
    rs: RootSystem,
    highest_weight: Sequence[int],
    roots: Optional[Iterable[Coeffs]] = None,
) -> int:
    """Dimension of the irreducible module with the given highest weight.

    Product over the chosen positive roots (all of them by default) of
    ``(mu + rho, alpha) / (rho, alpha)``.  Both factors of the quotient
    must be positive and the final product must be an exact integer.
    """
    chosen = tuple(roots) if roots is not None else rs.positive_roots
    shifted = tuple(a + 1 for a in highest_weight)
    numerator = 1
    denominator = 1
    for root in chosen:
        factor = rs.pairing(shifted, root)
        if factor <= 0:
            raise ValueError("highest weight is not dominant for the chosen roots")
        numerator *= factor
        denominator *= rs.pairing(rs.rho, root)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(f"non-integral Weyl dimension {Fraction(numerator, denominator)}")
    return quotient
