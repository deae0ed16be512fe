"""Numerical admissibility criteria for special families of weights.

Three groups of results for the classical families, all phrased at the
minimal polarization and all cross-checkable against the generic datum
test in :mod:`homacm.datum`:

* sufficient conditions for weights supported on the marked nodes plus a
  single consecutive block between two of them (one family of displayed
  inequalities per classical type);
* exact criteria for line bundles on spaces with two marked nodes, as
  closed inequalities in the two coefficients;
* the catalogue of tautological-quotient weights on isotropic flag
  spaces (universal subbundle quotients, their duals and the quotient of
  the orthogonal complement).

The inequalities are implemented exactly as displayed, including the
boundary conventions; the test-suite sweeps confirm they agree with the
datum route everywhere in the required ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .roots import Coeffs, LieType


@dataclass(frozen=True)
class MuNu:
    """Normalised datum minimum and the widest gap attaining it.

    ``mu`` is ``min_i a_{d_i} + 1`` over the marked nodes; ``nu`` is
    ``max (d_{i+1} - d_{i-1}) - 1`` over the indices attaining that
    minimum, with ``d_0 = 0`` and ``d_{s+1} = n``.
    """

    mu: int
    nu: int


def _conventions(lt: LieType, marked: Sequence[int]) -> tuple[tuple[int, ...], int, int]:
    marked = tuple(marked)
    if not marked or list(marked) != sorted(set(marked)) or marked[-1] > lt.rank or marked[0] < 1:
        raise ValueError(f"invalid marked set {marked} for {lt}")
    n = lt.rank + 1 if lt.family == "A" else lt.rank
    return (0,) + marked + (n,), len(marked), n


def mu_nu(lt: LieType, marked: Sequence[int], weight: Sequence[int]) -> MuNu:
    """Evaluate the two invariants for a classical type.

    Ties in the minimum take the larger gap.
    """
    if lt.family not in "ABCD":
        raise ValueError(f"mu/nu are defined for the classical families, got {lt}")
    d, s, _ = _conventions(lt, marked)
    mu = min(weight[d[i] - 1] for i in range(1, s + 1)) + 1
    nu = max(d[i + 1] - d[i - 1] for i in range(1, s + 1) if weight[d[i] - 1] + 1 == mu) - 1
    return MuNu(mu, nu)


def sufficient_acm(
    lt: LieType, marked: Sequence[int], block: int, weight: Sequence[int]
) -> bool:
    """Sufficient admissibility test for block-supported weights.

    The weight must be supported on the marked nodes plus the single
    coefficient block ``(d_{block-1}, d_block]`` (``block = s + 1``
    addresses the tail block beyond the last marked node).  Returns
    whether all displayed inequalities hold; one-directional, so a
    ``False`` proves nothing.  Raises when the family or the support
    shape does not match the hypotheses.
    """
    fam = lt.family
    if fam not in "BCD":
        raise ValueError(f"sufficient conditions cover types B, C and D, got {lt}")
    d, s, n = _conventions(lt, marked)
    if fam == "B" and d[s] > n - 1:
        raise ValueError(f"type B requires the last marked node <= {n - 1}, got {d[s]}")
    if fam == "D" and d[s] > n - 2:
        raise ValueError(f"type D requires the last marked node <= {n - 2}, got {d[s]}")
    if not 1 <= block <= s + 1:
        raise ValueError(f"block index {block} out of range 1..{s + 1}")
    if len(weight) != lt.rank:
        raise ValueError(f"expected weight of length {lt.rank}, got {len(weight)}")
    allowed = set(marked) | set(range(d[block - 1] + 1, d[block] + 1))
    stray = [k + 1 for k, a in enumerate(weight) if a and (k + 1) not in allowed]
    if stray:
        raise ValueError(
            f"weight must be supported on the marked nodes plus block {block}; "
            f"nonzero coefficients at {stray}"
        )

    nu = mu_nu(lt, marked, weight).nu
    marked_coeffs = [weight[i - 1] for i in marked]
    if any(abs(x - y) > nu for x in marked_coeffs for y in marked_coeffs):
        return False

    def window(j: int, top: int) -> bool:
        return 0 <= weight[j - 1] <= top

    if block <= s:
        if block == 1:
            top = d[2] - d[1] - 1
        else:
            top = min(d[block + 1] - d[block], d[block - 1] - d[block - 2]) - 1
        return all(window(j, top) for j in range(d[block - 1] + 1, d[block]))

    # tail block past the last marked node
    gap = d[s] - d[s - 1]
    if fam == "B":
        return all(window(j, gap - 1) for j in range(d[s] + 1, n)) and window(
            n, 2 * gap - 1
        )
    if fam == "C":
        # with the last node marked the tail block is empty and nothing is tested
        return all(window(j, gap - 1) for j in range(d[s] + 1, n)) and (
            d[s] == n or window(n, gap - 1)
        )
    inner = all(window(j, gap - 1) for j in range(d[s] + 1, n - 1))
    a_last, a_prev = weight[n - 1], weight[n - 2]
    straight = 0 <= a_prev <= gap - 1 and 0 <= a_last - a_prev <= 2 * gap - 1
    swapped = 0 <= a_last <= gap - 1 and 0 <= a_prev - a_last <= 2 * gap - 1
    return inner and (straight or swapped)


def line_bundle_acm(family: str, n: int, d1: int, d2: int, a1: int, a2: int) -> bool:
    """Exact two-marked-node line bundle criterion, per classical family.

    ``n`` is the defining parameter of the family (the flag lives in an
    n-dimensional space for type A, and the rank equals ``n`` for types
    B, C, D); the line bundle has coefficient ``a1`` at node ``d1`` and
    ``a2`` at node ``d2``.
    """
    if family not in "ABCD":
        raise ValueError(f"line bundle criteria cover types A-D, got {family!r}")
    top = n - 1 if family == "A" else n
    if not 1 <= d1 < d2 <= top:
        raise ValueError(f"need 1 <= d1 < d2 <= {top}, got ({d1}, {d2})")
    LieType(family, n - 1 if family == "A" else n)  # validates the rank range
    up, down = a2 - a1, a1 - a2

    if family == "A":
        return 0 <= up <= min(n, d1 + d2) - 1 or 0 < down <= min(n, 2 * n - d1 - d2) - 1
    if family == "B":
        if d2 <= n - 1:
            return (
                0 <= up <= min(d1 + d2, 2 * n - d1) - 1
                or 0 < down <= min(2 * n - d2, 4 * n - 2 * (d1 + d2)) - 1
            )
        return (
            0 <= up <= min(2 * d1 + n, 2 * n - d1) - 1
            or 0 < down <= min(3 * (n - d1), 2 * n) - 1
        )
    if family == "C":
        if d2 <= n - 1:
            return (
                0 <= up <= min(d1 + d2, 2 * n - (d1 - 1)) - 1
                or 0 < down <= min(2 * n - (d2 - 1), 4 * n - 2 * (d1 + d2 - 1)) - 1
            )
        # no "-1" on either bound in this case
        return 0 <= up <= min(d1 + n - 1, 2 * n - d1) or 0 < down <= min(
            2 * (n - d1) + 1, n
        )
    if d2 <= n - 2:
        return (
            0 <= up <= min(d1 + d2, 2 * n - (d1 + 1)) - 1
            or 0 < down <= min(2 * n - (d2 + 1), 4 * n - 2 * (d1 + d2 + 1)) - 1
        )
    if d2 == n - 1 or d1 <= n - 2:
        return (
            0 <= up <= min(2 * d1 + n, 2 * n - d1 - 1) - 1
            or 0 < down <= min(3 * (n - d1 - 1), 2 * (n - 1)) - 1
        )
    # both spinor nodes marked: a single symmetric, inclusive bound
    return abs(a1 - a2) <= 2 * n - 3


def line_bundle_weight(family: str, n: int, d1: int, d2: int, a1: int, a2: int) -> tuple[LieType, tuple[int, int], Coeffs]:
    """The space/weight pair a line-bundle query refers to."""
    rank = n - 1 if family == "A" else n
    lt = LieType(family, rank)
    weight = [0] * rank
    weight[d1 - 1] = a1
    weight[d2 - 1] = a2
    return lt, (d1, d2), tuple(weight)


@dataclass(frozen=True)
class UniversalBundle:
    name: str
    weight: Coeffs


def universal_weights(lt: LieType, marked: Sequence[int]) -> list[UniversalBundle]:
    """Highest weights of the tautological quotients on isotropic flags.

    For each marked node ``d_i`` the quotient of consecutive universal
    subbundles and its dual, plus the quotient of the orthogonal
    complement of the last subbundle; the latter degenerates to a
    doubled spinor weight on type B with ``d_s = n - 1`` and to a sum of
    the two half-spin weights on type D with ``d_s = n - 2``.
    """
    fam = lt.family
    if fam not in "BCD":
        raise ValueError(f"universal subbundles live on types B, C and D, got {lt}")
    d, s, n = _conventions(lt, marked)
    if fam == "B" and d[s] > n - 1:
        raise ValueError(f"type B requires the last marked node <= {n - 1}")
    if fam == "D" and d[s] > n - 2:
        raise ValueError(f"type D requires the last marked node <= {n - 2}")

    def fundamental(i: int) -> list[int]:
        out = [0] * n
        if i >= 1:
            out[i - 1] = 1
        return out  # index 0 means the zero weight

    def combo(*terms: tuple[int, int]) -> Coeffs:
        out = [0] * n
        for coeff, index in terms:
            if index >= 1:
                out[index - 1] += coeff
        return tuple(out)

    catalogue = []
    for i in range(1, s + 1):
        catalogue.append(
            UniversalBundle(f"H[{d[i]}]/H[{d[i - 1]}]", combo((1, d[i] - 1), (-1, d[i])))
        )
        catalogue.append(
            UniversalBundle(
                f"dual(H[{d[i]}]/H[{d[i - 1]}])", combo((1, d[i - 1] + 1), (-1, d[i - 1]))
            )
        )
    if fam == "B" and d[s] == n - 1:
        perp = combo((2, n), (-1, n - 1))
    elif fam == "D" and d[s] == n - 2:
        perp = combo((1, n), (1, n - 1), (-1, n - 2))
    elif fam == "C" and d[s] == n:
        perp = None  # the complement coincides with the subbundle, nothing to list
    else:
        perp = combo((1, d[s] + 1), (-1, d[s]))
    if perp is not None:
        catalogue.append(UniversalBundle(f"perp(H[{d[s]}])/H[{d[s]}]", perp))
    return catalogue
