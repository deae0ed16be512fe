"""Per-family closed forms of the associated datum at minimal polarization.

For the classical families the datum of ``G/P_{d_1..d_s}`` (all
polarization weights equal to one) is a collection of block matrices
indexed by pairs of marked nodes, with entries that are window sums of
the shifted weight coefficients ``a_k + 1`` over an explicit rational
denominator.  The exceptional families admit a single quotient formula
driven by the squared lengths of the simple roots.  Each family also
carries a closed expression for the datum maximum.

These formulas are re-derived here independently of the generic pairing
machinery in :mod:`homacm.datum`; ``verify_closed_form`` compares the
two routes entry by entry, which is the main correctness harness of the
package (see ``docs/errata.md`` for the two typographical defects found
in the published maximum formulas, both neutralised by the reading
implemented here and covered by the exhaustive comparison).

Index conventions: ``d_0 = 0`` and ``d_{s+1} = n``, where ``n`` is the
rank for families B, C, D and rank + 1 for family A.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Sequence

from .datum import PolarizedSpace, reduced_ratio_pairs

Cell = tuple[str, int, int, int, int]  # block name, u, v, numerator, denominator

#: doubled squared-length ratios printed for the exceptional families
_F4_COEFF = (2, 2, 1, 1)
_G2_COEFF = (1, 3)


def closed_case(ps: PolarizedSpace) -> str:
    """Dispatch tag for the applicable closed form."""
    fam = ps.lie_type.family
    n = ps.rank
    d_last = ps.marked[-1]
    if fam == "A":
        return "A"
    if fam in "BC":
        return "BC_a" if d_last != n else "BC_b"
    if fam == "D":
        if d_last <= n - 2:
            return "D_a"
        if d_last == n - 1:
            return "D_b"
        before = ps.marked[-2] if len(ps.marked) >= 2 else 0
        return "D_d" if before == n - 1 else "D_c"
    if fam == "E":
        return "E"
    return "F4" if fam == "F" else "G2"


def _require_minimal(ps: PolarizedSpace) -> None:
    if not ps.is_minimal:
        raise ValueError(
            f"closed forms are stated only for the minimal polarization, got {ps.polarization}"
        )


def _window_sums(shifted: Sequence[int]) -> Callable[[int, int], int]:
    """Return ``seg(x, y) = sum_{k=x}^{y} shifted[k]`` over 1-based windows."""
    prefix = [0]
    for value in shifted:
        prefix.append(prefix[-1] + value)

    def seg(x: int, y: int) -> int:
        return prefix[y] - prefix[x - 1] if y >= x else 0

    return seg


def _classical_cells(ps: PolarizedSpace, shifted: Sequence[int]) -> Iterator[Cell]:
    fam = ps.lie_type.family
    rank = ps.rank
    s = len(ps.marked)
    n = rank + 1 if fam == "A" else rank
    d = (0,) + ps.marked + (n,)
    seg = _window_sums(shifted)
    case = closed_case(ps)

    def p_cell(i: int, j: int, u: int, v: int) -> tuple[int, int]:
        return seg(d[i] - u + 1, d[j] + v - 1), j - i + 1

    if fam == "A":
        for i in range(1, s + 1):
            for j in range(i, s + 1):
                name = f"A[{i},{j}]"
                for u in range(1, d[i] - d[i - 1] + 1):
                    for v in range(1, d[j + 1] - d[j] + 1):
                        yield (name, u, v, *p_cell(i, j, u, v))
        return

    if fam in "BC":
        # doubled last coordinate of lambda + rho: (a_n + 1) for B, 2(a_n + 1) for C
        tail = shifted[n - 1] * (1 if fam == "B" else 2)
        top = lambda x: seg(x, n - 1)  # noqa: E731
        if case == "BC_a":
            for i in range(1, s + 1):
                for j in range(i, s + 1):
                    p_name, q_name = f"P[{i},{j}]", f"Q[{i},{j}]"
                    q_den = 2 * s + 1 - (i + j)
                    for u in range(1, d[i] - d[i - 1] + 1):
                        for v in range(1, d[j + 1] - d[j] + 1):
                            yield (p_name, u, v, *p_cell(i, j, u, v))
                            yield (q_name, u, v, top(d[i - 1] + u) + top(d[j] + v) + tail, q_den)
            for i in range(1, s + 1):
                r_name = f"R[{i}]"
                r_den = 2 * (s + 1 - i)
                for u in range(1, d[i] - d[i - 1] + 1):
                    for v in range(u, d[i] - d[i - 1] + 1):
                        yield (r_name, u, v, top(d[i - 1] + u) + top(d[i - 1] + v) + tail, r_den)
        else:  # BC_b: the last marked node is n
            # denominators 2(s + e) - (i + j + 1) and 2(s + e - i) with
            # e = 1/2 for B and 1 for C, kept integral by doubling for B
            scale = 2 if fam == "B" else 1
            for i in range(1, s):
                for j in range(i, s):
                    p_name, q_name = f"Pt[{i},{j}]", f"Qt[{i},{j}]"
                    q_den = scale * 2 * s + 2 - scale * (i + j + 1)
                    for u in range(1, d[i] - d[i - 1] + 1):
                        for v in range(1, d[j + 1] - d[j] + 1):
                            yield (p_name, u, v, *p_cell(i, j, u, v))
                            num = top(d[i - 1] + u) + top(d[j] + v) + tail
                            yield (q_name, u, v, num * scale, q_den)
            for i in range(1, s + 1):
                r_name = f"Rt[{i}]"
                r_den = scale * 2 * (s - i) + 2
                for u in range(1, d[i] - d[i - 1] + 1):
                    for v in range(u, d[i] - d[i - 1] + 1):
                        num = top(d[i - 1] + u) + top(d[i - 1] + v) + tail
                        yield (r_name, u, v, num * scale, r_den)
        return

    # family D: both tails of lambda + rho matter
    upper = lambda x: seg(x, n - 2)  # noqa: E731
    full = lambda x: seg(x, n)  # noqa: E731
    if case == "D_a":
        p_range, q_range, r_range = s, s, s
        q_den = lambda i, j: 2 * s + 1 - (i + j)  # noqa: E731
        r_den = lambda i: 2 * (s + 1 - i)  # noqa: E731
        tag = ""
    elif case == "D_b":
        p_range, q_range, r_range = s, s, s
        q_den = lambda i, j: 2 * s - (i + j)  # noqa: E731
        r_den = lambda i: 2 * (s - i) + 1  # noqa: E731
        tag = "t"
    elif case == "D_c":
        p_range, q_range, r_range = s - 1, s - 1, s
        q_den = lambda i, j: 2 * s - (i + j)  # noqa: E731
        r_den = lambda i: 2 * (s - i) + 1  # noqa: E731
        tag = "t"
    else:  # D_d
        p_range, q_range, r_range = s - 1, s - 1, s - 1
        q_den = lambda i, j: 2 * s - 1 - (i + j)  # noqa: E731
        r_den = lambda i: 2 * (s - i)  # noqa: E731
        tag = "h"
    for i in range(1, p_range + 1):
        for j in range(i, p_range + 1):
            p_name, q_name = f"P{tag}[{i},{j}]", f"Q{tag}[{i},{j}]"
            with_q = j <= q_range and not (case == "D_b" and i == s)
            q_denominator = q_den(i, j) if with_q else 0
            for u in range(1, d[i] - d[i - 1] + 1):
                for v in range(1, d[j + 1] - d[j] + 1):
                    yield (p_name, u, v, *p_cell(i, j, u, v))
                    if with_q:
                        yield (q_name, u, v, upper(d[i - 1] + u) + full(d[j] + v), q_denominator)
    for i in range(1, r_range + 1):
        r_name = f"R{tag}[{i}]"
        r_denominator = r_den(i)
        for u in range(1, d[i] - d[i - 1] + 1):
            for v in range(u + 1, d[i] - d[i - 1] + 1):
                yield (r_name, u, v, upper(d[i - 1] + u) + full(d[i - 1] + v), r_denominator)


def _exceptional_cells(ps: PolarizedSpace, shifted: Sequence[int]) -> Iterator[Cell]:
    fam = ps.lie_type.family
    if fam == "E":
        coeff = (1,) * ps.rank
    elif fam == "F":
        coeff = _F4_COEFF
    else:
        coeff = _G2_COEFF
    marked0 = [i - 1 for i in ps.marked]
    for position, root in enumerate(ps.quotient_roots, start=1):
        num = sum(c * x * l for c, x, l in zip(coeff, shifted, root))
        den = sum(coeff[i] * root[i] for i in marked0)
        yield ("T", position, 1, num, den)


def _cells(ps: PolarizedSpace, weight: Sequence[int]) -> Iterator[Cell]:
    shifted = [a + 1 for a in weight]
    if ps.lie_type.family in "EFG":
        return _exceptional_cells(ps, shifted)
    return _classical_cells(ps, shifted)


def closed_pairs(ps: PolarizedSpace, weight: Sequence[int]) -> list[tuple[int, int]]:
    """Flattened closed-form entries as reduced integer pairs."""
    _require_minimal(ps)
    pairs = []
    for _, _, _, num, den in _cells(ps, weight):
        g = gcd(num, den)
        pairs.append((num // g, den // g))
    return pairs


def closed_max_pair(ps: PolarizedSpace, weight: Sequence[int]) -> tuple[int, int]:
    """The datum maximum from the printed per-case expression.

    Classical families evaluate the case formula; exceptional families,
    where no separate expression is printed, take the maximum over the
    closed-form entries.  Terms whose window indices are undefined for
    small ``s`` are skipped (see ``docs/errata.md``).
    """
    _require_minimal(ps)
    fam = ps.lie_type.family
    if fam in "EFG":
        return max(
            ((n, d) for _, _, _, n, d in _cells(ps, weight)),
            key=lambda p: Fraction(*p),
        )
    rank = ps.rank
    s = len(ps.marked)
    n = rank + 1 if fam == "A" else rank
    d = (0,) + ps.marked + (n,)
    seg = _window_sums([a + 1 for a in weight])
    tail = weight[rank - 1] + 1
    case = closed_case(ps)
    terms: list[int] = []
    if case == "A":
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s + 1)]
    elif case == "BC_a":
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s)]
        doubled_tail = tail * (1 if fam == "B" else 2)
        terms.append(seg(d[s - 1] + 1, n - 1) + seg(d[s] + 1, n - 1) + doubled_tail)
    elif case == "BC_b":
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s)]
        inverse_e = 2 if fam == "B" else 1
        terms.append(inverse_e * seg(d[s - 1] + 1, n - 1) + tail)
    elif case == "D_a":
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s)]
        terms.append(seg(d[s - 1] + 1, n - 2) + seg(d[s] + 1, n))
    elif case == "D_b":
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s + 1) if i != s - 1]
        if s >= 2:
            terms.append(seg(d[s - 2] + 1, n - 2) + tail)
        terms.append(seg(d[s - 1] + 1, n - 2) + seg(d[s - 1] + 2, n))
    elif case == "D_c":
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s)]
        terms.append(seg(d[s - 1] + 1, n - 2) + seg(d[s - 1] + 2, n))
    else:  # D_d
        terms = [seg(d[i - 1] + 1, d[i + 1] - 1) for i in range(1, s)]
        terms.append(seg(d[s - 2] + 1, n - 2) + tail)
    return (max(terms), 1)


def closed_max(ps: PolarizedSpace, weight: Sequence[int]) -> Fraction:
    """Closed-form datum maximum as an exact rational."""
    return Fraction(*closed_max_pair(ps, weight))


@dataclass(frozen=True)
class DatumBlocks:
    """Structured closed-form datum: named blocks of exact rationals."""

    case: str
    blocks: dict[str, dict[tuple[int, int], Fraction]]
    maximum: Fraction

    def flattened(self) -> list[Fraction]:
        return sorted(value for block in self.blocks.values() for value in block.values())


def datum_closed_form(ps: PolarizedSpace, weight: Sequence[int]) -> DatumBlocks:
    """Assemble the closed-form blocks for one bundle weight.

    Requires the minimal polarization; the flattened multiset always has
    exactly ``dim X`` entries.
    """
    _require_minimal(ps)
    weight = ps.validate_weight(weight)
    blocks: dict[str, dict[tuple[int, int], Fraction]] = {}
    count = 0
    for name, u, v, num, den in _cells(ps, weight):
        blocks.setdefault(name, {})[(u, v)] = Fraction(num, den)
        count += 1
    if count != ps.dimension:
        raise AssertionError(
            f"closed form produced {count} entries, expected dim X = {ps.dimension}"
        )
    return DatumBlocks(closed_case(ps), blocks, closed_max(ps, weight))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of comparing the closed form against the generic datum."""

    case: str
    entries_match: bool
    max_match: bool
    datum_max: Fraction
    closed_maximum: Fraction
    missing: tuple[Fraction, ...]  # in the generic datum but not the closed form
    extra: tuple[Fraction, ...]  # in the closed form but not the generic datum

    @property
    def matches(self) -> bool:
        return self.entries_match and self.max_match


def _pair_max(pairs: Sequence[tuple[int, int]]) -> tuple[int, int]:
    # denominators are positive, so cross-multiplication orders the pairs
    best_num, best_den = pairs[0]
    for num, den in pairs:
        if num * best_den > best_num * den:
            best_num, best_den = num, den
    return best_num, best_den


def verify_closed_form(ps: PolarizedSpace, weight: Sequence[int]) -> VerifyReport:
    """Compare closed-form entries and maximum with the generic datum."""
    _require_minimal(ps)
    weight = ps.validate_weight(weight)
    generic = reduced_ratio_pairs(ps, weight)
    closed = closed_pairs(ps, weight)
    entries_match, missing, extra = _multiset_diff(generic, closed)
    top_num, top_den = _pair_max(generic)
    printed_num, printed_den = closed_max_pair(ps, weight)
    return VerifyReport(
        case=closed_case(ps),
        entries_match=entries_match,
        max_match=top_num * printed_den == printed_num * top_den,
        datum_max=Fraction(top_num, top_den),
        closed_maximum=Fraction(printed_num, printed_den),
        missing=missing,
        extra=extra,
    )


def _multiset_diff(
    generic: list[tuple[int, int]], closed: list[tuple[int, int]]
) -> tuple[bool, tuple[Fraction, ...], tuple[Fraction, ...]]:
    have, want = Counter(generic), Counter(closed)
    if have == want:
        return True, (), ()
    missing = sorted(Fraction(*p) for p in (have - want).elements())
    extra = sorted(Fraction(*p) for p in (want - have).elements())
    return False, tuple(missing), tuple(extra)
