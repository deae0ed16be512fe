"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete.  The heavy sweeps (criteria 5 and 9) take a few minutes; their
stated wall-clock budgets are asserted along with the mathematics.
"""

import random
import time
from fractions import Fraction
from itertools import combinations, product

from homacm.classify import enumerate_acm, enumerate_ulrich
from homacm.closed_forms import verify_closed_form
from homacm.criteria import line_bundle_acm, line_bundle_weight, sufficient_acm, universal_weights
from homacm.datum import (
    associated_datum,
    is_acm,
    is_acm_by_twists,
    is_ulrich,
    space,
)
from homacm.roots import LieType, build, lie_type


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[criterion {number:02d}] {'PASS' if ok else 'FAIL'} {title}"
    if detail:
        line += f" — {detail}"
    print(line)
    assert ok, line


def classical_types(max_rank: int):
    for family, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        for rank in range(lo, max_rank + 1):
            yield lie_type(f"{family}{rank}")


def all_marked_sets(rank: int):
    for size in range(1, rank + 1):
        yield from combinations(range(1, rank + 1), size)


def test_criterion_1_g2_classification():
    start = time.monotonic()
    out = enumerate_acm(space(lie_type("G2"), [1, 2]))
    elapsed = time.monotonic() - start
    expected = [(a1, a2) for a1 in range(3) for a2 in range(3)]
    report(
        1,
        "full flag of type G2 lists the nine bounded weights",
        out == expected and elapsed < 1.0,
        f"{len(out)} weights in {elapsed:.2f}s",
    )


def test_criterion_2_quadrics():
    ok = True
    details = []
    for token, expected in [
        ("B2", [(0, 0), (0, 1)]),
        ("B3", [(0, 0, 0), (0, 0, 1)]),
        ("D4", [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)]),
    ]:
        start = time.monotonic()
        out = enumerate_acm(space(lie_type(token), [1]))
        elapsed = time.monotonic() - start
        ok = ok and out == expected and elapsed < 5.0
        details.append(f"{token}:{len(out)} in {elapsed:.2f}s")
    report(2, "quadrics carry only the trivial and spinor weights", ok, "; ".join(details))


def test_criterion_3_projective_spaces():
    ok = True
    details = []
    for n in (2, 3, 4):
        start = time.monotonic()
        out = enumerate_acm(space(lie_type(f"A{n}"), [1]))
        elapsed = time.monotonic() - start
        ok = ok and out == [(0,) * n] and elapsed < 5.0
        details.append(f"P^{n} in {elapsed:.2f}s")
    report(3, "projective spaces keep only the trivial weight", ok, "; ".join(details))


def test_criterion_4_odd_quadric_counterexample():
    verdict = is_acm(space(lie_type("B3"), [1]), (-1, 1, 0))
    report(4, "orthogonal-complement quotient on the 5-quadric fails", verdict is False)


def test_criterion_5_closed_form_equivalence():
    start = time.monotonic()
    checked = 0
    entry_failures = []
    max_failures = []

    def sweep(ps, ranges):
        nonlocal checked
        for weight in product(*ranges):
            checked += 1
            outcome = verify_closed_form(ps, weight)
            if not outcome.entries_match:
                entry_failures.append((str(ps.lie_type), ps.marked, weight))
            if not outcome.max_match:
                max_failures.append((str(ps.lie_type), ps.marked, weight))

    for lt in classical_types(6):
        for marked in all_marked_sets(lt.rank):
            ps = space(lt, marked)
            sweep(
                ps,
                [
                    range(-1, 4) if (k + 1) in marked else range(0, 4)
                    for k in range(lt.rank)
                ],
            )
    for token in ("E6", "F4", "G2"):
        lt = lie_type(token)
        for marked in all_marked_sets(lt.rank):
            sweep(space(lt, marked), [range(0, 3)] * lt.rank)
    elapsed = time.monotonic() - start
    report(
        5,
        "closed forms reproduce the datum over the exhaustive box",
        not entry_failures and not max_failures and elapsed < 600.0,
        f"{checked} instances in {elapsed:.1f}s; "
        f"entry mismatches {len(entry_failures)}, max mismatches {len(max_failures)}",
    )


def test_criterion_6_minimum_formula_randomized():
    rng = random.Random(20240811)
    tokens = ["A1", "A3", "A6", "B2", "B5", "C3", "C6", "D4", "D6", "E6", "E7", "F4", "G2"]
    for _ in range(10_000):
        lt = lie_type(rng.choice(tokens))
        size = rng.randint(1, lt.rank)
        marked = sorted(rng.sample(range(1, lt.rank + 1), size))
        pol = [rng.randint(1, 4) for _ in marked]
        ps = space(lt, marked, pol)
        weight = [
            rng.randint(-5, 7) if (k + 1) in marked else rng.randint(0, 7)
            for k in range(lt.rank)
        ]
        table = associated_datum(ps, weight)
        expected = min(Fraction(weight[i - 1] + 1, n) for i, n in zip(marked, pol))
        assert table.minimum == expected, (lt, marked, pol, weight)
    report(6, "datum minimum equals the marked-node formula", True, "10000 instances")


def test_criterion_7_twist_walk_agrees_with_datum_test():
    rank_le_4 = [
        lt
        for lt in (*classical_types(4), lie_type("F4"), lie_type("G2"))
    ]
    checked = 0
    for lt in rank_le_4:
        for marked in all_marked_sets(lt.rank):
            ps = space(lt, marked)
            ranges = [
                range(-4, 5) if (k + 1) in marked else range(0, 5)
                for k in range(lt.rank)
            ]
            for weight in product(*ranges):
                checked += 1
                assert is_acm(ps, weight) == is_acm_by_twists(ps, weight), (
                    lt, marked, weight,
                )
    rng = random.Random(99)
    larger = ["A5", "A7", "B5", "B6", "C5", "C6", "D5", "D6", "E6", "E7"]
    for _ in range(1000):
        lt = lie_type(rng.choice(larger))
        size = rng.randint(1, min(4, lt.rank))
        marked = sorted(rng.sample(range(1, lt.rank + 1), size))
        pol = [rng.randint(1, 3) for _ in marked]
        ps = space(lt, marked, pol)
        weight = [
            rng.randint(-4, 4) if (k + 1) in marked else rng.randint(0, 4)
            for k in range(lt.rank)
        ]
        checked += 1
        assert is_acm(ps, weight) == is_acm_by_twists(ps, weight)
    report(7, "direct twist walk matches the interval test", True, f"{checked} instances")


def test_criterion_8_ulrich_lists():
    ok = enumerate_ulrich(space(lie_type("B2"), [1])) == [(0, 1)]
    for n in range(1, 5):
        ok = ok and enumerate_ulrich(space(lie_type(f"A{n}"), [1])) == [(0,) * n]
    ok = ok and enumerate_ulrich(space(lie_type("G2"), [1, 2])) == []
    spaces = [
        space(lie_type("B2"), [1]),
        *(space(lie_type(f"A{n}"), [1]) for n in range(1, 5)),
        space(lie_type("G2"), [1, 2]),
        space(lie_type("B3"), [1]),
        space(lie_type("C3"), [1]),
        space(lie_type("A3"), [2]),
    ]
    for ps in spaces:
        for weight in enumerate_ulrich(ps):
            table = associated_datum(ps, weight)
            ok = ok and list(table.entries) == [Fraction(l) for l in range(1, ps.dimension + 1)]
            ok = ok and is_acm(ps, weight) and is_ulrich(ps, weight)
    report(8, "maximal-datum lists match the known classifications", ok)


def test_criterion_9_line_bundle_criteria():
    start = time.monotonic()
    disagreements = []
    checked = 0

    def run(family, n):
        nonlocal checked
        top = n - 1 if family == "A" else n
        bound = 2 * n if family == "A" else 4 * n + 2
        for d1, d2 in combinations(range(1, top + 1), 2):
            lt, marked, _ = line_bundle_weight(family, n, d1, d2, 0, 0)
            ps = space(lt, marked)
            for a1 in range(-bound, bound + 1):
                for a2 in range(-bound, bound + 1):
                    weight = [0] * lt.rank
                    weight[d1 - 1], weight[d2 - 1] = a1, a2
                    checked += 1
                    if line_bundle_acm(family, n, d1, d2, a1, a2) != is_acm(ps, weight):
                        disagreements.append((family, n, d1, d2, a1, a2))

    for n in range(3, 9):
        run("A", n)
    for family in ("B", "C"):
        for n in range(2, 7):
            run(family, n)
    for n in range(4, 7):
        run("D", n)
    elapsed = time.monotonic() - start
    type_a = [d for d in disagreements if d[0] == "A"]
    report(
        9,
        "closed line-bundle criteria agree with the datum test",
        not disagreements and not type_a and elapsed < 900.0,
        f"{checked} instances in {elapsed:.1f}s; disagreements {len(disagreements)}",
    )


def _hypothesis_windows(family, d, s, block, rank):
    """Coefficient ranges that cover every hypothesis-satisfying weight."""
    gap = d[s] - d[s - 1]
    spans = {}
    if block <= s:
        if block == 1:
            top = d[2] - d[1] - 1
        else:
            top = min(d[block + 1] - d[block], d[block - 1] - d[block - 2]) - 1
        for j in range(d[block - 1] + 1, d[block]):
            spans[j] = range(0, max(top, -1) + 1)
    else:
        for j in range(d[s] + 1, rank):
            if family == "D" and j > rank - 2:
                continue
            spans[j] = range(0, gap)
        if family == "B":
            spans[rank] = range(0, 2 * gap)
        elif family == "C":
            if d[s] < rank:
                spans[rank] = range(0, gap)
        else:
            spans[rank - 1] = range(0, 3 * gap - 1)
            spans[rank] = range(0, 3 * gap - 1)
    return spans


def test_criterion_10_sufficient_conditions_and_quotients():
    passing = 0
    for family, lo in (("B", 2), ("C", 2), ("D", 4)):
        for rank in range(lo, 6):
            lt = lie_type(f"{family}{rank}")
            for marked in all_marked_sets(rank):
                if family == "B" and marked[-1] > rank - 1:
                    continue
                if family == "D" and marked[-1] > rank - 2:
                    continue
                ps = space(lt, marked)
                d = (0,) + marked + (rank,)
                s = len(marked)
                for block in range(1, s + 2):
                    spans = _hypothesis_windows(family, d, s, block, rank)
                    positions = list(marked) + [j for j in spans if j not in marked]
                    ranges = [
                        range(0, 4) if j in marked else spans[j] for j in positions
                    ]
                    for values in product(*ranges):
                        weight = [0] * rank
                        for j, value in zip(positions, values):
                            weight[j - 1] = value
                        if sufficient_acm(lt, marked, block, weight):
                            passing += 1
                            assert is_acm(ps, weight), (lt, marked, block, weight)

    quotient_checks = 0
    for family, lo in (("B", 2), ("C", 2), ("D", 4)):
        for rank in range(lo, 6):
            lt = lie_type(f"{family}{rank}")
            for marked in all_marked_sets(rank):
                if family == "B" and marked[-1] > rank - 1:
                    continue
                if family == "D" and marked[-1] > rank - 2:
                    continue
                ps = space(lt, marked)
                d = (0,) + marked
                wide = d[-1] - d[-2] >= 2
                for item in universal_weights(lt, marked):
                    if wide or item.name.startswith("H["):
                        quotient_checks += 1
                        assert is_acm(ps, item.weight), (lt, marked, item)
    report(
        10,
        "sufficient conditions are sound and quotient weights pass",
        passing > 1000 and quotient_checks > 100,
        f"{passing} hypothesis-passing weights, {quotient_checks} quotient checks",
    )


def test_criterion_11_structural_invariants():
    counts = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
              "D": lambda n: n * (n - 1), "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
              "F": lambda n: 24, "G": lambda n: 6}
    types = [*classical_types(8), lie_type("E6"), lie_type("E7"), lie_type("E8"),
             lie_type("F4"), lie_type("G2")]
    for lt in types:
        assert len(build(lt).positive_roots) == counts[lt.family](lt.rank)

    rng = random.Random(5)
    from dataclasses import replace

    from homacm.datum import PolarizedSpace

    for _ in range(400):
        lt = rng.choice(types[: len(types) - 2])  # skip E8/F4 scale copies for speed
        size = rng.randint(1, lt.rank)
        marked = tuple(sorted(rng.sample(range(1, lt.rank + 1), size)))
        pol = tuple(rng.randint(1, 3) for _ in marked)
        ps = space(lt, marked, pol)
        weight = tuple(
            rng.randint(-3, 4) if (k + 1) in marked else rng.randint(0, 4)
            for k in range(lt.rank)
        )
        table = associated_datum(ps, weight)
        assert len(table) == ps.dimension
        twist = rng.randint(-3, 3)
        moved = tuple(a + twist * w for a, w in zip(weight, ps.ample_weight))
        assert associated_datum(ps, moved).entries == tuple(
            v + twist for v in table.entries
        )
        scale = rng.randint(2, 4)
        scaled_rs = replace(ps.rs, half_lengths=tuple(scale * s for s in ps.rs.half_lengths))
        scaled = PolarizedSpace(scaled_rs, marked, pol)
        assert associated_datum(scaled, weight).entries == table.entries
    report(11, "root counts, datum size, twist and scaling invariance", True, "400 randomized checks")
