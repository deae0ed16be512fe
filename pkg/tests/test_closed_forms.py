from fractions import Fraction
from itertools import combinations, product

import pytest

from homacm.closed_forms import (
    closed_case,
    closed_max,
    datum_closed_form,
    verify_closed_form,
)
from homacm.datum import associated_datum, space
from homacm.roots import lie_type


def test_case_dispatch():
    assert closed_case(space(lie_type("A4"), [2, 3])) == "A"
    assert closed_case(space(lie_type("B4"), [1, 3])) == "BC_a"
    assert closed_case(space(lie_type("C4"), [2, 4])) == "BC_b"
    assert closed_case(space(lie_type("D5"), [1, 3])) == "D_a"
    assert closed_case(space(lie_type("D5"), [2, 4])) == "D_b"
    assert closed_case(space(lie_type("D5"), [2, 5])) == "D_c"
    assert closed_case(space(lie_type("D5"), [5])) == "D_c"
    assert closed_case(space(lie_type("D5"), [4, 5])) == "D_d"
    assert closed_case(space(lie_type("E7"), [7])) == "E"
    assert closed_case(space(lie_type("F4"), [2])) == "F4"
    assert closed_case(space(lie_type("G2"), [1])) == "G2"


def test_requires_minimal_polarization():
    ps = space(lie_type("B3"), [1], [2])
    with pytest.raises(ValueError):
        datum_closed_form(ps, (0, 0, 0))
    with pytest.raises(ValueError):
        verify_closed_form(ps, (0, 0, 0))


def test_grassmannian_single_block():
    blocks = datum_closed_form(space(lie_type("A3"), [2]), (0, 0, 0))
    assert blocks.case == "A"
    assert set(blocks.blocks) == {"A[1,1]"}
    cells = blocks.blocks["A[1,1]"]
    assert cells == {
        (1, 1): Fraction(1), (1, 2): Fraction(2),
        (2, 1): Fraction(2), (2, 2): Fraction(3),
    }
    assert blocks.maximum == 3


def test_type_a_block_dimensions():
    ps = space(lie_type("A5"), [2, 3])
    blocks = datum_closed_form(ps, (1, 0, 2, 0, 1)).blocks
    d = (0, 2, 3, 6)  # with the final convention index n = rank + 1
    for i in range(1, 3):
        for j in range(i, 3):
            cells = blocks[f"A[{i},{j}]"]
            rows = {u for u, _ in cells}
            cols = {v for _, v in cells}
            assert rows == set(range(1, d[i] - d[i - 1] + 1))
            assert cols == set(range(1, d[j + 1] - d[j] + 1))


def test_b2_case_a_flattens_to_spinor_datum():
    blocks = datum_closed_form(space(lie_type("B2"), [1]), (0, 1))
    assert blocks.case == "BC_a"
    assert blocks.flattened() == [Fraction(1), Fraction(2), Fraction(3)]
    assert blocks.maximum == 3


def test_g2_displayed_set():
    ps = space(lie_type("G2"), [1, 2])
    for a1, a2 in product(range(0, 3), repeat=2):
        flat = datum_closed_form(ps, (a1, a2)).flattened()
        expected = sorted(
            [
                Fraction(a1 + 1),
                Fraction(a2 + 1),
                Fraction(a1 + 3 * a2, 4) + 1,
                Fraction(2 * a1 + 3 * a2, 5) + 1,
                Fraction(a1 + a2, 2) + 1,
                Fraction(a1 + 2 * a2, 3) + 1,
            ]
        )
        assert flat == expected
    assert closed_max(ps, (0, 1)) == 2
    assert closed_max(ps, (0, 2)) == 3


def test_closed_max_examples():
    assert closed_max(space(lie_type("A3"), [2]), (0, 0, 0)) == 3
    assert closed_max(space(lie_type("B2"), [1]), (0, 1)) == 3


def test_verify_matches_on_spec_spot_cases():
    assert verify_closed_form(space(lie_type("G2"), [1, 2]), (0, 2)).matches
    assert verify_closed_form(space(lie_type("A3"), [2]), (0, 0, 0)).matches
    assert verify_closed_form(space(lie_type("D5"), [2, 5]), (1, -1, 0, 3, 2)).matches


@pytest.mark.parametrize("token,max_rank", [("A", 4), ("B", 4), ("C", 4), ("D", 5)])
def test_verify_classical_sweep(token, max_rank):
    lo = {"A": 1, "B": 2, "C": 2, "D": 4}[token]
    for rank in range(lo, max_rank + 1):
        lt = lie_type(f"{token}{rank}")
        for size in range(1, rank + 1):
            for marked in combinations(range(1, rank + 1), size):
                ps = space(lt, marked)
                ranges = [
                    range(-1, 3) if (k + 1) in marked else range(0, 3)
                    for k in range(rank)
                ]
                for weight in product(*ranges):
                    report = verify_closed_form(ps, weight)
                    assert report.matches, (token, rank, marked, weight, report)


@pytest.mark.parametrize("token", ["E6", "F4", "G2"])
def test_verify_exceptional_sweep(token):
    lt = lie_type(token)
    for size in range(1, lt.rank + 1):
        for marked in combinations(range(1, lt.rank + 1), size):
            ps = space(lt, marked)
            for weight in product(range(0, 3), repeat=lt.rank):
                report = verify_closed_form(ps, weight)
                assert report.matches, (token, marked, weight, report)


def test_flattened_closed_form_equals_datum_entries():
    for token, marked, weight in [
        ("B4", (2, 4), (1, 0, 2, -1)),
        ("C3", (3,), (0, 1, 2)),
        ("D4", (4,), (0, 1, 0, 2)),
        ("E6", (2, 5), (1, 0, 0, 2, -1, 1)),
    ]:
        ps = space(lie_type(token), marked)
        flat = datum_closed_form(ps, weight).flattened()
        assert flat == list(associated_datum(ps, weight).entries)
