import pytest

from quotcohom.curve import (
    GenusContext,
    alpha_tilde,
    cup,
    diagonal_class,
    eta,
    insertion_pullback,
    integrate,
    monomial,
    permute,
    point_restrict,
    slant_last,
    transposition,
)
from quotcohom.divisor import (
    PairingTable,
    degree2_basis,
    expected_entry,
    pairing_table,
    reconstruct_diagonal,
    universal_divisor_pullback,
    verify_eq_D,
    verify_prop_classes,
)
from quotcohom.symmetric import macdonald_generators

GRID = [(g, d) for g in range(3) for d in range(1, 5)]


def test_small_divisors():
    g0 = GenusContext(0)
    assert universal_divisor_pullback(0, 1) == monomial(g0, (1, 0)) + monomial(g0, (0, 1))
    g1 = GenusContext(1)
    D = universal_divisor_pullback(1, 2)
    assert D == diagonal_class(g1, 3, 1, 3) + diagonal_class(g1, 3, 2, 3)
    evens = {w: c for w, c in D.items() if all(x in (0, 3) for x in w)}
    assert evens == {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 2}


@pytest.mark.parametrize("g, d", GRID)
def test_divisor_symmetric_in_first_slots(g, d):
    D = universal_divisor_pullback(g, d)
    for i in range(1, d):
        assert permute(D, transposition(d + 1, i, i + 1)) == D


@pytest.mark.parametrize("g, d", GRID)
def test_declared_duals_are_dual(g, d):
    ctx = GenusContext(g)
    basis = degree2_basis(ctx, d + 1)
    for a in basis:
        for b in basis:
            assert integrate(cup(a.vector, b.dual)) == (1 if a is b else 0), (a.label, b.label)


@pytest.mark.parametrize("g, d", GRID)
def test_pairing_table_case_analysis(g, d):
    ctx = GenusContext(g)
    table = pairing_table(g, d)
    basis = degree2_basis(ctx, d + 1)
    assert table.columns == [b.label for b in basis]
    for k in range(1, d + 1):
        for b in basis:
            entry = table.entry(k, b.label)
            assert entry == expected_entry(ctx, d, k, b)
            if b.kind == "eta":
                assert entry == (1 if b.slots[0] in (k, d + 1) else 0)
            elif b.slots != (k, d + 1):
                assert entry == 0


@pytest.mark.parametrize("g, d", GRID)
def test_table_rows_are_diagonals(g, d):
    ctx = GenusContext(g)
    for k in range(1, d + 1):
        assert reconstruct_diagonal(g, d, k) == diagonal_class(ctx, d + 1, k, d + 1)


def test_pairing_table_examples():
    table = pairing_table(1, 2)
    assert table.entry(1, "eta^1") == 1
    assert table.entry(1, "eta^2") == 0
    ctx = GenusContext(1)
    direct = integrate(cup(alpha_tilde(ctx, 1), alpha_tilde(ctx, 2)))
    assert table.entry(1, "a1@1.a2@3") == direct == 1


def test_pairing_table_serialization():
    table = pairing_table(2, 2)
    assert PairingTable.from_dict(table.to_dict()) == table
    lines = table.to_csv().splitlines()
    assert lines[0].split(",")[0] == "k"
    assert len(lines) == 3


@pytest.mark.parametrize("g, d", GRID)
def test_universal_divisor_expansion(g, d):
    report = verify_eq_D(g, d)
    assert report.passed, report.to_dict()


@pytest.mark.parametrize("g, d", GRID)
def test_expansion_rejects_other_multiplicities(g, d):
    for n in range(0, d + 3):
        if n != d:
            assert not verify_eq_D(g, d, n).passed


def test_expansion_genus_zero_shape():
    ctx = GenusContext(0)
    D = universal_divisor_pullback(0, 3)
    expected = sum((eta(ctx, 4, k) for k in (1, 2, 3)), 3 * eta(ctx, 4, 4))
    assert D == expected


@pytest.mark.parametrize("g, d", GRID)
def test_restriction_and_slant_classes(g, d):
    report = verify_prop_classes(g, d)
    assert report.passed, report.to_dict()
    assert report.details["restriction_is_eta"]
    assert len(report.details["slants"]) == 2 * g


@pytest.mark.parametrize("g, d", [(1, 2), (2, 3)])
def test_slant_against_dual_letter_gives_lambda(g, d):
    ctx = GenusContext(g)
    D = universal_divisor_pullback(g, d)
    lams, et = macdonald_generators(g, d)
    assert point_restrict(D, d + 1) == et
    for i in range(1, g + 1):
        assert slant_last(D, monomial(ctx, (i + g,))) == lams[i - 1]
        assert slant_last(D, monomial(ctx, (i,))) == -lams[i + g - 1]


def test_pullback_of_dual_matches_table():
    ctx = GenusContext(2)
    for b in degree2_basis(ctx, 3):
        assert integrate(insertion_pullback(b.dual, 2)) == pairing_table(2, 2).entry(2, b.label)


def test_bad_arguments():
    with pytest.raises(ValueError):
        pairing_table(1, 0)
    with pytest.raises(ValueError):
        universal_divisor_pullback(1, 0)
