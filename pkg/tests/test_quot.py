from math import comb

import pytest

from quotcohom.polynomial import PoincarePolynomial, convolve
from quotcohom.quot import (
    Composition,
    betti_quot,
    cell_dimension,
    compositions,
    euler_characteristic_from_fixed_loci,
    expected_h2_rank,
    h2_basis_labels,
    poincare_quot,
    sym_euler_series,
    sym_poincare,
)


def test_compositions_examples():
    c22 = compositions(2, 2)
    assert [m.parts for m in c22] == [(2, 0), (1, 1), (0, 2)]
    assert [m.shift for m in c22] == [0, 1, 2]
    c31 = compositions(3, 1)
    assert [m.parts for m in c31] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert [m.shift for m in c31] == [0, 1, 2]
    assert len(compositions(2, 3)) == 4


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("d", range(0, 6))
def test_composition_count(r, d):
    ms = compositions(r, d)
    assert len(ms) == comb(d + r - 1, r - 1)
    assert len(set(ms)) == len(ms)
    assert all(m.total == d and m.rank == r for m in ms)


@pytest.mark.parametrize("r, d", [(2, 3), (3, 2), (4, 4)])
def test_cell_dimensions(r, d):
    first = Composition((d,) + (0,) * (r - 1))
    last = Composition((0,) * (r - 1) + (d,))
    assert cell_dimension(first, d) == d
    assert cell_dimension(last, d) == r * d
    second = Composition((d - 1, 1) + (0,) * (r - 2))
    assert cell_dimension(second, d) == d + 1
    with pytest.raises(ValueError):
        cell_dimension(first, d + 1)


def test_quot_polynomial_g2_r2_d2():
    p = poincare_quot(2, 2, 2)
    assert p.dim == 4
    assert p.betti == (1, 4, 8, 12, 20, 12, 8, 4, 1)
    # Sym^2 X + t^2 (X x X) + t^4 Sym^2 X, convolved by hand
    sym2 = sym_poincare(2, 2).betti
    x = (1, 4, 1)
    total = [0] * 9
    for j, b in enumerate(sym2):
        total[j] += b
        total[j + 4] += b
    for j, b in enumerate(convolve(x, x)):
        total[j + 2] += b
    assert tuple(total) == p.betti


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("d", [2, 3, 4])
def test_h2_rank(g, r, d):
    assert betti_quot(g, r, d, 2) == comb(2 * g, 2) + 2 == expected_h2_rank(g, r)
    assert len(h2_basis_labels(g, r, d)) == betti_quot(g, r, d, 2)


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("r", range(1, 5))
def test_degree_one_is_curve_times_projective_space(g, r):
    px = PoincarePolynomial(1, (1, 2 * g, 1))
    pr = PoincarePolynomial(r - 1, tuple(1 if k % 2 == 0 else 0 for k in range(2 * r - 1)))
    assert poincare_quot(g, r, 1) == px * pr


@pytest.mark.parametrize("g", range(3))
@pytest.mark.parametrize("r", range(1, 4))
@pytest.mark.parametrize("d", range(0, 5))
def test_palindromic_and_sized(g, r, d):
    p = poincare_quot(g, r, d)
    assert p.dim == r * d
    assert p.is_palindromic()
    assert p.betti[0] == 1


@pytest.mark.parametrize("r", range(1, 4))
def test_degree_zero_is_a_point(r):
    assert poincare_quot(2, r, 0) == PoincarePolynomial(0, (1,))


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("d", range(0, 5))
def test_rank_one_is_symmetric_product(g, d):
    assert poincare_quot(g, 1, d) == sym_poincare(g, d)
    for i in range(2 * d + 1):
        assert betti_quot(g, 1, d, i) == sym_poincare(g, d).betti[i]


@pytest.mark.parametrize("g", range(3))
@pytest.mark.parametrize("r", range(1, 4))
@pytest.mark.parametrize("d", range(0, 4))
def test_euler_characteristic_from_fixed_loci(g, r, d):
    assert poincare_quot(g, r, d).euler_characteristic() == euler_characteristic_from_fixed_loci(g, r, d)


def test_methods_agree():
    for g in range(3):
        for r in (2, 3):
            for d in range(4):
                assert poincare_quot(g, r, d, "orbit") == poincare_quot(g, r, d, "closed")


def test_h2_labels():
    labels = [str(x) for x in h2_basis_labels(2, 2, 2)]
    assert labels[:2] == ["C", "Gamma2"] and len(labels) == 8
    assert [str(x) for x in h2_basis_labels(0, 2, 2)] == ["C", "Gamma2"]
    assert [str(x) for x in h2_basis_labels(1, 3, 3)] == ["C", "Gamma2", "AlphaPair(1,2)"]
    assert [str(x) for x in h2_basis_labels(1, 1, 3)] == ["Eta", "AlphaPair(1,2)"]
    with pytest.raises(ValueError):
        h2_basis_labels(1, 2, 1)


def test_sym_euler_series_values():
    assert [sym_euler_series(0, d) for d in range(5)] == [1, 2, 3, 4, 5]
    assert [sym_euler_series(1, d) for d in range(4)] == [1, 0, 0, 0]
    assert [sym_euler_series(2, d) for d in range(4)] == [1, -2, 1, 0]


def test_polynomial_round_trip_and_validation():
    p = poincare_quot(1, 2, 2)
    assert PoincarePolynomial.from_dict(p.to_dict()) == p
    with pytest.raises(ValueError):
        PoincarePolynomial(1, (1, 2))
    with pytest.raises(ValueError):
        betti_quot(1, 2, 2, 9)
    assert str(PoincarePolynomial(1, (1, 2, 1))) == "1 + 2*t + t^2"
