from __future__ import annotations

from fractions import Fraction

import pytest

from ghcseries import (
    InvalidInput,
    OutOfRegime,
    SingularBlockUnsupported,
    UnsupportedLevi,
    UnsupportedRank,
    Weight,
    build_root_system,
    central_character_from_kappa,
    enumerate_block,
    f1_k_character,
    from_principal,
    get_fixture,
    integral_weyl_subgroup,
    iwasawa_sl3_support,
    minimal_parabolic,
    multiplicity_matrix,
    reconstructibility_report,
    socle_k_character,
)
from ghcseries.charseries import ModuleDatumE
from ghcseries.parabolic import mu_omega


def _sp4_block():
    p = get_fixture("sp4-principal").build_parabolic()
    kappa = central_character_from_kappa(
        Weight.of(Fraction(3, 2), Fraction(1, 2)), p.embedding.rs
    )
    return p, kappa


def test_central_character_flags():
    rs = build_root_system((("C", 2),))
    kappa = central_character_from_kappa(Weight.of(Fraction(3, 2), Fraction(1, 2)), rs)
    assert kappa.regular
    assert not kappa.integral
    assert kappa.orbit_size == 8
    integral = central_character_from_kappa(Weight.of(2, 1), rs)
    assert integral.regular and integral.integral
    singular = central_character_from_kappa(Weight.of(1, 1), rs)
    assert not singular.regular
    with pytest.raises(InvalidInput):
        central_character_from_kappa(Weight.of(1, 1, 1), rs)


def test_central_character_canonicalizes_trace():
    rs = build_root_system((("A", 2),))
    a = central_character_from_kappa(Weight.of(3, 1, 0), rs)
    b = central_character_from_kappa(Weight.of(4, 2, 1), rs)
    assert a.representative == b.representative
    assert sum(a.representative.coords) == 0


def test_central_character_representative_is_orbit_invariant():
    rs = build_root_system((("C", 2),))
    from ghcseries.rootsys import dot_orbit

    kappa = Weight.of(Fraction(3, 2), Fraction(1, 2))
    base = central_character_from_kappa(kappa, rs).representative
    for _, point in dot_orbit(kappa, rs):
        assert central_character_from_kappa(point, rs).representative == base


def test_block_enumeration_matches_frozen_list():
    p, kappa = _sp4_block()
    block = enumerate_block(kappa, p)
    assert [e.mu for e in block] == [0, 1, 2, 5, 5, 8, 9, 10]
    assert [e.omega for e in block] == [m - 12 for m in (0, 1, 2, 5, 5, 8, 9, 10)]
    assert all(e.dim_e == 1 for e in block)
    assert all(e.merged_count == 1 for e in block)
    assert sum(1 for e in block if e.mu == 0) == 1
    assert sum(1 for e in block if e.mu == 1) == 1
    nus = [tuple(e.nu.coords) for e in block]
    assert nus[0] == (Fraction(-7, 2), Fraction(-3, 2))
    assert nus[-1] == (Fraction(-1, 2), Fraction(-1, 2))


def test_block_with_levi_sl2_weights_dimensions():
    p = get_fixture("sp4-long").build_parabolic()
    kappa = central_character_from_kappa(Weight.of(2, 1), p.embedding.rs)
    block = enumerate_block(kappa, p)
    assert [(e.mu, e.dim_e) for e in block] == [(-2, 1), (-1, 2), (1, 2), (2, 1)]


def test_integral_subgroup_orders():
    rs = build_root_system((("C", 2),))
    assert len(integral_weyl_subgroup(Weight.of(Fraction(3, 2), Fraction(1, 2)), rs)) == 4
    assert len(integral_weyl_subgroup(Weight.of(2, 1), rs)) == 8
    assert len(integral_weyl_subgroup(Weight.of(Fraction(1, 2), Fraction(1, 4)), rs)) == 1


def test_multiplicity_matrix_rank_one_anchor():
    rs = build_root_system((("A", 1),))
    p = minimal_parabolic(from_principal(rs))
    kappa = central_character_from_kappa(Weight.of(Fraction(1, 2), Fraction(-1, 2)), rs)
    matrix = multiplicity_matrix(kappa, p)
    assert [e.mu for e in matrix.elements] == [-2, 0]
    assert matrix.m_matrix == ((1, 1), (0, 1))
    assert matrix.p_matrix == ((1, -1), (0, 1))


FROZEN_M = (
    (1, 0, 1, 0, 0, 1, 0, 1),
    (0, 1, 0, 1, 1, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 0, 0, 1, 0, 1, 0),
    (0, 0, 0, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
)

FROZEN_P = (
    (1, 0, -1, 0, 0, -1, 0, 1),
    (0, 1, 0, -1, -1, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, -1),
    (0, 0, 0, 1, 0, 0, -1, 0),
    (0, 0, 0, 0, 1, 0, -1, 0),
    (0, 0, 0, 0, 0, 1, 0, -1),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
)


def test_multiplicity_matrix_frozen_eight_by_eight():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    assert matrix.m_matrix == FROZEN_M
    assert matrix.p_matrix == FROZEN_P
    assert matrix.orbit_ids == (0, 1, 0, 1, 1, 0, 1, 0)
    assert matrix.integral_group_order == 4


def test_multiplicity_matrix_algebra_properties():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    n = len(matrix.elements)
    mus = [e.mu for e in matrix.elements]
    for i in range(n):
        assert matrix.m_matrix[i][i] == 1
        assert matrix.p_matrix[i][i] == 1
        for j in range(n):
            if matrix.m_matrix[i][j] and i != j:
                assert mus[j] > mus[i]
                assert matrix.orbit_ids[i] == matrix.orbit_ids[j]
            assert matrix.p_matrix[i][j] in (-1, 0, 1)
            product = sum(
                matrix.m_matrix[i][k] * matrix.p_matrix[k][j] for k in range(n)
            )
            assert product == (1 if i == j else 0)


def test_two_middle_elements_are_incomparable():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    i, j = 3, 4
    assert matrix.elements[i].mu == matrix.elements[j].mu == 5
    assert matrix.m_matrix[i][j] == 0
    assert matrix.m_matrix[j][i] == 0


def test_multiplicity_matrix_guards():
    p_long = get_fixture("sp4-long").build_parabolic()
    rs = p_long.embedding.rs
    with pytest.raises(UnsupportedLevi):
        multiplicity_matrix(central_character_from_kappa(Weight.of(2, 1), rs), p_long)
    p, _ = _sp4_block()
    singular = central_character_from_kappa(Weight.of(1, 1), p.embedding.rs)
    with pytest.raises(SingularBlockUnsupported):
        multiplicity_matrix(singular, p)
    rs4 = build_root_system((("A", 3),))
    p4 = minimal_parabolic(from_principal(rs4))
    kappa4 = central_character_from_kappa(
        Weight.of(Fraction(7, 2), Fraction(3, 2), Fraction(-3, 2), Fraction(-7, 2)), rs4
    )
    with pytest.raises(UnsupportedRank):
        multiplicity_matrix(kappa4, p4)


SOCLE_EVEN = [1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0]
SOCLE_ODD = [1, 1, 0, 1, 1, 0, 1, 1, 0, 1]


def test_socle_characters_at_the_two_smallest_types():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    zero = [e for e in matrix.elements if e.mu == 0][0]
    one = [e for e in matrix.elements if e.mu == 1][0]
    even = socle_k_character(p, matrix, zero, 20)
    odd = socle_k_character(p, matrix, one, 19)
    assert [even.character.mult(2 * i) for i in range(11)] == SOCLE_EVEN
    assert [odd.character.mult(2 * i + 1) for i in range(10)] == SOCLE_ODD
    assert even.character.is_multiplicity_free()
    assert odd.character.is_multiplicity_free()
    assert even.character.support_min() == 0
    assert odd.character.support_min() == 1
    assert not even.genuine_socle
    assert not odd.genuine_socle


def test_socle_flags_track_the_simplicity_threshold():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    for element in matrix.elements:
        result = socle_k_character(p, matrix, element, 24)
        assert result.genuine_socle == (element.mu >= 3)


def test_socle_rows_resum_to_the_series_character():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    cutoff = 24
    socles = [socle_k_character(p, matrix, e, cutoff).character for e in matrix.elements]
    for i, element in enumerate(matrix.elements):
        f1 = f1_k_character(p, ModuleDatumE(omega=int(element.omega)), cutoff)
        for delta in range(cutoff + 1):
            combo = sum(
                matrix.m_matrix[i][j] * socles[j].mult(delta)
                for j in range(len(socles))
            )
            assert combo == f1.mult(delta)
            assert socles[i].mult(delta) <= f1.mult(delta)


def test_socle_rejects_foreign_elements_and_negative_mu():
    p, kappa = _sp4_block()
    matrix = multiplicity_matrix(kappa, p)
    foreign = matrix.elements[0].__class__(
        w=matrix.elements[0].w,
        nu=Weight.of(9, 9),
        omega=Fraction(0),
        mu=Fraction(0),
        m_dominant=True,
        dim_e=1,
        merged_count=1,
    )
    with pytest.raises(InvalidInput):
        socle_k_character(p, matrix, foreign, 10)


def test_reconstructibility_report_thresholds():
    p = get_fixture("sp4-principal").build_parabolic()
    low = reconstructibility_report(p, 2)
    assert low.lower_degrees_vanish
    assert not low.socle_simple and not low.strong and not low.generic
    mid = reconstructibility_report(p, 4)
    assert mid.socle_simple and not mid.strong and not mid.generic
    high = reconstructibility_report(p, 7)
    assert high.socle_simple and high.strong and high.generic
    assert high.regular_embedding
    with pytest.raises(InvalidInput):
        reconstructibility_report(p, -1)
    with pytest.raises(InvalidInput):
        reconstructibility_report(p, 3, convention="sideways")


def test_iwasawa_support_family():
    support = iwasawa_sl3_support(0, Fraction(7, 3))
    assert support.b_values == (Fraction(7, 3),)
    assert support.k_multiplicity == 1
    support = iwasawa_sl3_support(2, 5)
    assert support.b_values == (-1, 5, 11)
    assert support.k_multiplicity == 3
    for a in range(0, 21):
        support = iwasawa_sl3_support(a, 0)
        assert support.k_multiplicity == a + 1
        assert len(support.b_values) == a + 1
        assert support.b_values == tuple(-3 * a + 6 * j for j in range(a + 1))
    with pytest.raises(InvalidInput):
        iwasawa_sl3_support(-1, 0)
