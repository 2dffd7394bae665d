"""Smoke tests for the python bindings against frozen small cases."""

import singerfact as sf


def test_field_info():
    info = sf.field_info(2, 4)
    assert info["q"] == 16
    assert info["prim_poly"] in ([1, 1, 0, 0], [1, 0, 0, 1])


def test_shortest_factorization_counts():
    # t_q(n, n) = (q^n - 1)^(n - 1)
    assert sf.count_factorizations(2, 2, 2) == "3"
    assert sf.count_factorizations(2, 3, 2) == "8"
    assert sf.count_factorizations(4, 2, 4) == "3375"


def test_formula_matches_count():
    for n, q, ell in [(2, 3, 4), (3, 2, 5)]:
        assert sf.tq_at(n, ell, q) == sf.count_factorizations(n, q, ell)


def test_refined_count():
    res = sf.count_fixed_dets(2, 3, [1, 2])
    assert res["count"] == "4"
    assert not res["det_obstructed"]
    obstructed = sf.count_fixed_dets(2, 3, [1, 1])
    assert obstructed["det_obstructed"]


def test_tq_polynomial():
    # t_q(2, 2) = q^2 - 1: coefficients lowest first
    assert sf.tq(2, 2) == ["-1", "0", "1"]


def test_hurwitz_single_orbit():
    out = sf.hurwitz_orbits(4, 2, 4)
    assert out["tuple_count"] == 3375
    assert out["orbit_sizes"] == [3375]


def test_non_singer_four_orbits():
    out = sf.hurwitz_orbits(4, 2, 4, target="charpoly", charpoly=[1, 1, 1, 1])
    assert out["tuple_count"] == 3375
    assert len(out["orbit_sizes"]) == 4


def test_interval_rank_sizes():
    assert sf.interval_rank_sizes(4, 2) == [1, 60, 240, 60, 1]


def test_jm_and_cyclotomic():
    assert sf.jm_commutation_ok(2, 3)
    assert sf.cyclotomic_orbit_sum(2, 4, 5) == -3
    assert sf.cyclotomic_orbit_sum(2, 4, 15) == 0


def test_classical():
    assert sf.classical_t(4, 3) == "16"
