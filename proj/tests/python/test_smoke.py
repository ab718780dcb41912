"""Smoke tests for the Python bindings: exact values cross-checked against the
C++ test suite, plus reproducibility of the seeded simulation."""

from fractions import Fraction

import pytest

import coxwalk as cw


def test_stationary_a2_exact():
    group = cw.WeylGroup.build("A2")
    chain = cw.build_chain(group)
    zeta = cw.stationary_distribution(chain)
    expected = [Fraction(p, 9) for p in (2, 1, 1, 2, 2, 1)]
    assert zeta == expected


def test_chamber_probabilities_sum_to_one():
    chain = cw.build_chain(cw.WeylGroup.build("B2"))
    chambers = cw.chamber_probabilities(chain)
    assert sum(chambers) == 1
    assert all(p > 0 for p in chambers)


def test_psi_a2_parallel_to_rho():
    roots = cw.RootSystem.build("A2")
    coords, unit = cw.psi(roots)
    assert coords == [1, 1]
    assert abs(unit[0] - unit[1]) < 1e-12


def test_radial_speed_a2_theta():
    roots = cw.RootSystem.build("A2")
    squared, value = cw.radial_speed(roots, [1, 1])
    assert squared == Fraction(1, 8)
    assert abs(value**2 - 0.125) < 1e-12


def test_simulate_reproducible_and_lengths_increase():
    aw = cw.AffineWeyl("A2")
    states1, moves1 = cw.simulate(aw, 50, "free", seed=11)
    states2, moves2 = cw.simulate(aw, 50, "free", seed=11)
    assert moves1 == moves2
    assert states1 == states2
    assert [aw.length(x) for x in states1] == list(range(51))


def test_exact_distribution_mass():
    aw = cw.AffineWeyl("A2")
    dist = cw.exact_distribution(aw, 5, "delayed")
    assert sum(p for _, p in dist) == 1


def test_shi_region_count_and_hitting_mass():
    aw = cw.AffineWeyl("A2")
    assert len(cw.enumerate_regions(aw)) == 16
    gamma = cw.build_gamma(aw)
    hitting = dict(gamma.region_hitting_probabilities())
    assert len(hitting) == 16
    # the fundamental alcove region is certain
    origin = cw.region_of(aw, aw.identity)
    assert hitting[origin] == 1


def test_absorption_matches_chambers():
    group = cw.WeylGroup.build("A2")
    chambers = cw.chamber_probabilities(cw.build_chain(group))
    gamma = cw.build_gamma(cw.AffineWeyl(group))
    for w in range(len(group)):
        assert gamma.absorption_probability(w) == chambers[w]


def test_core_roundtrip_and_degree():
    aw = cw.AffineWeyl("A3")
    core = cw.random_core(4, 30, seed=5)
    x = cw.affine_from_core(aw, core)
    assert cw.core_from_affine(aw, x) == core
    assert cw.core_degree(core) == 30
    assert aw.length(x) == 30


def test_apply_generator_walk_examples():
    empty = cw.CorePartition([], 3)
    one, grew = cw.apply_generator(empty, 0)
    assert grew and one.rows == [1]
    core = one
    for residue in (1, 2):
        core, grew = cw.apply_generator(core, residue)
        assert grew
    assert core.rows == [3, 1]


def test_limit_curve_n4():
    curve = cw.limit_curve(4)
    assert curve["alpha"] == Fraction(1, 10)
    expected = [(0.0, -0.6), (0.1, -0.3), (0.3, -0.1), (0.6, 0.0)]
    assert len(curve["vertices"]) == len(expected)
    for got, want in zip(curve["vertices"], expected):
        assert got[0] == pytest.approx(want[0], abs=1e-12)
        assert got[1] == pytest.approx(want[1], abs=1e-12)
    assert curve["area_scale_constant"] == 2 * curve["enclosed_area"]
    assert curve["direction_verified"]


def test_profile_distance_of_scaled_core_is_small():
    core = cw.random_core(4, 2000, seed=31)
    profile = cw.boundary_profile(core, scale=2000)
    curve = cw.limit_curve(4)
    assert cw.profile_distance(profile, curve["vertices"]) < 0.05


def test_errors_surface_as_python_exceptions():
    import pytest

    with pytest.raises(cw.CoxwalkError):
        cw.RootSystem.build("Q7")
    with pytest.raises(cw.CoxwalkError):
        cw.exact_distribution(cw.AffineWeyl("A2"), 50, "free")  # DP guard
