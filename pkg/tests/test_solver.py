"""Eigenenergy solver against frozen 50-digit root tables."""

import math

import pytest

from conftest import fval, oracle_values
from pairtrap.solver import (EnergyLevel, InteractionModel, NoBoundState,
                             TrapGeometry, a1d_effective, a2d_effective,
                             bound_state_exact, bound_state_quasi1d,
                             bound_state_quasi2d, eigenenergies,
                             ground_energy_offset, resonance_a_eff,
                             solve_self_consistent, spectrum_1d_reference,
                             spectrum_2d_reference)
from pairtrap.specfun import PoleSignal
from pairtrap.spectral import SpectralArgument, f_eval

ORA = oracle_values("solver_oracle.out")
SQRT_2PI = math.sqrt(2.0 * math.pi)


def _close(got, want, rel, abs_floor=0.0):
    assert abs(got - want) <= rel * abs(want) + abs_floor, \
        "got %.17g want %.17g" % (got, want)


def _ladder(eta, a, e_lo, e_hi, n):
    g = TrapGeometry(eta)
    return eigenenergies(InteractionModel.fixed(a), g,
                         window=(e_lo, e_hi), max_levels=n)


# ---------------------------------------------------------------------------
# spherical trap, three lowest levels for five scattering lengths
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("a", [1.0, -0.1, -2.0, 0.1, 0.05])
def test_spherical_levels_frozen(a):
    tag = "%g" % a
    want = [(fval(ORA, "sph_bound_E(a=%s)" % tag),
             fval(ORA, "sph_bound_x(a=%s)" % tag)),
            (fval(ORA, "sph_E1(a=%s)" % tag),
             fval(ORA, "sph_x1(a=%s)" % tag)),
            (fval(ORA, "sph_E2(a=%s)" % tag),
             fval(ORA, "sph_x2(a=%s)" % tag))]
    levels = _ladder(1.0, a, want[0][0] - 0.5, want[2][0] + 0.4, 3)
    assert len(levels) == 3
    for lv, (e_want, x_want) in zip(levels, want):
        # deep bound roots live on an lgamma cancellation noise floor,
        # so the comparison is relative
        _close(lv.E, e_want, 5e-12)
        _close(lv.x, x_want, 5e-12, abs_floor=1e-12)
        assert lv.E == pytest.approx(1.5 - 2.0 * lv.x, rel=1e-14)


@pytest.mark.parametrize("eta,a,prefix", [
    (2.0, -2.0, "eta2"),
    (2.5, 1.0, "eta25"),
])
def test_cigar_levels_frozen(eta, a, prefix):
    tag = "%g" % a
    e_b = fval(ORA, "%s_bound_E(a=%s)" % (prefix, tag))
    e_1 = fval(ORA, "%s_E_x1(a=%s)" % (prefix, tag))
    e_2 = fval(ORA, "%s_E_x2(a=%s)" % (prefix, tag))
    levels = _ladder(eta, a, e_b - 0.5, e_2 + 0.4, 3)
    assert [round(lv.E, 9) for lv in levels] == \
        [round(e, 9) for e in (e_b, e_1, e_2)]
    _close(levels[0].x, fval(ORA, "%s_bound_x(a=%s)" % (prefix, tag)), 5e-12)


@pytest.mark.parametrize("prefix,eta,a", [
    ("eta2", 2.0, 1.0), ("eta05", 0.5, 1.0),
])
def test_bound_state_exact_frozen(prefix, eta, a):
    lv = bound_state_exact(InteractionModel.fixed(a), TrapGeometry(eta))
    _close(lv.E, fval(ORA, "%s_bound_E(a=%g)" % (prefix, a)), 5e-13)
    _close(lv.x, fval(ORA, "%s_bound_x(a=%g)" % (prefix, a)), 5e-13)
    assert lv.branch_index == 0


@pytest.mark.parametrize("eta", [100.0, 0.01])
def test_unitarity_bound_root_frozen(eta):
    lv = bound_state_exact(InteractionModel.from_inverse_a(0.0),
                           TrapGeometry(eta))
    _close(lv.x, fval(ORA, "unitarity_x(eta=%g)" % eta), 5e-13)


# ---------------------------------------------------------------------------
# quasi-1d / quasi-2d bound-state asymptotes (frozen x and pinned error)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("inv_a", [-2.0, -1.0, 0.0, 1.0, 2.0])
def test_bound_quasi1d_frozen(inv_a):
    g = TrapGeometry(100.0)
    tag = "%g" % inv_a
    a = math.inf if inv_a == 0 else 1.0 / inv_a
    e = bound_state_quasi1d(a, g)
    x = (ground_energy_offset(g) - e) / 2.0
    _close(x, fval(ORA, "bs100_q1d_x(inv_a=%s)" % tag), 5e-12)
    exact = bound_state_exact(InteractionModel.from_inverse_a(inv_a), g)
    _close(exact.x, fval(ORA, "bs100_exact_x(inv_a=%s)" % tag), 5e-12)
    rel = abs(x / exact.x - 1.0)
    frozen = fval(ORA, "bs100_relerr(inv_a=%s)" % tag)
    assert 0.95 * frozen <= rel <= 1.05 * frozen


@pytest.mark.parametrize("inv_a", [-2.0, -1.0, 0.0, 1.0, 2.0])
def test_bound_quasi2d_frozen(inv_a):
    g = TrapGeometry(0.01)
    tag = "%g" % inv_a
    a = math.inf if inv_a == 0 else 1.0 / inv_a
    e = bound_state_quasi2d(a, g)
    x = (ground_energy_offset(g) - e) / 2.0
    _close(x, fval(ORA, "bs001_q2d_x(inv_a=%s)" % tag), 5e-11)
    exact = bound_state_exact(InteractionModel.from_inverse_a(inv_a), g)
    _close(exact.x, fval(ORA, "bs001_exact_x(inv_a=%s)" % tag), 5e-11)
    rel = abs(x / exact.x - 1.0)
    frozen = fval(ORA, "bs001_relerr(inv_a=%s)" % tag)
    assert 0.95 * frozen <= rel <= 1.05 * frozen


def test_quasi_bound_regime_warnings():
    with pytest.warns(UserWarning):
        bound_state_quasi1d(1.0, TrapGeometry(2.0))
    with pytest.warns(UserWarning):
        bound_state_quasi2d(1.0, TrapGeometry(0.5))


def test_renormalized_lengths_frozen():
    g = TrapGeometry(100.0)
    _close(a1d_effective(1.0, g), fval(ORA, "a1d(a=1,eta=100)"), 5e-13)
    _close(a1d_effective(math.inf, g), fval(ORA, "a1d(inf,eta=100)"), 5e-13)
    _close(a2d_effective(math.inf), fval(ORA, "a2d(inf)"), 5e-12)
    _close(a2d_effective(1.0), fval(ORA, "a2d(a=1)"), 5e-12)


# ---------------------------------------------------------------------------
# model construction and structural behavior
# ---------------------------------------------------------------------------

def test_trap_geometry_validation():
    assert TrapGeometry(2.0).eta == 2.0
    for bad in (0.0, -1.0, math.nan, math.inf):
        with pytest.raises(ValueError):
            TrapGeometry(bad)


def test_ground_energy_offset():
    assert ground_energy_offset(TrapGeometry(1.0)) == 1.5
    assert ground_energy_offset(TrapGeometry(100.0)) == 100.5


def test_interaction_model_fixed_roundtrip():
    m = InteractionModel.fixed(0.5)
    assert m.inv_a == pytest.approx(2.0)
    assert not m.noninteracting
    assert InteractionModel.fixed(0.0).noninteracting
    assert InteractionModel.fixed(math.inf).inv_a == 0.0
    assert InteractionModel.from_inverse_a(math.inf).noninteracting


def test_noninteracting_ladder():
    g = TrapGeometry(1.0)
    levels = eigenenergies(InteractionModel.fixed(0.0), g,
                           window=(0.0, 8.0), max_levels=10)
    assert [lv.E for lv in levels] == pytest.approx([1.5, 3.5, 5.5, 7.5])
    assert all(lv.noninteracting for lv in levels)


def test_noninteracting_ladder_anisotropic():
    # poles at E0 + 2(j + k eta), eta = 2.5: offsets 0, 2, 4, 5, 6, 7 ...
    g = TrapGeometry(2.5)
    levels = eigenenergies(InteractionModel.fixed(0.0), g,
                           window=(2.0, 10.5), max_levels=10)
    want = [3.0, 5.0, 7.0, 8.0, 9.0, 10.0]
    assert [lv.E for lv in levels] == pytest.approx(want)


def test_eigenenergies_window_clips():
    levels = _ladder(1.0, 1.0, 2.0, 4.0, 10)
    assert len(levels) == 1
    _close(levels[0].E, fval(ORA, "sph_E1(a=1)"), 1e-12)


def test_eigenenergies_sorted_and_residual():
    levels = _ladder(2.0, -2.0, -1.0, 8.0, 6)
    assert all(a.E < b.E for a, b in zip(levels, levels[1:]))
    for lv in levels:
        resid = f_eval(SpectralArgument(lv.x, 2.0)).value + SQRT_2PI * (-0.5)
        assert abs(resid) < 1e-8


def test_no_bound_state_for_zero_a():
    with pytest.raises(NoBoundState):
        bound_state_exact(InteractionModel.fixed(0.0), TrapGeometry(1.0))


def test_bound_state_requires_fixed_model():
    m = InteractionModel.from_resonance(0.5, 0.1, 3.0)
    with pytest.raises(ValueError):
        bound_state_exact(m, TrapGeometry(1.0))


# ---------------------------------------------------------------------------
# reference ladders and the energy-dependent model
# ---------------------------------------------------------------------------

def test_spectrum_1d_reference_structure():
    g = TrapGeometry(100.0)
    a1 = a1d_effective(1.0, g)
    e0 = ground_energy_offset(g)
    ref = spectrum_1d_reference(a1, g, (e0 - 1.0, e0 + 8.0))
    assert len(ref) >= 3
    assert all(x < y for x, y in zip(ref, ref[1:]))


def test_spectrum_2d_reference_structure():
    g = TrapGeometry(0.01)
    a2 = a2d_effective(1.0)
    e0 = ground_energy_offset(g)
    ref = spectrum_2d_reference(a2, g, (e0 - 0.3, e0 + 0.4))
    assert len(ref) >= 3
    assert all(x < y for x, y in zip(ref, ref[1:]))


def test_resonance_a_eff_algebra():
    # gamma = 0 collapses to the background length
    assert resonance_a_eff(1.3, 0.7, 0.0, 5.0) == pytest.approx(0.7)
    # far from resonance the background dominates
    assert resonance_a_eff(1e8, 0.7, 0.2, 5.0) == pytest.approx(
        0.7 / (1.0 - 0.14), rel=1e-6)
    # rational form checked against its own definition
    e, a_bg, gam, e_res = 2.2, 0.6, 0.15, 4.0
    want = (a_bg * (e - e_res) + gam) / ((e - e_res) - a_bg * gam * e)
    assert resonance_a_eff(e, a_bg, gam, e_res) == pytest.approx(want,
                                                                 rel=1e-15)


def test_resonance_pole_flagged():
    # denominator zero: (E - E_res) = a_bg gamma E; chosen exactly
    # representable so the == 0 pole test fires
    a_bg, gam, e_res = 0.5, 1.0, 3.0
    e_pole = 6.0     # (6 - 3) - 0.5 * 1 * 6 == 0
    with pytest.raises(PoleSignal):
        resonance_a_eff(e_pole, a_bg, gam, e_res)


def test_self_consistent_constant_model_matches_fixed():
    g = TrapGeometry(2.0)
    const = InteractionModel.energy_dependent(lambda e: 1.0, ())
    fixed = eigenenergies(InteractionModel.fixed(1.0), g,
                          window=(-2.0, 9.0), max_levels=4)
    sc = solve_self_consistent(const, g, window=(-2.0, 9.0), max_levels=4)
    assert len(sc) == len(fixed)
    for lv_s, lv_f in zip(sc, fixed):
        assert abs(lv_s.E - lv_f.E) < 1e-10


def test_self_consistent_resonance_converges():
    g = TrapGeometry(1.0)
    model = InteractionModel.from_resonance(0.5, 0.1, 3.0)
    levels = solve_self_consistent(model, g, window=(-6.0, 6.0),
                                   max_levels=5)
    assert len(levels) >= 3
    for lv in levels:
        a_here = resonance_a_eff(lv.E, 0.5, 0.1, 3.0)
        resid = f_eval(SpectralArgument(lv.x, 1.0)).value \
            + SQRT_2PI / a_here
        assert abs(resid) < 1e-7


def test_energy_level_is_frozen_record():
    lv = EnergyLevel(E=1.0, x=0.25)
    with pytest.raises((AttributeError, TypeError)):
        lv.E = 2.0
