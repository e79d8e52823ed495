"""Closed-form centrality values, stability thresholds, and the audit harness."""
import numpy as np
import pytest

from netgame.closed_forms import (
    complete_is_stable,
    complete_scaled,
    complete_stable_threshold,
    nearly_complete_scaled,
    printed_nearly_complete_intact,
    star_leaf_link_scaled,
    star_scaled,
    star_window,
    verify_closed_forms,
)
from netgame.centrality import scaled_component_katz
from netgame.graph import make_complete, make_nearly_complete, make_star


def test_complete_scaled_is_uniform():
    for n in range(2, 12):
        assert complete_scaled(n) == pytest.approx(1.0 / n, abs=1e-15)
        rep = scaled_component_katz(make_complete(n), 0.5 / (n - 1))
        assert rep.scaled_of(1) == pytest.approx(1.0 / n, abs=1e-12)


def test_nearly_complete_normalization_identity():
    for n in range(3, 20):
        alpha = 0.5 / (n - 1)
        nc = nearly_complete_scaled(n, alpha)
        assert 2 * nc.severed + (n - 2) * nc.intact == pytest.approx(1.0, abs=1e-13)
        assert nc.severed < nc.intact  # cutting a link always costs centrality


def test_nearly_complete_matches_solver():
    for n in (3, 5, 9, 17):
        for frac in (0.2, 0.6, 0.9):
            alpha = frac / (n - 1)
            rep = scaled_component_katz(make_nearly_complete(n), alpha)
            nc = nearly_complete_scaled(n, alpha)
            assert rep.scaled_of(1) == pytest.approx(nc.severed, abs=1e-12)
            assert rep.scaled_of(3) == pytest.approx(nc.intact, abs=1e-12)


def test_printed_variant_is_wrong_and_quantified():
    # the circulating intact-vertex numerator fails normalization everywhere
    for n in (4, 6, 10):
        alpha = 0.5 / (n - 1)
        printed = printed_nearly_complete_intact(n, alpha)
        nc = nearly_complete_scaled(n, alpha)
        assert 2 * nc.severed + (n - 2) * printed > 1.0 + 1e-6
    gap = abs(printed_nearly_complete_intact(4, 0.1)
              - nearly_complete_scaled(4, 0.1).intact)
    assert gap >= 0.05


def test_star_values_and_identity():
    star = star_scaled(5, 0.1)
    assert star.hub == pytest.approx(0.44, abs=1e-14)
    assert star.leaf == pytest.approx(0.14, abs=1e-14)
    for n in range(3, 15):
        alpha = 0.8 / (n - 1)
        s = star_scaled(n, alpha)
        assert s.hub + (n - 1) * s.leaf == pytest.approx(1.0, abs=1e-13)
        assert s.hub > s.leaf
        rep = scaled_component_katz(make_star(n), alpha)
        assert rep.scaled_of(1) == pytest.approx(s.hub, abs=1e-12)
        assert rep.scaled_of(n) == pytest.approx(s.leaf, abs=1e-12)


def test_star_leaf_link_matches_solver():
    for n in (4, 5, 8, 12):
        for frac in (0.2, 0.5, 0.8):
            alpha = frac / (n - 1)
            g = make_star(n)
            g.add_edge(2, 3)
            rep = scaled_component_katz(g, alpha)
            assert star_leaf_link_scaled(n, alpha) == pytest.approx(
                rep.scaled_of(2), abs=1e-12)


def test_complete_threshold_identities():
    assert complete_stable_threshold(5, 0.1) == pytest.approx(4 / 35, abs=1e-15)
    assert complete_stable_threshold(3, 0.1) == pytest.approx(2 / 13.8, abs=1e-15)
    # threshold equals the benefit lost by the player who cuts one link
    for n in range(2, 16):
        alpha = 0.4 / max(n - 1, 1)
        t = complete_stable_threshold(n, alpha)
        if n >= 3:
            nc = nearly_complete_scaled(n, alpha)
            assert t == pytest.approx((n - 1) * (1.0 / n - nc.severed), abs=1e-13)


def test_complete_is_stable_strict_boundary():
    t = complete_stable_threshold(6, 0.08)
    assert complete_is_stable(6, 0.08, 0.999 * t)
    assert not complete_is_stable(6, 0.08, t)  # boundary is a knife edge
    assert not complete_is_stable(6, 0.08, 1.001 * t)
    # reward rescales the threshold linearly
    assert complete_is_stable(6, 0.08, 1.9 * t, reward=2.0)


def test_star_window_hand_values():
    w = star_window(5, 0.1)
    assert w.delta_lo == pytest.approx(4 * (2.38 / 11.5 - 0.14), abs=1e-13)
    assert w.delta_hi == pytest.approx(0.56, abs=1e-14)
    assert w.zeta_hi == pytest.approx(0.385, abs=1e-14)
    assert w.feasible
    assert w.is_stable(0.3, 0.2)
    assert not w.is_stable(0.6, 0.2)  # leaf prefers isolation
    assert not w.is_stable(0.2, 0.2)  # leaf-leaf links become profitable
    assert not w.is_stable(0.3, 0.4)  # hub prefers pruning
    # strict boundaries
    assert not w.is_stable(w.delta_lo, 0.2)
    assert not w.is_stable(w.delta_hi, 0.2)
    assert not w.is_stable(0.3, w.zeta_hi)
    # reward rescaling
    assert w.is_stable(0.6, 0.4, reward=2.0)


def test_star_window_hub_bound_identity():
    # zeta_hi equals the hub's benefit drop from dropping one leaf:
    # (n-1)*hub(S_n) - (n-2)*hub(S_{n-1})
    for n in (5, 7, 11):
        alpha = 0.3 / (n - 1)
        w = star_window(n, alpha)
        drop = ((n - 1) * star_scaled(n, alpha).hub
                - (n - 2) * star_scaled(n - 1, alpha).hub)
        assert w.zeta_hi == pytest.approx(drop, abs=1e-13)


def test_validity_guards():
    with pytest.raises(ValueError):
        complete_scaled(1)
    with pytest.raises(ValueError):
        nearly_complete_scaled(2, 0.1)
    with pytest.raises(ValueError):
        nearly_complete_scaled(5, 0.25)  # alpha*(n-1) = 1
    with pytest.raises(ValueError):
        star_scaled(5, 0.5)  # alpha^2*(n-1) = 1
    with pytest.raises(ValueError):
        star_leaf_link_scaled(3, 0.1)
    with pytest.raises(ValueError):
        star_window(3, 0.1)
    with pytest.raises(ValueError):
        complete_stable_threshold(4, -0.1)


def test_verify_harness_default_grid_passes():
    rep = verify_closed_forms(n_values=range(3, 13))
    assert rep.all_pass
    statuses = {r.status for r in rep.rows}
    assert "fail" not in statuses
    assert "audit" in statuses
    # the audit rows document a real mismatch, large at small n
    audit = [r for r in rep.rows if r.status == "audit" and r.n <= 6]
    assert audit and all(r.abs_error > 1e-3 for r in audit)


def test_verify_harness_marks_invalid_grid_points_skipped():
    rep = verify_closed_forms(n_values=(4, 5), alpha_fractions=(0.5, 1.25))
    assert any(r.status == "skipped" for r in rep.rows)
    assert rep.all_pass  # skipped rows never fail the report


def test_verify_harness_detects_corruption():
    # feed the checker an impossible tolerance: every comparison must fail,
    # proving the harness actually compares numbers
    rep = verify_closed_forms(n_values=(5,), alpha_fractions=(0.5,), tol=-1.0)
    assert not rep.all_pass
