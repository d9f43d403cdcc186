"""Connecting homomorphisms and the gauge-group homotopy calculator."""
from math import gcd

import pytest

from ghg.catalog import TableDepthError, default_catalog
from ghg.fgab import FgAbGroup, GroupElement, IntMatrix, direct_sum_with_injections
from ghg.gaugecalc import (
    BundleSpec,
    PairingUnavailable,
    Sphere,
    Surface,
    class_group,
    connecting_hom_sphere,
    connecting_hom_surface,
    gauge_homotopy,
    gauge_homotopy_rational,
    make_bundle,
    rational_via_zero_sequence,
    su2_s4_pi2,
)

CAT = default_catalog()


def su2_class(k):
    return GroupElement(CAT.pi("SU2", 3), (k,))


def test_base_validation():
    with pytest.raises(ValueError):
        Sphere(0)
    with pytest.raises(ValueError):
        Surface(-1)
    assert str(Sphere(4)) == "sphere:4"
    assert str(Surface(2)) == "surface:2"


def test_class_group():
    assert class_group(CAT, "SU2", Sphere(4)) == FgAbGroup.free(1)
    assert class_group(CAT, "SU2", Sphere(2)).is_trivial
    assert class_group(CAT, "TEST", Surface(3)) == FgAbGroup.free(1)


def test_make_bundle_reduces_class():
    b = make_bundle(CAT, "TEST", Sphere(3), (5,))  # classes live in Z/4
    assert b.clazz.coords == (1,)
    with pytest.raises(ValueError):
        make_bundle(CAT, "SU2", Sphere(4), (1, 2))


def test_sphere_delta_is_negated_pairing():
    # <g, g> = 1 in pi_6(SU2) = Z/12, so delta_3 multiplies by -k
    for k in (1, 5, 12):
        d = connecting_hom_sphere(CAT, "SU2", 4, su2_class(k), 3)
        assert d.matrix == IntMatrix([[(-k) % 12]])
        assert d.domain == FgAbGroup.free(1)
        assert d.codomain == FgAbGroup.cyclic(12)


def test_sphere_delta_zero_shortcuts():
    assert connecting_hom_sphere(CAT, "SU2", 4, su2_class(1), 2).is_zero  # pi_2 = 0
    assert connecting_hom_sphere(CAT, "SU2", 4, su2_class(0), 3).is_zero  # b = 0
    u1 = GroupElement(CAT.pi("U1", 1), (5,))
    # abelian entries never need stored pairings
    assert connecting_hom_sphere(CAT, "U1", 2, u1, 1).is_zero


def test_sphere_delta_wrong_class_group():
    with pytest.raises(ValueError, match="must lie in"):
        connecting_hom_sphere(CAT, "SU2", 2, su2_class(1), 3)


def test_pairing_unavailable():
    with pytest.raises(PairingUnavailable) as info:
        connecting_hom_sphere(CAT, "SU2", 4, su2_class(1), 4)
    exc = info.value
    assert (exc.group, exc.n, exc.m) == ("SU2", 4, 3)
    assert "pi_4 x pi_3" in str(exc)


def test_surface_delta_lands_in_last_block():
    g1 = CAT.pi("TEST", 1)
    g2 = CAT.pi("TEST", 2)
    b = GroupElement(g1, (1,))
    d = connecting_hom_surface(CAT, "TEST", 1, b, 1)
    total, inj = direct_sum_with_injections([g1, g1, g2])
    assert d.codomain == total == FgAbGroup.of(2, (4,))
    pairing = CAT.samelson("TEST", 1, 1)
    want = inj[2].apply(-pairing.apply(GroupElement.generator(g1, 0), b))
    got = d.apply(GroupElement.generator(g1, 0))
    assert got == want
    assert got.order() == 4


def test_surface_delta_zero_shortcuts():
    u1 = GroupElement(CAT.pi("U1", 1), (3,))
    assert connecting_hom_surface(CAT, "U1", 1, u1, 1).is_zero
    su2 = GroupElement.zero(CAT.pi("SU2", 1))
    d = connecting_hom_surface(CAT, "SU2", 1, su2, 3)
    assert d.is_zero
    # codomain is still the full 2g + 1 block sum: Z^2 + Z/2
    assert d.domain == FgAbGroup.free(1)
    assert d.codomain == FgAbGroup.of(2, (2,))
    d = connecting_hom_surface(CAT, "SU2", 2, su2, 3)
    assert d.is_zero and d.codomain == FgAbGroup.of(4, (2,))


def test_gauge_su2_over_s4():
    for k, want in ((6, "Z/6"), (1, "0"), (0, "Z/12"), (8, "Z/4")):
        bundle = make_bundle(CAT, "SU2", Sphere(4), (k,))
        r = gauge_homotopy(CAT, "SU2", bundle, 2)
        assert r.is_resolved and str(r.resolved) == want


def test_su2_gcd_closed_form():
    for k in range(-30, 31):
        assert su2_s4_pi2(k) == FgAbGroup.cyclic(gcd(k, 12))


def test_gauge_degree_three_splits_for_trivial_bundle():
    bundle = make_bundle(CAT, "SU2", Sphere(4), (0,))
    r = gauge_homotopy(CAT, "SU2", bundle, 3)
    assert r.is_resolved and str(r.resolved) == "Z^1 + Z/2"


def test_gauge_degree_three_needs_missing_pairing():
    bundle = make_bundle(CAT, "SU2", Sphere(4), (1,))
    with pytest.raises(PairingUnavailable):
        gauge_homotopy(CAT, "SU2", bundle, 3)


def test_gauge_degree_zero_rejected():
    bundle = make_bundle(CAT, "SU2", Sphere(4), (0,))
    with pytest.raises(ValueError, match="start at 1"):
        gauge_homotopy(CAT, "SU2", bundle, 0)


def test_gauge_over_circle():
    """Trivial class group: pi_n(Gau) = pi_n(K) + pi_(n+1)(K)."""
    bundle = make_bundle(CAT, "SU2", Sphere(1), ())
    r = gauge_homotopy(CAT, "SU2", bundle, 3)
    assert r.is_resolved and r.resolved == FgAbGroup.of(1, (2,))


def test_gauge_table_depth_propagates():
    bundle = make_bundle(CAT, "SU2", Sphere(4), (1,))
    with pytest.raises(TableDepthError):
        gauge_homotopy(CAT, "SU2", bundle, 9)


def test_gauge_ambiguous_extension():
    bundle = make_bundle(CAT, "TEST", Sphere(2), (2,))
    r = gauge_homotopy(CAT, "TEST", bundle, 2)
    assert not r.is_resolved
    assert [str(c) for c in r.candidates] == ["Z/2 + Z/4", "Z/8"]
    assert str(r.sub) == "Z/2" and str(r.quot) == "Z/4"


def test_gauge_surface_multi_block():
    bundle = make_bundle(CAT, "SU3", Surface(3), ())
    r = gauge_homotopy(CAT, "SU3", bundle, 4)
    assert r.is_resolved and r.resolved == FgAbGroup.of(6, (6,))


def test_genus_zero_equals_two_sphere():
    for coords, n in (((1,), 1), ((1,), 2), ((2,), 2)):
        surf = gauge_homotopy(CAT, "TEST", make_bundle(CAT, "TEST", Surface(0), coords), n)
        sph = gauge_homotopy(CAT, "TEST", make_bundle(CAT, "TEST", Sphere(2), coords), n)
        assert surf == sph


def test_rational_values():
    assert gauge_homotopy_rational(CAT, "SU2", make_bundle(CAT, "SU2", Sphere(4), (0,)), 3) == 1
    assert gauge_homotopy_rational(CAT, "SU2", make_bundle(CAT, "SU2", Sphere(4), (0,)), 2) == 0
    assert gauge_homotopy_rational(CAT, "TEST", make_bundle(CAT, "TEST", Surface(2), (0,)), 2) == 4
    assert gauge_homotopy_rational(CAT, "U1", make_bundle(CAT, "U1", Surface(1), (0,)), 1) == 1
    assert gauge_homotopy_rational(CAT, "U1", make_bundle(CAT, "U1", Sphere(1), ()), 1) == 1


def test_rational_is_class_independent():
    for n in range(1, 7):
        dims = {
            gauge_homotopy_rational(CAT, "SU2", make_bundle(CAT, "SU2", Sphere(4), (k,)), n)
            for k in (0, 1, 7)
        }
        assert len(dims) == 1


def test_rational_agrees_with_zero_sequence():
    for base in (Sphere(4), Sphere(5), Surface(0), Surface(2)):
        size = class_group(CAT, "SU2", base).ngens
        bundle = make_bundle(CAT, "SU2", base, (0,) * size)
        for n in range(1, 9):
            closed = gauge_homotopy_rational(CAT, "SU2", bundle, n)
            assert closed == rational_via_zero_sequence(CAT, "SU2", base, n)


def test_rational_degree_zero_rejected():
    bundle = make_bundle(CAT, "SU2", Sphere(4), (0,))
    with pytest.raises(ValueError):
        gauge_homotopy_rational(CAT, "SU2", bundle, 0)
