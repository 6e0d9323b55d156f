"""Closed-form amplitudes, cross sections, and partial-wave consistency."""

import cmath
import math

import numpy as np
import pytest

from acfermion import scattering as sc
from acfermion.channels import decompose
from acfermion.errors import DomainError, ForwardDirectionError


class TestSpinState:
    def test_doublets(self):
        assert np.allclose(sc.SpinState("z", 1).doublet, [1.0, 0.0])
        assert np.allclose(sc.SpinState("x", -1).doublet,
                           [1 / math.sqrt(2), -1 / math.sqrt(2)])

    def test_validation(self):
        with pytest.raises(DomainError):
            sc.SpinState("y", 1)
        with pytest.raises(DomainError):
            sc.SpinState("z", 0)


class TestAmplitudeSpinZ:
    def test_backscattering_modulus(self):
        # |f| = sin(pi mu)/(sqrt(2 pi p) |sin(phi/2)|); at mu=1/2, phi=pi
        # this is 1/sqrt(2 pi p)
        f = sc.amplitude_spin_z(math.pi, 1.0, decompose(0.5), 1)
        assert np.linalg.norm(f) == pytest.approx(
            1.0 / math.sqrt(2.0 * math.pi), rel=1e-13)

    def test_active_component(self):
        f_up = sc.amplitude_spin_z(1.0, 2.0, decompose(1.3), 1)
        f_dn = sc.amplitude_spin_z(1.0, 2.0, decompose(1.3), -1)
        assert f_up[1] == 0.0 and f_dn[0] == 0.0
        assert abs(f_up[0]) == pytest.approx(abs(f_dn[1]), rel=1e-13)

    def test_vanishes_integer_coupling(self):
        f = sc.amplitude_spin_z(1.0, 2.0, decompose(3.0), 1)
        assert np.linalg.norm(f) == 0.0

    def test_mu_symmetry(self):
        # modulus depends on mu only through sin(pi mu): mu <-> 1-mu invariant
        a = sc.amplitude_spin_z(0.9, 1.0, decompose(0.25), 1)
        b = sc.amplitude_spin_z(0.9, 1.0, decompose(0.75), 1)
        assert np.linalg.norm(a) == pytest.approx(np.linalg.norm(b), rel=1e-13)

    def test_forward_divergence(self):
        with pytest.raises(ForwardDirectionError):
            sc.amplitude_spin_z(0.0, 1.0, decompose(0.5), 1)
        with pytest.raises(ForwardDirectionError):
            sc.amplitude_spin_z(2.0 * math.pi, 1.0, decompose(0.5), 1)

    def test_domain(self):
        with pytest.raises(DomainError):
            sc.amplitude_spin_z(1.0, -1.0, decompose(0.5), 1)
        with pytest.raises(DomainError):
            sc.amplitude_spin_z(1.0, 1.0, decompose(0.5), 2)


class TestCrossSection:
    def test_equals_amplitude_modulus(self):
        coup = decompose(1.3)
        for phi in (0.3, 1.0, 2.5, math.pi):
            for s in (-1, 1):
                f = sc.amplitude_spin_z(phi, 2.0, coup, s)
                assert sc.cross_section_spin_z(phi, 2.0, coup.mu) \
                    == pytest.approx(float(np.sum(np.abs(f) ** 2)), rel=1e-14)

    def test_shape_invariant(self):
        # dsigma * sin^2(phi/2) is constant in phi
        vals = [sc.cross_section_spin_z(phi, 2.0, 0.3)
                * math.sin(0.5 * phi) ** 2 for phi in (0.2, 0.8, 1.7, 3.0)]
        for v in vals[1:]:
            assert v == pytest.approx(vals[0], rel=1e-14)

    def test_vanishes_at_integer(self):
        assert sc.cross_section_spin_z(1.0, 2.0, 0.0) == 0.0


class TestSpinX:
    def test_isotropic_at_n0(self):
        # n = 0: sin((|n|-1/2)phi) = -sin(phi/2) cancels the 1/sin(phi/2)
        coup = decompose(0.3)
        ref = math.sin(math.pi * 0.3) ** 2 / (2.0 * math.pi * 2.0)
        for phi in (0.2, 1.0, 2.0, 3.0):
            assert sc.cross_section_spin_x(phi, 2.0, coup) \
                == pytest.approx(ref, rel=1e-13)

    def test_equal_moduli_both_eigenstates(self):
        coup = decompose(2.3)
        a = sc.amplitude_spin_x(1.1, 2.0, coup, 1)
        b = sc.amplitude_spin_x(1.1, 2.0, coup, -1)
        assert np.linalg.norm(a) == pytest.approx(np.linalg.norm(b), rel=1e-14)

    def test_isotropic_at_n1(self):
        # |n| = 1: sin(phi/2)/sin(phi/2) = 1, still isotropic
        coup = decompose(1.3)
        ref = math.sin(math.pi * 0.3) ** 2 / (2.0 * math.pi * 2.0)
        for phi in (0.2, 1.0, 2.0, 3.0):
            assert sc.cross_section_spin_x(phi, 2.0, coup) \
                == pytest.approx(ref, rel=1e-13)

    def test_anisotropic_at_n2(self):
        coup = decompose(2.3)
        v1 = sc.cross_section_spin_x(0.5, 2.0, coup)
        v2 = sc.cross_section_spin_x(2.5, 2.0, coup)
        assert abs(v1 - v2) > 1e-6


class TestPartialWaveField:
    def test_plane_wave_at_zero_coupling(self):
        coup = decompose(0.0)
        for (r, phi) in ((3.0, 0.7), (10.0, 2.1)):
            psi = sc.partial_wave_field(r, phi, 1.0, coup, 1, L_max=60)
            ref = cmath.exp(1j * r * math.cos(phi))
            assert abs(psi[0] - ref) < 1e-12

    def test_distorted_plane_wave_at_integer_coupling(self):
        # integer Ma = n produces the plane wave times e^{-i s n (phi - pi)}
        coup = decompose(2.0)
        s = -1
        for (r, phi) in ((5.0, 0.9), (12.0, 2.4)):
            psi = sc.partial_wave_field(r, phi, 1.0, coup, s, L_max=70)
            ref = cmath.exp(-1j * s * 2 * (phi - math.pi)) \
                * cmath.exp(1j * r * math.cos(phi))
            assert abs(psi[1 if s == -1 else 0] - ref) < 1e-11

    def test_general_theta0_matches_limit(self):
        coup = decompose(1.3)
        a = sc.partial_wave_field(4.0, 1.2, 1.0, coup, 1, L_max=50,
                                  variant="limit_r0")
        b = sc.partial_wave_field(4.0, 1.2, 1.0, coup, 1, L_max=50,
                                  variant="general", theta=0.0)
        assert abs(a[0] - b[0]) < 1e-13

    def test_general_needs_theta(self):
        with pytest.raises(DomainError):
            sc.partial_wave_field(4.0, 1.2, 1.0, decompose(1.3), 1,
                                  L_max=50, variant="general")

    def test_unknown_variant(self):
        with pytest.raises(DomainError):
            sc.partial_wave_field(4.0, 1.2, 1.0, decompose(1.3), 1,
                                  L_max=50, variant="bogus")

    def test_inactive_component_zero(self):
        psi = sc.partial_wave_field(4.0, 1.2, 1.0, decompose(1.3), 1, L_max=50)
        assert psi[1] == 0.0


class TestExtraction:
    def test_quick_config(self):
        coup = decompose(1.25)
        p, s = 1.0, 1
        phis = [0.4, 1.2, 2.2, 3.0]
        got = sc.extract_amplitude(p, coup, s, phis, r_probe=200.0)
        for phi, g in zip(phis, got):
            ref = sc.amplitude_spin_z(phi, p, coup, s)[0]
            assert abs(abs(g) - abs(ref)) < 1e-3 * abs(ref) + 1e-6

    def test_probe_radius_guard(self):
        with pytest.raises(DomainError):
            sc.extract_amplitude(1.0, decompose(1.25), 1, [1.0], r_probe=50.0)


class TestPoleScan:
    def test_brackets_known_root(self):
        # gamma=1/2, xi=-1, m=1 has its pole at E=-1/2
        rows = sc.pole_scan(-1.0, 0.5, 1.0, [-1.0, -0.75, -0.5, -0.25, -0.1])
        vals = dict(rows)
        assert vals[-0.5] == pytest.approx(0.0, abs=1e-13)
        assert vals[-1.0] * vals[-0.25] < 0.0


class TestBuildTable:
    def test_rows(self):
        tab = sc.build_table(2.0, decompose(1.3), sc.SpinState("z", 1),
                             [0.5, 1.5, 2.5])
        assert len(tab.rows) == 3
        for phi, f, ds in tab.rows:
            assert ds == pytest.approx(float(np.sum(np.abs(f) ** 2)),
                                       rel=1e-14)


def test_default_l_max_monotone():
    vals = [sc.default_l_max(x) for x in (1.0, 10.0, 100.0, 1000.0)]
    assert vals == sorted(vals)
    assert sc.default_l_max(200.0) >= 240
