"""Coupling decomposition and channel classification."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from acfermion.channels import (Region, classify, decompose,
                                enumerate_channels)
from acfermion.errors import DomainError


class TestDecompose:
    def test_basic(self):
        c = decompose(2.7)
        assert c.n == 2
        assert c.mu == pytest.approx(0.7, abs=1e-14)

    def test_integer(self):
        c = decompose(3.0)
        assert (c.n, c.mu) == (3, 0.0)

    def test_negative_floor(self):
        c = decompose(-0.3)
        assert c.n == -1
        assert c.mu == pytest.approx(0.7, abs=1e-14)

    def test_snapping(self):
        assert decompose(1.0 - 1e-16).mu == 0.0
        assert decompose(2.0 + 1e-16).mu == 0.0
        assert decompose(1.0 - 1e-16).n in (0, 1)
        # value reconstructed consistently after the snap
        c = decompose(5.0 - 1e-15)
        assert c.n + c.mu == pytest.approx(5.0, abs=1e-12)

    def test_non_finite(self):
        with pytest.raises(DomainError):
            decompose(math.inf)
        with pytest.raises(DomainError):
            decompose(math.nan)


class TestClassify:
    def test_essentially_self_adjoint(self):
        ch = classify(1, -1, decompose(2.7))
        assert ch.l == -1
        assert ch.region is Region.ESSENTIALLY_SELF_ADJOINT
        assert ch.nu == pytest.approx(1.7)

    def test_extension_family(self):
        ch = classify(2, -1, decompose(2.7))
        assert ch.l == 0
        assert ch.region is Region.EXTENSION_FAMILY
        assert ch.gamma == pytest.approx(0.7)

    def test_log_case(self):
        ch = classify(-2, 1, decompose(2.0))
        assert ch.l == 0
        assert ch.region is Region.LOG_CASE

    def test_gamma_values(self):
        coup = decompose(1.4)  # n=1, mu=0.4
        ch0 = classify(-1, 1, coup)  # l = 0
        assert ch0.gamma == pytest.approx(0.4)
        ch1 = classify(-2, 1, coup)  # l = -1
        assert ch1.region is Region.EXTENSION_FAMILY
        assert ch1.gamma == pytest.approx(0.6)

    def test_bad_spin(self):
        with pytest.raises(DomainError):
            classify(0, 2, decompose(0.5))


class TestEnumerate:
    def test_counts_and_order(self):
        coup = decompose(0.5)
        chans = enumerate_channels(coup, -1, 1)
        assert len(chans) == 6
        assert [(c.k, c.s) for c in chans] == [
            (-1, -1), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 1)]
        n_ext = sum(c.region is Region.EXTENSION_FAMILY for c in chans)
        assert n_ext == 4  # l=0 and l=-s for each s

    def test_log_case_count(self):
        coup = decompose(1.0)
        chans = enumerate_channels(coup, -2, 2)
        logs = [c for c in chans if c.region is Region.LOG_CASE]
        assert len(logs) == 2
        assert all(c.k == -c.s for c in logs)

    def test_zero_coupling(self):
        chans = enumerate_channels(decompose(0.0), 0, 0)
        assert len(chans) == 2
        assert all(c.region is Region.LOG_CASE for c in chans)

    def test_bad_range(self):
        with pytest.raises(DomainError):
            enumerate_channels(decompose(0.5), 2, 1)


@settings(max_examples=80, deadline=None)
@given(ma=st.floats(-5.0, 5.0), k=st.integers(-4, 4),
       s=st.sampled_from([-1, 1]))
def test_exactly_one_region(ma, k, s):
    ch = classify(k, s, decompose(ma))
    assert ch.region in (Region.ESSENTIALLY_SELF_ADJOINT,
                         Region.EXTENSION_FAMILY, Region.LOG_CASE)
    t = ch.l + s * decompose(ma).mu
    if ch.region is Region.ESSENTIALLY_SELF_ADJOINT:
        assert t * t >= 1.0
    elif ch.region is Region.EXTENSION_FAMILY:
        assert 0.0 < t * t < 1.0
    else:
        assert t == 0.0


@settings(max_examples=60, deadline=None)
@given(ma=st.floats(-3.0, 3.0), k=st.integers(-3, 3),
       s=st.sampled_from([-1, 1]))
def test_shift_covariance(ma, k, s):
    a = classify(k, s, decompose(ma))
    b = classify(k - s, s, decompose(ma + 1.0))
    # snapping can differ across the shift right at integer boundaries
    mu_a = decompose(ma).mu
    mu_b = decompose(ma + 1.0).mu
    if abs(mu_a - mu_b) > 1e-9:
        return
    assert a.region is b.region
    if a.nu is not None:
        assert a.nu == pytest.approx(b.nu, abs=1e-9)
    if a.gamma is not None:
        assert a.gamma == pytest.approx(b.gamma, abs=1e-9)
