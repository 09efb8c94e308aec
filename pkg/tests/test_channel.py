"""Fading, noise, and seeded substream tests."""

import math

import numpy as np
import pytest

from imjrc.channel import (
    TAG_BITS,
    TAG_CHANNEL,
    TAG_DESIGN_CHANNEL,
    TAG_NOISE,
    TAG_TPS,
    complex_normal,
    draw_channel,
    receive,
    snr_to_sigma2,
    substream,
)


class TestSubstreams:
    def test_same_key_replays(self):
        a = substream(42, TAG_CHANNEL, 7).standard_normal(16)
        b = substream(42, TAG_CHANNEL, 7).standard_normal(16)
        assert np.array_equal(a, b)

    def test_different_tags_decorrelate(self):
        a = substream(42, TAG_CHANNEL, 7).standard_normal(16)
        b = substream(42, TAG_NOISE, 7).standard_normal(16)
        c = substream(42, TAG_CHANNEL, 8).standard_normal(16)
        assert not np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_master_seed_matters(self):
        a = substream(1, TAG_BITS, 0).integers(1 << 30)
        b = substream(2, TAG_BITS, 0).integers(1 << 30)
        assert a != b

    def test_tags_are_distinct(self):
        tags = {TAG_TPS, TAG_BITS, TAG_CHANNEL, TAG_NOISE, TAG_DESIGN_CHANNEL}
        assert len(tags) == 5


class TestComplexNormal:
    def test_shape_and_dtype(self):
        z = complex_normal(np.random.default_rng(0), (3, 5))
        assert z.shape == (3, 5)
        assert z.dtype == np.complex128

    def test_unit_variance_split_between_components(self):
        z = complex_normal(np.random.default_rng(1), (400, 250))
        assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, abs=0.02)
        assert np.var(z.real) == pytest.approx(0.5, abs=0.02)
        assert np.var(z.imag) == pytest.approx(0.5, abs=0.02)
        assert abs(np.mean(z)) < 0.01


class TestDrawChannel:
    def test_shape(self):
        h = draw_channel(4, 6, np.random.default_rng(2))
        assert h.shape == (4, 6)
        assert h.dtype == np.complex128

    def test_unit_average_entry_power(self):
        rng = np.random.default_rng(3)
        draws = np.stack([draw_channel(4, 6, rng) for _ in range(4000)])
        assert np.mean(np.abs(draws) ** 2) == pytest.approx(1.0, abs=0.02)

    def test_unit_received_entry_power(self, small_table):
        # E|row of H times codeword|^2 is 1 per entry because codeword rows
        # carry 1/L_R power each; this anchors the snr = 1/sigma^2 convention
        x = small_table.matrices[3]
        rng = np.random.default_rng(4)
        acc = 0.0
        trials = 3000
        for _ in range(trials):
            h = draw_channel(2, 4, rng)
            acc += np.mean(np.abs(h @ x) ** 2)
        assert acc / trials == pytest.approx(1.0, abs=0.02)


class TestSnrToSigma2:
    @pytest.mark.parametrize(
        "snr_db,sigma2",
        [(0.0, 1.0), (10.0, 0.1), (-10.0, 10.0), (20.0, 0.01), (3.0, 10 ** (-0.3))],
    )
    def test_known_values(self, snr_db, sigma2):
        assert snr_to_sigma2(snr_db) == pytest.approx(sigma2, rel=1e-12)

    def test_infinite_snr_is_noiseless(self):
        assert snr_to_sigma2(math.inf) == 0.0


class TestReceive:
    def test_noiseless_is_exact_product(self, small_table):
        x = small_table.matrices[0]
        rng = np.random.default_rng(5)
        h = draw_channel(2, 4, rng)
        y = receive(x, h, 0.0, rng)
        assert np.array_equal(y, h @ x)

    def test_noise_power_matches_sigma2(self, small_table):
        x = small_table.matrices[1]
        rng = np.random.default_rng(6)
        h = draw_channel(2, 4, rng)
        sigma2 = 0.25
        residuals = []
        for _ in range(2000):
            y = receive(x, h, sigma2, rng)
            residuals.append(np.abs(y - h @ x) ** 2)
        assert np.mean(residuals) == pytest.approx(sigma2, rel=0.05)

    def test_deterministic_given_stream(self, small_table):
        x = small_table.matrices[2]
        h = draw_channel(2, 4, substream(7, TAG_CHANNEL, 0))
        a = receive(x, h, 0.5, substream(7, TAG_NOISE, 0))
        b = receive(x, h, 0.5, substream(7, TAG_NOISE, 0))
        assert np.array_equal(a, b)

    def test_rejects_mismatched_shapes(self, small_table):
        x = small_table.matrices[0]
        rng = np.random.default_rng(8)
        h = draw_channel(2, 3, rng)
        with pytest.raises(ValueError):
            receive(x, h, 0.1, rng)
