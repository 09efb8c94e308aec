"""Pre-scaling pool generation, candidate scoring, and scheme assembly tests."""

import dataclasses

import numpy as np
import pytest

from imjrc.channel import TAG_TPS, substream
from imjrc.codebook import Provenance, distance_matrix, med
from imjrc.crps import (
    Scheme,
    apply_tps,
    build_scheme,
    candidate_meds,
    generate_tps,
    select_tps,
)
from imjrc.enumeration import build_table
from imjrc.params import SystemParams, derive


def _random_mats(rng, n, l_r, l_t):
    return rng.standard_normal((n, l_r, l_t)) + 1j * rng.standard_normal((n, l_r, l_t))


class TestGenerateTps:
    def test_identity_comes_first(self):
        pool = generate_tps(4, 6, np.random.default_rng(0))
        assert np.array_equal(pool[0], np.ones(6, dtype=complex))
        assert len(pool) == 4

    def test_single_candidate_pool_is_identity_only(self):
        pool = generate_tps(1, 5, np.random.default_rng(0))
        assert len(pool) == 1
        assert np.array_equal(pool[0], np.ones(5, dtype=complex))

    def test_every_candidate_preserves_power(self):
        pool = generate_tps(50, 6, np.random.default_rng(1))
        for alpha in pool:
            assert np.sum(np.abs(alpha) ** 2) == pytest.approx(6.0, rel=1e-12)

    def test_deterministic_per_substream(self):
        a = generate_tps(10, 4, substream(1234, TAG_TPS))
        b = generate_tps(10, 4, substream(1234, TAG_TPS))
        for x, y in zip(a, b):
            assert np.array_equal(x, y)

    def test_rejects_bad_counts(self):
        with pytest.raises(ValueError):
            generate_tps(0, 4, np.random.default_rng(0))
        with pytest.raises(ValueError):
            generate_tps(3, 0, np.random.default_rng(0))


class TestApplyTps:
    def test_elementwise_oracle(self):
        rng = np.random.default_rng(2)
        mats = _random_mats(rng, 3, 4, 5)
        alpha = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        scaled = apply_tps(mats, alpha)
        for n in range(3):
            for l in range(4):
                assert np.allclose(scaled[n, l], alpha[l] * mats[n, l], rtol=1e-15)

    def test_single_matrix_broadcast(self):
        rng = np.random.default_rng(3)
        mat = rng.standard_normal((4, 5)) + 0j
        alpha = np.arange(1, 5).astype(complex)
        assert np.array_equal(apply_tps(mat, alpha), mat * alpha[:, None])

    def test_codeword_energy_preserved(self, small_table, small_derived):
        # rows of a synthesized codeword carry equal energy, so any
        # power-normalized factor keeps the Frobenius norm at L_T
        pool = generate_tps(6, 4, np.random.default_rng(4))
        for alpha in pool:
            scaled = apply_tps(small_table.matrices, alpha)
            norms = np.einsum("nrt,nrt->n", scaled, scaled.conj()).real
            assert np.allclose(norms, small_derived.L_T, rtol=1e-9)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            apply_tps(np.zeros((2, 3, 4), dtype=complex), np.ones(5, dtype=complex))


class TestCandidateScoring:
    def test_matches_full_reevaluation(self):
        rng = np.random.default_rng(5)
        mats = _random_mats(rng, 5, 4, 6)
        pool = generate_tps(6, 4, rng)
        meds = candidate_meds(pool, mats)
        for d, alpha in enumerate(pool):
            dist = distance_matrix(apply_tps(mats, alpha))
            expect, _ = med(dist, range(5))
            assert meds[d] == pytest.approx(expect, rel=1e-9)

    def test_channel_path_matches_reevaluation(self):
        rng = np.random.default_rng(6)
        mats = _random_mats(rng, 4, 3, 5)
        h = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
        pool = generate_tps(5, 3, rng)
        meds = candidate_meds(pool, mats, channel=h)
        for d, alpha in enumerate(pool):
            dist = distance_matrix(apply_tps(mats, alpha), channel=h)
            expect, _ = med(dist, range(4))
            assert meds[d] == pytest.approx(expect, rel=1e-9)

    def test_select_never_below_identity(self):
        rng = np.random.default_rng(7)
        mats = _random_mats(rng, 6, 4, 5)
        pool = generate_tps(20, 4, rng)
        tps, best = select_tps(pool, mats)
        meds = candidate_meds(pool, mats)
        assert best >= meds[0]
        assert best == pytest.approx(meds.max(), rel=1e-12)
        assert np.array_equal(tps.alpha, pool[tps.d_index])

    def test_select_breaks_ties_toward_first(self):
        rng = np.random.default_rng(8)
        mats = _random_mats(rng, 4, 3, 5)
        identity = np.ones(3, dtype=complex)
        tps, _ = select_tps([identity, identity.copy()], mats)
        assert tps.d_index == 0

    def test_constructed_amplification_wins(self):
        # two members that differ only on row 0: pushing power into that
        # row grows the (single) pairwise distance, so the non-identity
        # candidate must be selected
        rng = np.random.default_rng(9)
        base = rng.standard_normal((3, 5)) + 1j * rng.standard_normal((3, 5))
        other = base.copy()
        other[0] = base[0] + (rng.standard_normal(5) + 1j * rng.standard_normal(5))
        mats = np.stack([base, other])
        boosted = np.array([np.sqrt(2.0), np.sqrt(0.5), np.sqrt(0.5)], dtype=complex)
        identity = np.ones(3, dtype=complex)
        tps, best = select_tps([identity, boosted], mats)
        meds = candidate_meds([identity], mats)
        assert tps.d_index == 1
        assert best == pytest.approx(2.0 * meds[0], rel=1e-9)

    def test_rejects_degenerate_input(self):
        rng = np.random.default_rng(10)
        mats = _random_mats(rng, 3, 2, 4)
        with pytest.raises(ValueError):
            candidate_meds([], mats)
        with pytest.raises(ValueError):
            candidate_meds([np.ones(2, dtype=complex)], mats[:1])


class TestBuildScheme:
    def test_member_counts_and_provenance(self, small_table, small_derived):
        n_valid = 1 << small_derived.B
        expected = {
            Scheme.BASELINE: Provenance.BASELINE,
            Scheme.CODEBOOK_ONLY: Provenance.PRUNED,
            Scheme.CRPS_ONLY: Provenance.CRPS_ONLY,
            Scheme.CODEBOOK_THEN_CRPS: Provenance.PRUNED_THEN_CRPS,
            Scheme.CRPS_THEN_CODEBOOK: Provenance.CRPS_THEN_PRUNED,
        }
        for scheme, provenance in expected.items():
            build = build_scheme(scheme, small_table)
            assert build.codebook.provenance is provenance
            assert len(build.codebook.member_ids) == n_valid
            assert build.member_matrices.shape[0] == n_valid

    def test_baseline_uses_first_ranks_unscaled(self, small_table, small_derived):
        build = build_scheme(Scheme.BASELINE, small_table)
        n_valid = 1 << small_derived.B
        assert build.codebook.member_ids == tuple(range(n_valid))
        assert build.tps is None
        assert np.array_equal(build.member_matrices, small_table.matrices[:n_valid])

    def test_identity_selection_leaves_matrices_untouched(self, small_table):
        build = build_scheme(Scheme.CRPS_ONLY, small_table)
        if build.tps.d_index == 0:
            n = build.member_matrices.shape[0]
            assert np.array_equal(build.member_matrices, small_table.matrices[:n])
        else:
            scaled = apply_tps(
                small_table.matrices[: build.member_matrices.shape[0]], build.tps.alpha
            )
            assert np.array_equal(build.member_matrices, scaled)

    def test_deterministic_rebuild(self, small_table):
        a = build_scheme(Scheme.CRPS_THEN_CODEBOOK, small_table)
        b = build_scheme(Scheme.CRPS_THEN_CODEBOOK, small_table)
        assert a.codebook == b.codebook
        assert a.tps.d_index == b.tps.d_index
        assert np.array_equal(a.tps.alpha, b.tps.alpha)
        assert np.array_equal(a.member_matrices, b.member_matrices)

    def test_single_candidate_pool_collapses_to_non_crps(self, small_params):
        # with D = 1 only the identity factor exists, so every CRPS variant
        # must coincide with its non-CRPS counterpart bit for bit
        params = dataclasses.replace(small_params, D=1)
        table = build_table(params, derive(params))
        baseline = build_scheme(Scheme.BASELINE, table)
        pruned = build_scheme(Scheme.CODEBOOK_ONLY, table)
        crps_only = build_scheme(Scheme.CRPS_ONLY, table)
        cb_then = build_scheme(Scheme.CODEBOOK_THEN_CRPS, table)
        crps_then = build_scheme(Scheme.CRPS_THEN_CODEBOOK, table)

        assert crps_only.tps.d_index == 0
        assert crps_only.codebook.member_ids == baseline.codebook.member_ids
        assert np.array_equal(crps_only.member_matrices, baseline.member_matrices)

        assert cb_then.codebook.member_ids == pruned.codebook.member_ids
        assert np.array_equal(cb_then.member_matrices, pruned.member_matrices)

        assert crps_then.codebook.member_ids == pruned.codebook.member_ids
        assert np.array_equal(crps_then.member_matrices, pruned.member_matrices)

    def test_design_channel_changes_design_only(self, small_table, small_params):
        rng = np.random.default_rng(11)
        h = rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4))
        plain = build_scheme(Scheme.CODEBOOK_ONLY, small_table)
        aware = build_scheme(Scheme.CODEBOOK_ONLY, small_table, design_channel=h)
        # the channel reshuffles which pairs are closest, so the MED value
        # lives on a different scale; membership may or may not change, but
        # the build must stay well formed
        assert len(aware.codebook.member_ids) == len(plain.codebook.member_ids)
        dist = distance_matrix(small_table.matrices, channel=h)
        expect, _ = med(dist, aware.codebook.member_ids)
        assert aware.codebook.med == pytest.approx(expect, rel=1e-12)

    def test_rejects_informationless_scenario(self):
        params = SystemParams(M=1, K=1, L_R=2, delta_f=4e6)
        table = build_table(params, derive(params))
        with pytest.raises(ValueError):
            build_scheme(Scheme.BASELINE, table)

    def test_scheme_enum_round_trip(self):
        assert Scheme("baseline") is Scheme.BASELINE
        assert Scheme("crps_then_codebook") is Scheme.CRPS_THEN_CODEBOOK
        with pytest.raises(ValueError):
            Scheme("not_a_scheme")
