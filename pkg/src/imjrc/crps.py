"""Constellation-randomization pre-scaling (CRPS) and scheme assembly.

Pre-scaling multiplies antenna row l of every codeword by a common complex
factor alpha_l.  D candidate factor vectors are drawn at random (candidate
0 is always the identity), each is scored by the MED it induces on the
member set, and the best one wins.  Because the identity is always in the
pool, the selected MED never falls below the unscaled one.

The five schemes this module assembles differ only in whether the member
set is pruned and whether/when pre-scaling is applied:

==================== =======================================================
baseline             first 2^B codewords, no pre-scaling
codebook_only        greedy pruning of the full set, no pre-scaling
crps_only            baseline member set, pre-scaling selected over it
codebook_then_crps   greedy pruning first, pre-scaling over the survivors
crps_then_codebook   pre-scaling over the full set, then greedy pruning
                     under the scaled distances
==================== =======================================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .channel import TAG_TPS, substream
from .codebook import (
    Codebook,
    Provenance,
    distance_matrix,
    greedy_prune,
    med,
    pair_row_distances,
)
from .enumeration import CodewordTable


@dataclass
class TpsFactor:
    """A selected pre-scaling vector and its position in the candidate pool."""

    alpha: np.ndarray
    d_index: int


class Scheme(str, enum.Enum):
    BASELINE = "baseline"
    CODEBOOK_ONLY = "codebook_only"
    CRPS_ONLY = "crps_only"
    CODEBOOK_THEN_CRPS = "codebook_then_crps"
    CRPS_THEN_CODEBOOK = "crps_then_codebook"


@dataclass
class SchemeBuild:
    """Everything a simulation needs for one scheme.

    ``member_matrices[r]`` is the transmitted codeword for rank r, with any
    selected pre-scaling already applied.
    """

    scheme: Scheme
    codebook: Codebook
    tps: TpsFactor | None
    member_matrices: np.ndarray


def generate_tps(d_count: int, l_r: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Draw the candidate pool: identity first, then d_count - 1 random vectors.

    Random entries are i.i.d. circularly-symmetric complex Gaussian,
    rescaled so each vector satisfies sum_l |alpha_l|^2 = L_R (the identity
    meets this by construction, so total transmit power is preserved).
    """
    if d_count < 1:
        raise ValueError(f"candidate count must be >= 1, got {d_count}")
    if l_r < 1:
        raise ValueError(f"L_R must be >= 1, got {l_r}")
    candidates = [np.ones(l_r, dtype=complex)]
    for _ in range(d_count - 1):
        z = rng.standard_normal((2, l_r))
        alpha = (z[0] + 1j * z[1]) / np.sqrt(2.0)
        power = np.sum(np.abs(alpha) ** 2)
        candidates.append(alpha * np.sqrt(l_r / power))
    return candidates


def apply_tps(mats: np.ndarray, alpha: np.ndarray) -> np.ndarray:
    """Scale antenna row l of each codeword by alpha[l]."""
    mats = np.asarray(mats)
    alpha = np.asarray(alpha)
    if mats.shape[-2] != alpha.shape[0]:
        raise ValueError(
            f"alpha length {alpha.shape[0]} does not match row count {mats.shape[-2]}"
        )
    return mats * alpha.reshape((1,) * (mats.ndim - 2) + (-1, 1))


def candidate_meds(
    candidates: list[np.ndarray],
    member_mats: np.ndarray,
    channel: np.ndarray | None = None,
) -> np.ndarray:
    """MED of the member set under each candidate pre-scaling.

    Without a design channel the per-pair row distances are computed once
    and every candidate is a weighted sum over them; with one, each
    candidate is scored through the channel directly.
    """
    member_mats = np.asarray(member_mats)
    if member_mats.shape[0] < 2:
        raise ValueError("candidate scoring needs at least two members")
    if not candidates:
        raise ValueError("candidate pool is empty")
    if channel is None:
        _, _, rowdist = pair_row_distances(member_mats)
        weights = np.stack([np.abs(a) ** 2 for a in candidates])
        return (rowdist @ weights.T).min(axis=0)
    meds = np.empty(len(candidates))
    for d, alpha in enumerate(candidates):
        dist = distance_matrix(apply_tps(member_mats, alpha), channel=channel)
        meds[d], _ = med(dist, range(member_mats.shape[0]))
    return meds


def select_tps(
    candidates: list[np.ndarray],
    member_mats: np.ndarray,
    channel: np.ndarray | None = None,
) -> tuple[TpsFactor, float]:
    """Pick the candidate maximizing the member-set MED.

    Ties go to the smallest candidate index, so the identity (index 0)
    wins over random candidates that merely match it.
    """
    meds = candidate_meds(candidates, member_mats, channel=channel)
    best = int(np.argmax(meds))
    return TpsFactor(alpha=candidates[best], d_index=best), float(meds[best])


def build_scheme(
    scheme: Scheme,
    table: CodewordTable,
    master_seed: int | None = None,
    design_channel: np.ndarray | None = None,
) -> SchemeBuild:
    """Assemble one scheme's codebook, pre-scaling factor, and member matrices.

    ``design_channel``, when given, makes every design-time distance a
    post-channel distance (detection is unaffected).  The pre-scaling
    candidate pool is drawn from a dedicated substream of ``master_seed``
    (default: the scenario's master seed), so all schemes of a scenario
    score the same pool.
    """
    params, derived = table.params, table.derived
    n_valid = 1 << derived.B
    if n_valid < 2:
        raise ValueError("scenario carries no information: fewer than two valid codewords")
    scheme = Scheme(scheme)
    seed = params.master_seed if master_seed is None else master_seed
    baseline_members = tuple(range(n_valid))

    def scaled(member_ids: tuple[int, ...], tps: TpsFactor | None) -> np.ndarray:
        mats = table.matrices[np.asarray(member_ids)]
        if tps is None or tps.d_index == 0:
            return mats
        return apply_tps(mats, tps.alpha)

    if scheme is Scheme.BASELINE:
        dist = distance_matrix(table.matrices[: n_valid], channel=design_channel)
        base_med, _ = med(dist, baseline_members)
        book = Codebook(baseline_members, base_med, Provenance.BASELINE)
        return SchemeBuild(scheme, book, None, scaled(baseline_members, None))

    if scheme is Scheme.CODEBOOK_ONLY:
        dist = distance_matrix(table.matrices, channel=design_channel)
        book, _ = greedy_prune(dist, n_valid, Provenance.PRUNED)
        return SchemeBuild(scheme, book, None, scaled(book.member_ids, None))

    candidates = generate_tps(params.D, params.L_R, substream(seed, TAG_TPS))

    if scheme is Scheme.CRPS_ONLY:
        mats = table.matrices[: n_valid]
        tps, best_med = select_tps(candidates, mats, channel=design_channel)
        book = Codebook(baseline_members, best_med, Provenance.CRPS_ONLY)
        return SchemeBuild(scheme, book, tps, scaled(baseline_members, tps))

    if scheme is Scheme.CODEBOOK_THEN_CRPS:
        dist = distance_matrix(table.matrices, channel=design_channel)
        pruned, _ = greedy_prune(dist, n_valid, Provenance.PRUNED)
        mats = table.matrices[np.asarray(pruned.member_ids)]
        tps, best_med = select_tps(candidates, mats, channel=design_channel)
        book = Codebook(pruned.member_ids, best_med, Provenance.PRUNED_THEN_CRPS)
        return SchemeBuild(scheme, book, tps, scaled(book.member_ids, tps))

    if scheme is Scheme.CRPS_THEN_CODEBOOK:
        tps, _ = select_tps(candidates, table.matrices, channel=design_channel)
        if tps.d_index == 0:
            dist = distance_matrix(table.matrices, channel=design_channel)
        elif design_channel is not None:
            dist = distance_matrix(apply_tps(table.matrices, tps.alpha), channel=design_channel)
        else:
            dist = distance_matrix(table.matrices, row_weights=np.abs(tps.alpha) ** 2)
        book, _ = greedy_prune(dist, n_valid, Provenance.CRPS_THEN_PRUNED)
        return SchemeBuild(scheme, book, tps, scaled(book.member_ids, tps))

    raise ValueError(f"unknown scheme {scheme!r}")
