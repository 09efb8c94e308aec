"""Pairwise distances and greedy worst-codeword elimination.

All distances are squared Frobenius distances between codeword matrices.
The design objective everywhere is the minimum pairwise distance (MED) of
a member set; the greedy pass below removes, one at a time, whichever
endpoint of the current closest pair is easier to separate from the rest,
until only the target count survives.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .enumeration import CodewordTable, rank_to_bits


class Provenance(str, enum.Enum):
    """How a codebook's member set and distance metric were produced."""

    BASELINE = "baseline"
    PRUNED = "pruned"
    CRPS_ONLY = "crps_only"
    PRUNED_THEN_CRPS = "pruned_then_crps"
    CRPS_THEN_PRUNED = "crps_then_pruned"


@dataclass(frozen=True)
class Codebook:
    """An ordered member set with its MED under the design-time metric."""

    member_ids: tuple[int, ...]
    med: float
    provenance: Provenance


def distance_matrix(
    mats: np.ndarray,
    row_weights: np.ndarray | None = None,
    channel: np.ndarray | None = None,
) -> np.ndarray:
    """All-pairs squared Frobenius distances between codeword matrices.

    Parameters
    ----------
    mats : (n, L_R, L_T) complex array of codewords.
    row_weights : optional per-antenna-row non-negative weights; entry
        (i, j) becomes sum_l row_weights[l] * ||mats[i,l] - mats[j,l]||^2,
        the distance after scaling row l by alpha_l with |alpha_l|^2 equal
        to the weight.
    channel : optional (L_C, L_R) matrix; distances are computed between
        channel @ mats[i] instead of the codewords themselves.

    Computed via the Gram identity ||u - v||^2 = ||u||^2 + ||v||^2
    - 2 Re<u, v>, one matmul per call (or per row when weighted).  The
    result is exactly symmetric with a zero diagonal and no negative
    entries.
    """
    mats = np.asarray(mats)
    if mats.ndim != 3:
        raise ValueError(f"expected (n, L_R, L_T) matrices, got shape {mats.shape}")
    if channel is not None:
        if row_weights is not None:
            # post-channel distances depend on the scaling phases, not just
            # the weights; scale the matrices first instead
            raise ValueError("row_weights cannot be combined with a channel")
        mats = np.einsum("cr,nrt->nct", channel, mats)
    n = mats.shape[0]
    if row_weights is None:
        flat = mats.reshape(n, -1)
        sq = np.einsum("nt,nt->n", flat, flat.conj()).real
        gram = (flat @ flat.conj().T).real
        dist = sq[:, None] + sq[None, :] - 2.0 * gram
    else:
        weights = np.asarray(row_weights, dtype=float)
        if weights.shape != (mats.shape[1],):
            raise ValueError(
                f"row_weights must have shape ({mats.shape[1]},), got {weights.shape}"
            )
        if np.any(weights < 0.0):
            raise ValueError("row_weights must be non-negative")
        dist = np.zeros((n, n))
        for l in range(mats.shape[1]):
            rows = mats[:, l, :]
            sq = np.einsum("nt,nt->n", rows, rows.conj()).real
            gram = (rows @ rows.conj().T).real
            dist += weights[l] * (sq[:, None] + sq[None, :] - 2.0 * gram)
    np.maximum(dist, 0.0, out=dist)
    dist = np.triu(dist, 1)
    return dist + dist.T


def pair_row_distances(mats: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-antenna-row squared distances for every unordered codeword pair.

    Returns (i_idx, j_idx, rowdist) where rowdist[p, l] is
    ||mats[i_idx[p], l] - mats[j_idx[p], l]||^2.  Weighting rowdist by
    |alpha_l|^2 and summing over l gives the pair distance after row
    pre-scaling, which is what makes candidate scoring cheap.
    """
    mats = np.asarray(mats)
    n, l_r = mats.shape[0], mats.shape[1]
    i_idx, j_idx = np.triu_indices(n, 1)
    rowdist = np.empty((i_idx.size, l_r))
    for l in range(l_r):
        rows = mats[:, l, :]
        sq = np.einsum("nt,nt->n", rows, rows.conj()).real
        gram = (rows @ rows.conj().T).real
        d = sq[:, None] + sq[None, :] - 2.0 * gram
        rowdist[:, l] = np.maximum(d[i_idx, j_idx], 0.0)
    return i_idx, j_idx, rowdist


def med(dist: np.ndarray, members: Sequence[int]) -> tuple[float, tuple[int, int]]:
    """Minimum pairwise distance over a member set and the pair achieving it.

    Ties resolve to the lexicographically smallest (i, j) pair of global
    indices, i < j.
    """
    idx = np.asarray(sorted(members))
    if idx.size < 2:
        raise ValueError("MED needs at least two members")
    sub = dist[np.ix_(idx, idx)].copy()
    np.fill_diagonal(sub, np.inf)
    flat = int(np.argmin(sub))
    a, b = divmod(flat, idx.size)
    i, j = int(idx[a]), int(idx[b])
    if i > j:
        i, j = j, i
    return float(sub[a, b]), (i, j)


def greedy_prune(
    dist: np.ndarray,
    target: int,
    provenance: Provenance = Provenance.PRUNED,
) -> tuple[Codebook, np.ndarray]:
    """Eliminate codewords one at a time until ``target`` remain.

    Each step finds the closest surviving pair, then removes the endpoint
    whose second-smallest distance to the rest (partner excluded) is
    smaller, i.e. the endpoint that is also crowded by someone else.  A
    tie removes the larger global index.  MED ties pick the
    lexicographically smallest pair.

    Returns the codebook and the MED trajectory: entry 0 is the MED of the
    full set, entry q the MED after q eliminations.  The trajectory is
    non-decreasing because removing a codeword never shrinks any surviving
    pair's distance.
    """
    n = dist.shape[0]
    if dist.shape != (n, n):
        raise ValueError(f"distance matrix must be square, got {dist.shape}")
    if target < 2:
        raise ValueError(f"target must be >= 2, got {target}")
    if target > n:
        raise ValueError(f"target {target} exceeds {n} available codewords")

    work = dist.copy()
    np.fill_diagonal(work, np.inf)
    alive = np.ones(n, dtype=bool)
    meds = np.empty(n - target + 1)

    for step in range(n - target):
        flat = int(np.argmin(work))
        i, j = divmod(flat, n)
        if i > j:
            i, j = j, i
        meds[step] = work[i, j]
        # second-smallest distance of each endpoint, partner excluded
        row_i = work[i]
        saved = row_i[j]
        row_i[j] = np.inf
        second_i = row_i.min()
        row_i[j] = saved
        row_j = work[j]
        saved = row_j[i]
        row_j[i] = np.inf
        second_j = row_j.min()
        row_j[i] = saved
        # the more crowded endpoint goes; on a tie the larger index goes
        drop = i if second_i < second_j else j
        alive[drop] = False
        work[drop, :] = np.inf
        work[:, drop] = np.inf

    survivors = tuple(int(g) for g in np.flatnonzero(alive))
    # eliminated rows and columns are inf, so this is the survivor MED
    meds[-1] = work.min()
    book = Codebook(member_ids=survivors, med=float(meds[-1]), provenance=provenance)
    return book, meds


def export_codebook_csv(book: Codebook, table: CodewordTable, path: str) -> None:
    """Write one row per member: rank, bit label, indices, subset, allocation."""
    b = table.derived.B
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["rank", "bits", "global_index", "freq_subset", "allocation", "provenance", "med"]
        )
        for rank, g in enumerate(book.member_ids):
            bits = "".join(map(str, rank_to_bits(rank, b)))
            writer.writerow(
                [
                    rank,
                    bits,
                    g,
                    "-".join(map(str, table.subset_of(g))),
                    "-".join(map(str, table.allocation_of(g))),
                    book.provenance.value,
                    repr(book.med),
                ]
            )
