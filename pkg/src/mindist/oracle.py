"""Exact minimum distance by exhaustive enumeration of all 2^k codewords.

The sweep follows the reflected Gray sequence over information words, so
consecutive codewords differ by one generator row.  For speed the k-bit
Gray counter is split into a low block (a precomputed table of 2^L partial
codewords, packed into uint64 lanes) and a high block walked one Gray step
at a time; each high step XORs one row into a running base and the whole
low block is scored with vectorized popcounts.  The visit order is exactly
the single Gray chain, so "first codeword attaining the minimum" is well
defined and deterministic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode
from .errors import BudgetError
from .gf2 import BitWord

__all__ = ["ExactResult", "exact_min_distance", "exact_enumerator", "DEFAULT_BUDGET"]

DEFAULT_BUDGET = 32
BUDGET_ENV_VAR = "MINDIST_ORACLE_BUDGET"

_LOW_BLOCK_BITS = 16


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exhaustive sweep.

    ``witness`` is the first codeword of minimum weight in sweep order.
    ``enumerator`` maps weight -> codeword count (weight 0 included) when
    collection was requested, else None.  ``enumerated`` counts the
    codewords visited (always 2^k).
    """

    d_exact: int
    witness: BitWord
    enumerator: dict[int, int] | None
    enumerated: int


def _pack_rows(rows: tuple[int, ...], n: int) -> np.ndarray:
    lanes = (n + 63) // 64
    out = np.zeros((len(rows), lanes), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for lane in range(lanes):
            out[i, lane] = (r >> (64 * lane)) & mask
    return out


def exact_min_distance(
    code: LinearCode,
    budget: int | None = None,
    collect_enumerator: bool = False,
) -> ExactResult:
    """Minimum weight over all nonzero information words, with witness.

    Refuses to run when k exceeds the budget (default 32, overridable via
    the MINDIST_ORACLE_BUDGET environment variable or the ``budget``
    argument) because the sweep visits 2^k codewords.
    """
    k, n = code.k, code.n
    if budget is None:
        budget = _default_budget()
    if k > budget:
        raise BudgetError(
            f"k = {k} exceeds oracle budget {budget}: the sweep would visit "
            f"2^{k} = {1 << k} codewords"
        )
    rows = code.generator.rows
    rows_u = _pack_rows(rows, n)
    lanes = rows_u.shape[1]

    low = min(k, _LOW_BLOCK_BITS)
    high = k - low

    # low-block table in Gray order: entry j = codeword of gray(j) over rows[:low]
    table = np.zeros((1 << low, lanes), dtype=np.uint64)
    for j in range(1, 1 << low):
        flip = (j & -j).bit_length() - 1
        table[j] = table[j - 1] ^ rows_u[flip]

    counts = np.zeros(n + 1, dtype=np.int64) if collect_enumerator else None
    sentinel = n + 1
    best_w = sentinel
    best_block = best_pos = 0

    base = np.zeros(lanes, dtype=np.uint64)
    prev_gray = 0
    for b in range(1 << high):
        hi_gray = b ^ (b >> 1)
        step = hi_gray ^ prev_gray
        if step:
            base = base ^ rows_u[low + (step & -step).bit_length() - 1]
        prev_gray = hi_gray

        w = np.bitwise_count(table ^ base).sum(axis=1, dtype=np.int64)
        if counts is not None:
            counts += np.bincount(w, minlength=n + 1)
        if b == 0:
            w[0] = sentinel  # the all-zero information word
        block_min = int(w.min())
        if block_min < best_w:
            best_w = block_min
            if b & 1:
                # odd high blocks are visited in reflected (reverse) order
                pos = len(w) - 1 - int(np.argmin(w[::-1]))
            else:
                pos = int(np.argmin(w))
            best_block, best_pos = b, pos

    info_bits = ((best_block ^ (best_block >> 1)) << low) | (best_pos ^ (best_pos >> 1))
    witness = code.encode(BitWord(k, info_bits))
    assert witness.weight == best_w and best_w <= n

    enumerator = None
    if counts is not None:
        enumerator = {wt: int(c) for wt, c in enumerate(counts) if c}
    return ExactResult(
        d_exact=best_w,
        witness=witness,
        enumerator=enumerator,
        enumerated=1 << k,
    )


def exact_enumerator(code: LinearCode, budget: int | None = None) -> ExactResult:
    """Same sweep with the full weight enumerator populated."""
    return exact_min_distance(code, budget=budget, collect_enumerator=True)
