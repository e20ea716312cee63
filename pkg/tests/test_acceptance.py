"""Acceptance gate: one test per criterion, one printed PASS line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Stated tolerances are asserted; stochastic criteria use the fixed
seed sets written into each test.
"""

import random
import time

import numpy as np
import pytest

from mindist.bounds import krasikov_upper, sqrt_display
from mindist.codes import LinearCode, build_bch, build_dcc, build_qdc, build_qr
from mindist.genetic import (
    GaConfig,
    crossover_one_point,
    crossover_two_point,
    crossover_uniform,
    mutate_classic,
    mutate_greedy,
    run_variant_a,
    run_variant_b,
)
from mindist.gf2 import BitMatrix, BitWord
from mindist.mim import MimConfig
from mindist.mim import run as run_mim
from mindist.oracle import exact_min_distance
from mindist.osd import OsdDecoder, SoftWord


def report(criterion: int, detail: str) -> None:
    print(f"\nACCEPTANCE CRITERION {criterion}: PASS - {detail}")


# Table 9 rows with length-consistent headers and k <= 27.  C(38,19) lists
# 18 header bits and C(40,20) lists 21; both are excluded as typos, and the
# mismatch is asserted below rather than silently skipped.
TABLE9_ROWS = [
    (20, 10, "1001111110", 6),
    (22, 11, "00010110111", 7),
    (24, 12, "101000110111", 8),
    (26, 13, "1000100111100", 7),
    (28, 14, "00101001111111", 8),
    (30, 15, "001110111111101", 8),
    (32, 16, "1010100100100110", 8),
    (34, 17, "10011001011010011", 8),
    (36, 18, "101000100011111111", 8),
    (42, 21, "000101111011110011110", 10),
    (44, 22, "1100011101010101001111", 10),
    (46, 23, "01101101111101011110000", 11),
    (50, 25, "1001000111111001011000000", 10),
    (52, 26, "11000100110110001110110010", 10),
    (54, 27, "011000110000111111101101000", 11),
]

TABLE9_TYPO_ROWS = [
    (38, 19, "110010000011111101"),
    (40, 20, "000111001100110101011"),
]


def test_criterion_1_oracle_vs_table9():
    for n, k, header in TABLE9_TYPO_ROWS:
        assert len(header) != k  # the published header cannot build C(n, k)
    checked = []
    for n, k, header, want in TABLE9_ROWS:
        assert len(header) == k
        code = build_dcc(BitWord.parse(header))
        assert (code.n, code.k) == (n, k)
        got = exact_min_distance(code).d_exact
        assert got == want, f"C({n},{k}): oracle {got} != published {want}"
        checked.append(got)
    report(1, f"{len(checked)} Table 9 rows exact: {checked}")


def test_criterion_2_qdc_construction_pins():
    got = {}
    for p, want in [(11, 8), (13, 8), (19, 8)]:
        code = build_qdc(p)
        res = exact_min_distance(code)
        assert res.d_exact == want, f"QDC(p={p}): {res.d_exact} != {want}"
        got[f"QDC({code.n},{code.k})"] = res.d_exact
    report(2, f"oracle distances all 8: {got}")


GA_TARGETS = [(4, 1, 3), (5, 1, 3), (6, 7, 15)]  # BCH(15,11), (31,26), (63,24)
GA_SEEDS = (0, 1, 2, 3, 4)


def test_criterion_3_ga_exactness_table7():
    started = time.perf_counter()
    summary = []
    for m, t, want in GA_TARGETS:
        code = build_bch(m, t)
        hits_a = hits_b = 0
        for seed in GA_SEEDS:
            cfg_a = GaConfig.variant_a(
                population_size=1000, max_generations=75, rng_seed=seed
            )
            hits_a += run_variant_a(code, cfg_a).d == want
            cfg_b = GaConfig.variant_b(
                population_size=1000, max_generations=75, rng_seed=seed
            )
            hits_b += run_variant_b(code, cfg_b).d == want
        label = f"BCH({code.n},{code.k})"
        assert hits_a >= 4, f"{label} GA-A hit {hits_a}/5 seeds"
        assert hits_b >= 4, f"{label} GA-B hit {hits_b}/5 seeds"
        summary.append(f"{label}: A {hits_a}/5, B {hits_b}/5")
    elapsed = time.perf_counter() - started
    assert elapsed < 300, f"GA suite took {elapsed:.0f}s, budget 300s"
    report(3, f"{'; '.join(summary)} in {elapsed:.0f}s")


MIM_TARGETS = [
    ("QR(41,21)", lambda: build_qr(41), 9, 1.12),
    ("QR(47,24)", lambda: build_qr(47), 11, 0.61),
    ("QR(73,37)", lambda: build_qr(73), 13, 0.75),
    ("BCH(63,24)", lambda: build_bch(6, 7), 15, 0.06),
    ("BCH(63,36)", lambda: build_bch(6, 5), 11, 0.07),
    ("QDC(24,12)", lambda: build_qdc(11), 8, 0.97),
]


def test_criterion_4_mim_validation():
    # published runtimes are hardware-bound guidance; the 100x slack is
    # enforced on the aggregate, per-run ratios are printed for inspection
    budget = 100.0 * sum(tte for _, _, _, tte in MIM_TARGETS)
    total = 0.0
    lines = []
    for label, make, want, tte in MIM_TARGETS:
        code = make()
        cfg = MimConfig.for_code(code, nb_test=100, error_max=20, osd_order=3, rng_seed=1)
        est = run_mim(code, cfg)
        assert est.d == want, f"{label}: MIM {est.d} != {want}"
        assert est.witness is not None and est.witness.weight == want
        total += est.wall_time_seconds
        lines.append(f"{label}={want} ({est.wall_time_seconds:.1f}s, x{est.wall_time_seconds / tte:.0f})")
    assert total < budget, f"MIM suite took {total:.0f}s, 100x budget {budget:.0f}s"
    report(4, f"{'; '.join(lines)}; total {total:.0f}s < {budget:.0f}s")


def _soundness_pool() -> list[LinearCode]:
    rng = random.Random(20260808)
    pool = [
        build_qdc(11),
        build_qdc(13),
        build_qr(7),
        build_qr(17),
        build_qr(23),
        build_qr(31),
        build_bch(4, 1),
        build_bch(4, 2),
        build_bch(5, 3),
    ]
    for _ in range(8):
        k = rng.randint(8, 14)
        pool.append(build_dcc(BitWord(k, rng.getrandbits(k) | 1)))
    for _ in range(5):
        k = rng.randint(6, 12)
        extra = rng.randint(k, 2 * k)
        rows = tuple((1 << i) | (rng.getrandbits(extra) << k) for i in range(k))
        pool.append(LinearCode(k + extra, k, BitMatrix(k + extra, rows)))
    assert all(code.k <= 20 for code in pool)
    return pool


def test_criterion_5_upper_bound_soundness():
    pool = _soundness_pool()
    exact = {id(code): exact_min_distance(code).d_exact for code in pool}
    rng = random.Random(99)
    violations = 0
    for trial in range(200):
        code = pool[rng.randrange(len(pool))]
        method = ("ga_a", "ga_b", "mim")[rng.randrange(3)]
        seed = rng.randrange(10_000)
        if method == "ga_a":
            est = run_variant_a(code, GaConfig.variant_a(
                population_size=100, max_generations=15, rng_seed=seed))
        elif method == "ga_b":
            est = run_variant_b(code, GaConfig.variant_b(
                population_size=100, max_generations=15, rng_seed=seed))
        else:
            est = run_mim(code, MimConfig.for_code(
                code, nb_test=3, error_max=min(10, code.n), rng_seed=seed))
        if est.witness is None:
            continue  # MIM diagnostic state carries no claim to check
        ok = (
            exact[id(code)] <= est.d
            and est.witness.weight == est.d
            and BitMatrix(code.n, code.generator.rows + (est.witness.bits,)).rank() == code.k
        )
        violations += not ok
    assert violations == 0
    report(5, "200 randomized (code, method, seed) triples, zero violations")


def test_criterion_6_bound_value_reproduction():
    assert sqrt_display(233) == 15.26
    assert sqrt_display(337) == 18.35
    assert krasikov_upper(239) == 39.74
    assert krasikov_upper(439) == 73.01
    report(6, "sqrt(233)=15.26, sqrt(337)=18.35, krasikov(239)=39.74, krasikov(439)=73.01")


def test_criterion_7_operator_property_suite():
    rng = random.Random(7)
    # crossover conservation, 10^4 random parent pairs per kind
    for cross in (crossover_one_point, crossover_two_point, crossover_uniform):
        for _ in range(10_000):
            k = rng.randint(2, 40)
            p1 = BitWord(k, rng.getrandbits(k))
            p2 = BitWord(k, rng.getrandbits(k))
            ch1, ch2 = cross(p1, p2, rng)
            assert (ch1 ^ ch2) == (p1 ^ p2)

    # classic mutation edge identities
    for _ in range(200):
        k = rng.randint(1, 48)
        w = BitWord(k, rng.getrandbits(k))
        assert mutate_classic(w, 0.0, rng) == w
        assert mutate_classic(w, 1.0, rng) == BitWord(k, w.bits ^ ((1 << k) - 1))

    # greedy mutation fixed point: unchanged exactly when no single flip helps
    code = build_qdc(11)
    from mindist.genetic import fitness

    for _ in range(300):
        w = BitWord(12, rng.getrandbits(12))
        out = mutate_greedy(code, w)
        base = fitness(code, w)
        improvements = [
            i for i in range(12)
            if fitness(code, BitWord(12, w.bits ^ (1 << i))) < base
        ]
        if improvements:
            assert out == BitWord(12, w.bits ^ (1 << improvements[0]))
        else:
            assert out == w

    # OSD noiseless fixed point and scaling invariance on QDC(24,12)
    dec = OsdDecoder(code, order=3)
    for _ in range(1000):
        cw = code.encode(BitWord(12, rng.getrandbits(12)))
        y = SoftWord.bpsk(cw)
        assert dec.decode(y) == cw
        scaled = np.asarray(y.values) * rng.uniform(0.1, 50.0)
        assert dec.decode(scaled) == cw
    report(7, "3x10^4 crossover pairs, mutation identities, greedy fixed point, 10^3 OSD fixed points: zero violations")


def test_criterion_8_bch127_desk_scale_substitute():
    code = build_bch(7, 10)
    assert (code.n, code.k) == (127, 64)

    started = time.perf_counter()
    ga = run_variant_b(code, GaConfig.variant_b(
        population_size=1000, max_generations=75, rng_seed=0))
    ga_time = time.perf_counter() - started
    assert ga.d <= 28, f"GA-B found {ga.d} > 28"
    assert ga_time < 600, f"GA-B took {ga_time:.0f}s, budget 600s"

    # MIM in chunks of trials until it reaches 21, deadline 30 minutes;
    # the d <= 28 mark must fall inside the first 10 minutes
    deadline = 1800
    mim_started = time.perf_counter()
    best = code.n
    found_28_at = found_21_at = None
    for chunk in range(12):
        cfg = MimConfig.for_code(code, nb_test=10, error_max=20, osd_order=3,
                                 rng_seed=100 + chunk)
        est = run_mim(code, cfg)
        elapsed = time.perf_counter() - mim_started
        if est.d < best:
            best = est.d
        if best <= 28 and found_28_at is None:
            found_28_at = elapsed
        if best <= 21:
            found_21_at = elapsed
            break
        if elapsed > deadline:
            break
    assert found_28_at is not None and found_28_at < 600, \
        f"MIM did not reach d <= 28 inside 10 minutes (best {best})"
    assert best == 21 and found_21_at < deadline, \
        f"MIM best {best} after {found_21_at or deadline:.0f}s, want exactly 21"
    report(8, f"GA-B d={ga.d} in {ga_time:.0f}s; MIM d<=28 at {found_28_at:.0f}s, d=21 at {found_21_at:.0f}s")
