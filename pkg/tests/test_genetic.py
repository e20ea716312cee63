import math
import random

import pytest

from mindist.codes import build_bch
from mindist.errors import DimensionError
from mindist.genetic import (
    GaConfig,
    crossover_one_point,
    crossover_two_point,
    crossover_uniform,
    fitness,
    mutate_classic,
    mutate_greedy,
    run_variant_a,
    run_variant_b,
    select_random,
    select_roulette,
    select_tournament,
)
from mindist.gf2 import BitWord
from mindist.oracle import exact_min_distance


class FakeRng:
    """Scripted RNG: hands out queued answers per method."""

    def __init__(self, randint=(), sample=(), random=(), getrandbits=()):
        self._randint = list(randint)
        self._sample = list(sample)
        self._random = list(random)
        self._getrandbits = list(getrandbits)

    def randint(self, a, b):
        v = self._randint.pop(0)
        assert a <= v <= b
        return v

    def sample(self, population, k):
        return self._sample.pop(0)

    def random(self):
        return self._random.pop(0)

    def getrandbits(self, k):
        return self._getrandbits.pop(0)


class TestFitness:
    def test_all_zero_scores_n(self, c20):
        assert fitness(c20, BitWord.zeros(10)) == 20

    def test_repetition(self, repetition3):
        assert fitness(repetition3, BitWord.parse("1")) == 3

    def test_c20_unit_vector(self, c20):
        assert fitness(c20, BitWord.unit(10, 0)) == 8

    def test_length_check(self, c20):
        with pytest.raises(DimensionError):
            fitness(c20, BitWord.zeros(9))


class TestCrossover:
    @pytest.mark.parametrize(
        "cross", [crossover_one_point, crossover_two_point, crossover_uniform]
    )
    def test_identical_parents(self, cross):
        rng = random.Random(0)
        p = BitWord.parse("1011001")
        ch1, ch2 = cross(p, p, rng)
        assert ch1 == p and ch2 == p

    def test_one_point_forced_cut(self):
        p1, p2 = BitWord.parse("1100"), BitWord.parse("0011")
        ch1, ch2 = crossover_one_point(p1, p2, FakeRng(randint=[2]))
        assert (ch1.to01(), ch2.to01()) == ("1111", "0000")

    def test_two_point_forced_cuts(self):
        p1, p2 = BitWord.parse("111111"), BitWord.parse("000000")
        ch1, ch2 = crossover_two_point(p1, p2, FakeRng(sample=[[2, 4]]))
        assert (ch1.to01(), ch2.to01()) == ("110011", "001100")

    def test_uniform_zero_mask_children_equal_parents(self):
        p1, p2 = BitWord.parse("1010"), BitWord.parse("0110")
        ch1, ch2 = crossover_uniform(p1, p2, FakeRng(getrandbits=[0]))
        assert (ch1, ch2) == (p1, p2)

    def test_uniform_full_mask_swaps(self):
        p1, p2 = BitWord.parse("1010"), BitWord.parse("0110")
        ch1, ch2 = crossover_uniform(p1, p2, FakeRng(getrandbits=[0b1111]))
        assert (ch1, ch2) == (p2, p1)

    @pytest.mark.parametrize(
        "cross", [crossover_one_point, crossover_two_point, crossover_uniform]
    )
    def test_conservation(self, cross):
        rng = random.Random(42)
        for _ in range(300):
            k = rng.randint(2, 48)
            p1 = BitWord(k, rng.getrandbits(k))
            p2 = BitWord(k, rng.getrandbits(k))
            ch1, ch2 = cross(p1, p2, rng)
            assert (ch1 ^ ch2) == (p1 ^ p2)

    def test_one_point_degenerate_k1(self):
        p1, p2 = BitWord.parse("1"), BitWord.parse("0")
        assert crossover_one_point(p1, p2, random.Random(0)) == (p1, p2)

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            crossover_one_point(BitWord.zeros(3), BitWord.zeros(4), random.Random(0))


class TestMutation:
    def test_classic_pm_zero_identity(self):
        w = BitWord.parse("100110")
        assert mutate_classic(w, 0.0, random.Random(0)) == w

    def test_classic_pm_one_complement(self):
        w = BitWord.parse("100110")
        assert mutate_classic(w, 1.0, random.Random(0)).to01() == "011001"

    def test_classic_binomial_statistics(self):
        # p = 0.5 over 10^4 bits: flip count within 3 sigma on every trial
        rng = random.Random(7)
        n, p = 10_000, 0.5
        sigma = math.sqrt(n * p * (1 - p))
        w = BitWord.zeros(n)
        for _ in range(20):
            flipped = mutate_classic(w, p, rng).weight
            assert abs(flipped - n * p) < 3 * sigma

    def test_greedy_local_minimum_fixed_point(self, repetition3):
        # flipping the lone bit gives the zero word, fitness n = 3: no gain
        w = BitWord.parse("1")
        assert mutate_greedy(repetition3, w) == w

    def test_greedy_improving_flip(self, padded_identity8):
        w = BitWord.parse("11000000")
        out = mutate_greedy(padded_identity8, w)
        assert out.to01() == "01000000"

    def test_greedy_single_flip_only(self, padded_identity8):
        w = BitWord.parse("11110000")
        out = mutate_greedy(padded_identity8, w)
        assert out.weight == 3  # one flip per call, not a full descent

    def test_greedy_no_improvement_anywhere(self, padded_identity8):
        w = BitWord.parse("10000000")
        # flipping the set bit gives the zero word (fitness n); flipping any
        # clear bit increases weight: strict local minimum
        assert mutate_greedy(padded_identity8, w) == w


class TestSelection:
    def test_population_of_one(self):
        rng = random.Random(0)
        assert select_tournament([5], 3, rng) == 0
        assert select_random([5], rng) == 0
        assert select_roulette([5], 10, rng) == 0

    def test_exhaustive_tournament_returns_global_best(self):
        fits = [9, 4, 7, 2, 8]
        rng = random.Random(1)
        for _ in range(20):
            assert fits[select_tournament(fits, 200, rng)] == 2

    def test_roulette_frequency_ratio(self):
        # fitness 1 vs fitness n: weights n vs 1 under (n + 1 - f)
        n = 16
        fits = [1, n]
        rng = random.Random(3)
        draws = 20_000
        hits = sum(1 for _ in range(draws) if select_roulette(fits, n, rng) == 0)
        expected = draws * n / (n + 1)
        sigma = math.sqrt(draws * (n / (n + 1)) * (1 / (n + 1)))
        assert abs(hits - expected) < 4 * sigma


class TestRunVariantA:
    def test_repetition_returns_7_any_seed(self, repetition7):
        for seed in (0, 1, 2):
            cfg = GaConfig.variant_a(population_size=10, max_generations=2, rng_seed=seed)
            est = run_variant_a(repetition7, cfg)
            assert est.d == 7
            assert est.witness == BitWord.ones(7)

    def test_bch_15_11(self):
        code = build_bch(4, 1)
        cfg = GaConfig.variant_a(population_size=300, max_generations=30, rng_seed=0)
        est = run_variant_a(code, cfg)
        assert est.d == 3
        assert est.witness.weight == 3

    def test_rejects_wrong_variant(self, repetition7):
        with pytest.raises(ValueError):
            run_variant_a(repetition7, GaConfig.variant_b())

    def test_determinism(self, c20):
        cfg = GaConfig.variant_a(population_size=60, max_generations=10, rng_seed=5)
        a = run_variant_a(c20, cfg)
        b = run_variant_a(c20, cfg)
        assert (a.d, a.witness) == (b.d, b.witness)
        assert a.events == b.events


class TestRunVariantB:
    def test_bch_31_26(self):
        code = build_bch(5, 1)
        cfg = GaConfig.variant_b(population_size=300, max_generations=30, rng_seed=0)
        est = run_variant_b(code, cfg)
        assert est.d == 3

    def test_qr47_published_value(self):
        from mindist.codes import build_qr

        code = build_qr(47)
        cfg = GaConfig.variant_b(population_size=1000, max_generations=75, rng_seed=0)
        assert run_variant_b(code, cfg).d == 11

    def test_padded_identity_reaches_1_with_greedy(self, padded_identity8):
        cfg = GaConfig.variant_b(
            population_size=50, max_generations=2, mutation_kind="greedy", rng_seed=0
        )
        est = run_variant_b(padded_identity8, cfg)
        assert est.d == 1

    def test_elitism_monotone_best(self, c20):
        cfg = GaConfig.variant_b(population_size=80, max_generations=25, rng_seed=2)
        est = run_variant_b(c20, cfg)
        hist = [e["best_fitness"] for e in est.events]
        assert all(a >= b for a, b in zip(hist, hist[1:]))

    def test_determinism(self, golay24):
        cfg = GaConfig.variant_b(population_size=60, max_generations=10, rng_seed=9)
        a = run_variant_b(golay24, cfg)
        b = run_variant_b(golay24, cfg)
        assert (a.d, a.witness) == (b.d, b.witness)

    def test_no_elitism_ablation_runs(self, c20):
        cfg = GaConfig.variant_b(
            population_size=40, max_generations=8, elitism_enabled=False, rng_seed=0
        )
        est = run_variant_b(c20, cfg)
        assert est.witness.weight == est.d


class TestEstimateContract:
    @pytest.mark.parametrize("runner, maker", [
        (run_variant_a, GaConfig.variant_a),
        (run_variant_b, GaConfig.variant_b),
    ])
    def test_witness_is_codeword_and_upper_bound(self, runner, maker, c20):
        d_exact = exact_min_distance(c20).d_exact
        for seed in range(3):
            est = runner(c20, maker(population_size=40, max_generations=8, rng_seed=seed))
            assert est.witness.weight == est.d
            assert d_exact <= est.d
            # re-encode check: the witness is in the row space
            from mindist.gf2 import BitMatrix

            stacked = BitMatrix(c20.n, c20.generator.rows + (est.witness.bits,))
            assert stacked.rank() == c20.k

    def test_config_snapshot_round_trips(self):
        cfg = GaConfig.variant_b(population_size=44, crossover_prob=0.5)
        back = GaConfig.from_mapping("B", cfg.to_dict())
        assert back == cfg

    def test_from_mapping_parses_strings(self):
        cfg = GaConfig.from_mapping(
            "A", {"population_size": "500", "crossover_prob": "0.9",
                  "elitism_enabled": "true", "crossover_kind": "uniform"}
        )
        assert cfg.population_size == 500
        assert cfg.crossover_prob == 0.9
        assert cfg.crossover_kind == "uniform"

    def test_validation_rejects_odd_population(self):
        with pytest.raises(ValueError):
            GaConfig.variant_a(population_size=7).validate()

    def test_validation_rejects_bad_probability(self):
        with pytest.raises(ValueError):
            GaConfig.variant_b(mutation_prob=1.5).validate()
