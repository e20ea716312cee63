"""Genetic minimum-distance search, variants A and B.

Both variants evolve k-bit information words and score an individual by
the weight of its encoding (the all-zero encoding scores n, the worst
value, so the zero codeword never wins).  They differ in selection, in
the order of the stochastic operators, and in how offspring enter the
next population:

  variant A: mutate the two parents, then cross with probability p_c,
             and keep only the lighter child; elites are the best half.
  variant B: cross with probability p_c then mutate both children and
             insert both, otherwise insert one parent chosen at random;
             elite count is a free parameter and the best individual ever
             seen is tracked across generations.

Operator defaults per variant follow the published parameter sets
(crossover 93%/80%, mutation 1%/2%, one-point+random vs two-point+
tournament-of-2, 75 generations).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from typing import Callable

from .bounds import build_report, enforce
from .codes import LinearCode
from .errors import DimensionError
from .gf2 import BitWord
from .results import DistanceEstimate

__all__ = [
    "GaConfig",
    "fitness",
    "crossover_one_point",
    "crossover_two_point",
    "crossover_uniform",
    "mutate_classic",
    "mutate_greedy",
    "select_tournament",
    "select_random",
    "select_roulette",
    "run_variant_a",
    "run_variant_b",
]

CROSSOVER_KINDS = ("one_point", "two_point", "uniform")
SELECTION_KINDS = ("tournament", "random", "roulette")
MUTATION_KINDS = ("classic", "greedy")


@dataclass
class GaConfig:
    """Hyperparameters for one GA run.

    ``elite_count`` of None means the variant default: half the population
    for variant A (fixed by the algorithm), 5% for variant B.  Setting
    ``elitism_enabled`` False zeroes the elite copy step (variant B
    ablation; variant A's best-half copy is part of its definition and is
    not toggled).
    """

    variant: str
    population_size: int = 1000
    max_generations: int = 75
    elite_count: int | None = None
    crossover_prob: float = 0.8
    mutation_prob: float = 0.02
    crossover_kind: str = "two_point"
    selection_kind: str = "tournament"
    tournament_size: int = 2
    mutation_kind: str = "classic"
    elitism_enabled: bool = True
    rng_seed: int = 0

    @classmethod
    def variant_a(cls, **overrides) -> "GaConfig":
        cfg = cls(
            variant="A",
            crossover_prob=0.93,
            mutation_prob=0.01,
            crossover_kind="one_point",
            selection_kind="random",
        )
        return replace(cfg, **overrides)

    @classmethod
    def variant_b(cls, **overrides) -> "GaConfig":
        return replace(cls(variant="B"), **overrides)

    def validate(self) -> None:
        if self.variant not in ("A", "B"):
            raise ValueError(f"variant must be A or B, got {self.variant!r}")
        if self.population_size < 2 or self.population_size % 2:
            raise ValueError(
                f"population size must be even and >= 2, got {self.population_size}"
            )
        if self.max_generations < 1:
            raise ValueError("max_generations must be >= 1")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ValueError(f"crossover_prob {self.crossover_prob} outside [0, 1]")
        if not 0.0 <= self.mutation_prob <= 1.0:
            raise ValueError(f"mutation_prob {self.mutation_prob} outside [0, 1]")
        if self.crossover_kind not in CROSSOVER_KINDS:
            raise ValueError(f"unknown crossover kind {self.crossover_kind!r}")
        if self.selection_kind not in SELECTION_KINDS:
            raise ValueError(f"unknown selection kind {self.selection_kind!r}")
        if self.mutation_kind not in MUTATION_KINDS:
            raise ValueError(f"unknown mutation kind {self.mutation_kind!r}")
        if self.tournament_size < 1:
            raise ValueError("tournament_size must be >= 1")
        if self.elite_count is not None and not 0 <= self.elite_count <= self.population_size:
            raise ValueError(
                f"elite_count {self.elite_count} outside 0..{self.population_size}"
            )

    def resolved_elite_count(self) -> int:
        if self.variant == "A":
            return self.population_size // 2
        if not self.elitism_enabled:
            return 0
        if self.elite_count is not None:
            return self.elite_count
        return max(1, self.population_size * 5 // 100)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "population_size": self.population_size,
            "max_generations": self.max_generations,
            "elite_count": self.elite_count,
            "crossover_prob": self.crossover_prob,
            "mutation_prob": self.mutation_prob,
            "crossover_kind": self.crossover_kind,
            "selection_kind": self.selection_kind,
            "tournament_size": self.tournament_size,
            "mutation_kind": self.mutation_kind,
            "elitism_enabled": self.elitism_enabled,
            "rng_seed": self.rng_seed,
        }

    @classmethod
    def from_mapping(cls, variant: str, mapping: dict) -> "GaConfig":
        base = cls.variant_a() if variant == "A" else cls.variant_b()
        fields = base.to_dict()
        for key, value in mapping.items():
            if key == "variant":
                continue
            if key not in fields:
                raise ValueError(f"unknown GaConfig field {key!r}")
            current = fields[key]
            if key == "elite_count" and value in (None, "none", ""):
                value = None
            elif isinstance(current, bool) or key == "elitism_enabled":
                value = value in (True, "true", "True", "1", 1)
            elif isinstance(current, float):
                value = float(value)
            elif key in ("elite_count",) or isinstance(current, int):
                value = int(value)
            fields[key] = value
        fields["variant"] = variant
        return cls(**fields)


# ---------------------------------------------------------------------------
# fitness


def fitness(code: LinearCode, info: BitWord) -> int:
    """Weight of the encoding; n when the encoding is the zero word."""
    if info.length != code.k:
        raise DimensionError(f"info length {info.length} != k = {code.k}")
    return _fitness_int(code.generator.rows, code.n, info.bits)


def _encode_int(rows: tuple[int, ...], info: int) -> int:
    acc = 0
    t = info
    while t:
        acc ^= rows[(t & -t).bit_length() - 1]
        t &= t - 1
    return acc


def _fitness_int(rows: tuple[int, ...], n: int, info: int) -> int:
    w = _encode_int(rows, info).bit_count()
    return w if w else n


# ---------------------------------------------------------------------------
# crossover (information words; children always satisfy ch1^ch2 == p1^p2)


def _check_parents(p1: BitWord, p2: BitWord) -> int:
    if p1.length != p2.length:
        raise DimensionError(f"parent lengths differ: {p1.length} vs {p2.length}")
    return p1.length


def crossover_one_point(p1: BitWord, p2: BitWord, rng: random.Random) -> tuple[BitWord, BitWord]:
    """Cut at a position in 1..k-1 and swap suffixes.  Degenerate for k < 2."""
    k = _check_parents(p1, p2)
    c1, c2 = _cross_one_point_int(p1.bits, p2.bits, k, rng)
    return BitWord(k, c1), BitWord(k, c2)


def _cross_one_point_int(a: int, b: int, k: int, rng: random.Random) -> tuple[int, int]:
    if k < 2:
        return a, b
    cut = rng.randint(1, k - 1)
    low = (1 << cut) - 1
    return (a & low) | (b & ~low), (b & low) | (a & ~low)


def crossover_two_point(p1: BitWord, p2: BitWord, rng: random.Random) -> tuple[BitWord, BitWord]:
    """Swap the segment between two cut positions.  Degenerate for k < 3."""
    k = _check_parents(p1, p2)
    c1, c2 = _cross_two_point_int(p1.bits, p2.bits, k, rng)
    return BitWord(k, c1), BitWord(k, c2)


def _cross_two_point_int(a: int, b: int, k: int, rng: random.Random) -> tuple[int, int]:
    if k < 3:
        return a, b
    lo, hi = sorted(rng.sample(range(1, k), 2))
    mid = ((1 << hi) - 1) ^ ((1 << lo) - 1)
    return (a & ~mid) | (b & mid), (b & ~mid) | (a & mid)


def crossover_uniform(p1: BitWord, p2: BitWord, rng: random.Random) -> tuple[BitWord, BitWord]:
    """Swap each gene independently with probability 1/2 (one shared mask)."""
    k = _check_parents(p1, p2)
    c1, c2 = _cross_uniform_int(p1.bits, p2.bits, k, rng)
    return BitWord(k, c1), BitWord(k, c2)


def _cross_uniform_int(a: int, b: int, k: int, rng: random.Random) -> tuple[int, int]:
    mask = rng.getrandbits(k) if k else 0
    return (a & ~mask) | (b & mask), (b & ~mask) | (a & mask)


_CROSS_INT = {
    "one_point": _cross_one_point_int,
    "two_point": _cross_two_point_int,
    "uniform": _cross_uniform_int,
}


# ---------------------------------------------------------------------------
# mutation


def mutate_classic(w: BitWord, p_m: float, rng: random.Random) -> BitWord:
    """Flip each bit independently with probability p_m."""
    return BitWord(w.length, _mutate_classic_int(w.bits, w.length, p_m, rng))


def _mutate_classic_int(bits: int, k: int, p_m: float, rng: random.Random) -> int:
    if p_m <= 0.0:
        return bits
    for i in range(k):
        if rng.random() < p_m:
            bits ^= 1 << i
    return bits


def mutate_greedy(code: LinearCode, w: BitWord) -> BitWord:
    """Flip the first gene whose flip strictly improves fitness, if any."""
    if w.length != code.k:
        raise DimensionError(f"word length {w.length} != k = {code.k}")
    return BitWord(w.length, _mutate_greedy_int(code.generator.rows, code.n, w.bits, code.k))


def _mutate_greedy_int(rows: tuple[int, ...], n: int, bits: int, k: int) -> int:
    current = _fitness_int(rows, n, bits)
    for i in range(k):
        flipped = bits ^ (1 << i)
        if _fitness_int(rows, n, flipped) < current:
            return flipped
    return bits


# ---------------------------------------------------------------------------
# selection (populations are parallel lists of genes and cached fitness)


def select_tournament(
    fitnesses: list[int], size: int, rng: random.Random
) -> int:
    """Index of the fittest of ``size`` uniform picks; ties keep the first."""
    best = rng.randrange(len(fitnesses))
    for _ in range(size - 1):
        j = rng.randrange(len(fitnesses))
        if fitnesses[j] < fitnesses[best]:
            best = j
    return best


def select_random(fitnesses: list[int], rng: random.Random) -> int:
    return rng.randrange(len(fitnesses))


def select_roulette(fitnesses: list[int], n: int, rng: random.Random) -> int:
    """Pick index i with probability proportional to (n + 1 - fitness_i)."""
    weights = [n + 1 - f for f in fitnesses]
    total = sum(weights)
    shot = rng.random() * total
    acc = 0
    for i, w in enumerate(weights):
        acc += w
        if shot < acc:
            return i
    return len(fitnesses) - 1


def _make_selector(cfg: GaConfig, n: int) -> Callable[[list[int], random.Random], int]:
    if cfg.selection_kind == "tournament":
        size = cfg.tournament_size
        return lambda fits, rng: select_tournament(fits, size, rng)
    if cfg.selection_kind == "random":
        return lambda fits, rng: select_random(fits, rng)
    return lambda fits, rng: select_roulette(fits, n, rng)


# ---------------------------------------------------------------------------
# population plumbing


def _random_weight_word(k: int, rng: random.Random) -> int:
    """A k-bit word with weight drawn uniformly from 1..k, ones placed uniformly."""
    w = rng.randint(1, k)
    bits = 0
    for pos in rng.sample(range(k), w):
        bits |= 1 << pos
    return bits


def _initial_population(k: int, size: int, rng: random.Random) -> list[int]:
    return [_random_weight_word(k, rng) for _ in range(size)]


def _sort_by_fitness(pop: list[int], fits: list[int]) -> tuple[list[int], list[int]]:
    # stable: equal fitness keeps original index order, so runs are reproducible
    order = sorted(range(len(pop)), key=fits.__getitem__)
    return [pop[i] for i in order], [fits[i] for i in order]


def _mutator(cfg: GaConfig, rows: tuple[int, ...], n: int, k: int):
    if cfg.mutation_kind == "classic":
        p_m = cfg.mutation_prob
        return lambda bits, rng: _mutate_classic_int(bits, k, p_m, rng)
    return lambda bits, rng: _mutate_greedy_int(rows, n, bits, k)


def _best_with_witness(
    code: LinearCode, pop: list[int], fits: list[int]
) -> tuple[int, BitWord]:
    """First individual (in sorted order) with nonzero genes.

    G has full rank, so nonzero genes encode to a nonzero codeword; the
    guard covers the degenerate population of all-zero words, whose
    fitness n cannot certify a distance.
    """
    rows = code.generator.rows
    spop, sfits = _sort_by_fitness(pop, fits)
    for bits, f in zip(spop, sfits):
        if bits:
            return f, BitWord(code.n, _encode_int(rows, bits))
    # every individual is the zero word; fall back to the first generator row
    cw = rows[0]
    return cw.bit_count(), BitWord(code.n, cw)


def _finish(
    code: LinearCode,
    cfg: GaConfig,
    method: str,
    d: int,
    witness: BitWord,
    events: list[dict],
    started: float,
) -> DistanceEstimate:
    assert witness.weight == d and witness.bits != 0
    report = enforce(build_report(code.family, code.n, code.k, d), method)
    return DistanceEstimate(
        family=code.family,
        n=code.n,
        k=code.k,
        method=method,
        d=d,
        witness=witness,
        config=cfg.to_dict(),
        rng_seed=cfg.rng_seed,
        wall_time_seconds=time.perf_counter() - started,
        bound_report=report,
        code_params=dict(code.metadata),
        events=tuple(events),
    )


# ---------------------------------------------------------------------------
# variant A


def run_variant_a(code: LinearCode, cfg: GaConfig) -> DistanceEstimate:
    """Best-half elitism, mutate-then-cross, keep the lighter child.

    Each generation copies the best half, then fills the other half one
    child per pairing: two parents picked by the configured selection
    (uniformly at random over the whole sorted population by default),
    bitwise mutation, crossover with probability p_c, and the lighter of
    the two children survives.  Returns the best of the final population.
    """
    cfg.validate()
    if cfg.variant != "A":
        raise ValueError(f"run_variant_a got variant {cfg.variant!r}")
    started = time.perf_counter()
    rng = random.Random(cfg.rng_seed)
    rows, n, k = code.generator.rows, code.n, code.k
    size = cfg.population_size
    cross = _CROSS_INT[cfg.crossover_kind]
    mutate = _mutator(cfg, rows, n, k)
    select = _make_selector(cfg, n)

    pop = _initial_population(k, size, rng)
    fits = [_fitness_int(rows, n, b) for b in pop]
    events: list[dict] = []
    for gen in range(1, cfg.max_generations):
        pop, fits = _sort_by_fitness(pop, fits)
        events.append({"generation": gen, "best_fitness": fits[0]})
        elite = size // 2
        new_pop = pop[:elite]
        new_fits = fits[:elite]
        while len(new_pop) < size:
            pa = pop[select(fits, rng)]
            pb = pop[select(fits, rng)]
            pa = mutate(pa, rng)
            pb = mutate(pb, rng)
            if rng.random() < cfg.crossover_prob:
                ch1, ch2 = cross(pa, pb, k, rng)
            else:
                ch1, ch2 = pa, pb
            f1 = _fitness_int(rows, n, ch1)
            f2 = _fitness_int(rows, n, ch2)
            if f1 < f2:
                new_pop.append(ch1)
                new_fits.append(f1)
            else:
                new_pop.append(ch2)
                new_fits.append(f2)
        pop, fits = new_pop, new_fits
    d, witness = _best_with_witness(code, pop, fits)
    events.append({"generation": cfg.max_generations, "best_fitness": d})
    return _finish(code, cfg, "ga_a", d, witness, events, started)


# ---------------------------------------------------------------------------
# variant B


def run_variant_b(code: LinearCode, cfg: GaConfig) -> DistanceEstimate:
    """Tournament selection, cross-then-mutate, global best tracking.

    Each generation copies the configured elite count, then fills the rest:
    with probability p_c the selected parents are crossed and both mutated
    children inserted, otherwise a single parent (either, with equal
    probability) passes through.  The returned estimate is the best
    individual observed in any generation.
    """
    cfg.validate()
    if cfg.variant != "B":
        raise ValueError(f"run_variant_b got variant {cfg.variant!r}")
    started = time.perf_counter()
    rng = random.Random(cfg.rng_seed)
    rows, n, k = code.generator.rows, code.n, code.k
    size = cfg.population_size
    elite = cfg.resolved_elite_count()
    cross = _CROSS_INT[cfg.crossover_kind]
    mutate = _mutator(cfg, rows, n, k)
    select = _make_selector(cfg, n)

    pop = _initial_population(k, size, rng)
    best_f = n + 1
    best_bits = 0
    events: list[dict] = []
    for gen in range(1, cfg.max_generations + 1):
        fits = [_fitness_int(rows, n, b) for b in pop]
        for b, f in zip(pop, fits):
            if f < best_f and b:
                best_f, best_bits = f, b
        events.append({"generation": gen, "best_fitness": best_f})
        if gen == cfg.max_generations:
            break
        pop, fits = _sort_by_fitness(pop, fits)
        new_pop = pop[:elite]
        while len(new_pop) < size:
            i1 = select(fits, rng)
            i2 = select(fits, rng)
            if rng.random() < cfg.crossover_prob:
                ch1, ch2 = cross(pop[i1], pop[i2], k, rng)
                new_pop.append(mutate(ch1, rng))
                if len(new_pop) < size:
                    new_pop.append(mutate(ch2, rng))
            else:
                new_pop.append(pop[i1] if rng.random() < 0.5 else pop[i2])
        pop = new_pop
    if best_bits:
        witness = BitWord(code.n, _encode_int(rows, best_bits))
        d = best_f
    else:
        d, witness = _best_with_witness(code, pop, [_fitness_int(rows, n, b) for b in pop])
    return _finish(code, cfg, "ga_b", d, witness, events, started)
