"""Randomized ranking experiments comparing length functions.

One sample draws NG subgroup generators (each WL uniform signed Artin
atoms on NS strands), multiplies SL of them into a sentence X (cycling
through the generators when SL exceeds NG), and asks: if the 2·NG signed
generators are sorted by the metric length of ``a^-1 X``, how high does a
correct first generator rank? Ties are reordered uniformly at random.
Histograms of the best attained position, accumulated over many samples,
measure how useful the metric is for peeling equations.

Reproducibility: every sample derives its own generators from
SHA-256(seed, "sample", index) feeding a Mersenne Twister, and its tie
shuffles from SHA-256(seed, "rank", index), so results are bit-identical
for a given (config, seed) under any evaluation order or parallel
schedule, and both metrics of a comparison see identical samples.
"""

from __future__ import annotations

import dataclasses
import hashlib
import random
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from . import kernels
from .artin import artin_structure
from .core import BraidWord
from .lengths import LengthMetric, to_metric_structure


def child_rng(seed: int, *path: object) -> random.Random:
    """Independent deterministic stream for a derivation path."""
    material = ":".join([str(seed), *map(str, path)]).encode()
    value = int.from_bytes(hashlib.sha256(material).digest()[:8], "big")
    return random.Random(value)


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    ns: int
    wl: int
    ng: int
    sl: int
    samples: int
    metric: LengthMetric
    seed: int

    def __post_init__(self):
        if min(self.ns - 1, self.wl, self.ng, self.sl, self.samples) < 1:
            raise ValueError("need ns >= 2 and wl, ng, sl, samples >= 1")

    @classmethod
    def from_json(cls, doc: dict) -> "ExperimentConfig":
        return cls(
            ns=doc["ns"],
            wl=doc["wl"],
            ng=doc["ng"],
            sl=doc["sl"],
            samples=doc["samples"],
            metric=LengthMetric.from_name(doc["metric"]),
            seed=doc["seed"],
        )

    def to_json(self) -> dict:
        doc = dataclasses.asdict(self)
        doc["metric"] = self.metric.value
        return doc


@dataclasses.dataclass(frozen=True)
class ExperimentSample:
    generators: tuple[BraidWord, ...]
    sentence: BraidWord
    cor: frozenset[int] | None = None
    best_position: int | None = None


@dataclasses.dataclass(frozen=True)
class ExperimentResult:
    """Histogram of best positions (index i holds position i+1)."""

    histogram: tuple[int, ...]
    samples: int

    def __post_init__(self):
        assert sum(self.histogram) == self.samples

    @property
    def cumulative(self) -> tuple[float, ...]:
        total = 0
        out = []
        for count in self.histogram:
            total += count
            out.append(total / self.samples)
        return tuple(out)


def sentence_indices(sl: int, ng: int) -> tuple[int, ...]:
    """1-based generator index of each sentence factor: cycle through NG."""
    return tuple((j % ng) + 1 for j in range(sl))


def gen_sample(cfg: ExperimentConfig, index: int) -> ExperimentSample:
    """Draw the generators and the sentence for one sample."""
    rng = child_rng(cfg.seed, "sample", index)
    structure = artin_structure(cfg.ns)
    atoms = cfg.ns - 1
    generators = tuple(
        structure.word(
            (rng.randrange(atoms), 1 if rng.randrange(2) == 0 else -1)
            for _ in range(cfg.wl)
        )
        for _ in range(cfg.ng)
    )
    letters: list[tuple[int, int]] = []
    for i in sentence_indices(cfg.sl, cfg.ng):
        letters.extend(generators[i - 1].letters)
    return ExperimentSample(generators, structure.word(letters))


def compute_cor(
    sample: ExperimentSample, sentence_length: int | None = None
) -> frozenset[int]:
    """Generators that can legally stand first in the sentence.

    Generator i qualifies when X equals ``a_i`` times the sentence with
    the first occurrence of ``a_i`` removed (for generators that do not
    occur, when ``a_i`` is trivial). Index 1 always qualifies. The factor
    count is derived from the letter counts when not given, which needs
    equal-length generators (the sampling model guarantees that).
    """
    structure = sample.sentence.structure
    code, n = structure.kind_code, structure.strand_count
    ng = len(sample.generators)
    if sentence_length is None:
        sentence_length = _sentence_length(sample)
    indices = sentence_indices(sentence_length, ng)
    gen_nfs = [g.raw_nf() for g in sample.generators]
    factor_nfs = [gen_nfs[i - 1] for i in indices]
    sl = len(indices)
    prefix = [(0, ())]
    for nf in factor_nfs:
        prefix.append(kernels.multiply_nf(code, n, *prefix[-1], *nf))
    suffix = [(0, ())]
    for nf in reversed(factor_nfs):
        suffix.append(kernels.multiply_nf(code, n, *nf, *suffix[-1]))
    suffix.reverse()
    target = prefix[-1]
    out = set()
    for i in range(1, ng + 1):
        if i <= sl:
            # Sentence factors cycle, so generator i first occurs at slot i.
            rest = kernels.multiply_nf(code, n, *prefix[i - 1], *suffix[i])
            candidate = kernels.multiply_nf(code, n, *gen_nfs[i - 1], *rest)
            if candidate == target:
                out.add(i)
        elif gen_nfs[i - 1] == (0, ()):
            out.add(i)
    return frozenset(out)


def _sentence_length(sample: ExperimentSample) -> int:
    lengths = {len(g.letters) for g in sample.generators}
    if len(lengths) != 1 or 0 in lengths:
        raise ValueError(
            "cannot infer the factor count from unequal generator lengths; "
            "pass sentence_length explicitly"
        )
    return len(sample.sentence.letters) // lengths.pop()


def signed_generator(g: int) -> tuple[int, int]:
    """Enumeration order of the 2·NG signed generators."""
    return g // 2 + 1, 1 if g % 2 == 0 else -1


def ranked_positions(scores: Sequence[int], rng: random.Random) -> tuple[int, ...]:
    """1-based rank of each entry, equal-score runs shuffled uniformly."""
    order = sorted(range(len(scores)), key=lambda g: scores[g])
    start = 0
    while start < len(order):
        stop = start
        while stop < len(order) and scores[order[stop]] == scores[order[start]]:
            stop += 1
        if stop - start > 1:
            block = order[start:stop]
            rng.shuffle(block)
            order[start:stop] = block
        start = stop
    positions = [0] * len(scores)
    for rank, g in enumerate(order, start=1):
        positions[g] = rank
    return tuple(positions)


def rank_generators(
    sample: ExperimentSample, metric: LengthMetric, rng: random.Random
) -> tuple[int, ...]:
    """Positions of all signed generators under the metric scores."""
    sentence = to_metric_structure(sample.sentence, metric)
    generators = [to_metric_structure(g, metric) for g in sample.generators]
    structure = sentence.structure
    code, n = structure.kind_code, structure.strand_count
    target = sentence.raw_nf()
    scores = []
    for g in range(2 * len(generators)):
        j, sign = signed_generator(g)
        nf = generators[j - 1].raw_nf()
        peel = kernels.invert_nf(code, n, *nf) if sign > 0 else nf
        peeled = kernels.multiply_nf(code, n, *peel, *target)
        greedy, rational = kernels.nf_lengths(code, n, *peeled)
        scores.append(rational if metric.rational else greedy)
    return ranked_positions(scores, rng)


def best_cor_position(positions: Sequence[int], cor: Iterable[int]) -> int:
    """Best rank attained by the positive copy of a correct generator."""
    return min(positions[2 * (i - 1)] for i in cor)


def _sample_positions(cfg: ExperimentConfig, index: int, metrics: tuple[LengthMetric, ...]) -> tuple[int, ...]:
    sample = gen_sample(cfg, index)
    cor = compute_cor(sample)
    out = []
    for metric in metrics:
        rng = child_rng(cfg.seed, "rank", index)
        positions = rank_generators(sample, metric, rng)
        out.append(best_cor_position(positions, cor))
    return tuple(out)


def _run_tasks(
    task: Callable[[int], tuple[int, ...]],
    count: int,
    workers: int,
    use_threads: bool,
) -> list[tuple[int, ...]]:
    if workers <= 1:
        return [task(i) for i in range(count)]
    pool_cls: type[Executor] = ThreadPoolExecutor if use_threads else ProcessPoolExecutor
    with pool_cls(max_workers=workers) as pool:
        return list(pool.map(task, range(count), chunksize=max(count // (4 * workers), 1)))


@dataclasses.dataclass
class _PairTask:
    """Top-level callable so process pools can pickle it."""

    cfg: ExperimentConfig
    metrics: tuple[LengthMetric, ...]

    def __call__(self, index: int) -> tuple[int, ...]:
        return _sample_positions(self.cfg, index, self.metrics)


def _histogram(best_positions: Iterable[int], ng: int, samples: int) -> ExperimentResult:
    counts = [0] * (2 * ng)
    for p in best_positions:
        counts[p - 1] += 1
    return ExperimentResult(tuple(counts), samples)


def run_experiment(
    cfg: ExperimentConfig, workers: int = 1, use_threads: bool = False
) -> ExperimentResult:
    """Accumulate the best-position histogram over all samples."""
    rows = _run_tasks(
        _PairTask(cfg, (cfg.metric,)), cfg.samples, workers, use_threads
    )
    return _histogram((row[0] for row in rows), cfg.ng, cfg.samples)


@dataclasses.dataclass(frozen=True)
class MetricComparison:
    """Paired results on identical samples; diffs are second minus first."""

    config_a: ExperimentConfig
    config_b: ExperimentConfig
    result_a: ExperimentResult
    result_b: ExperimentResult

    @property
    def diffs(self) -> tuple[float, ...]:
        return tuple(
            b - a for a, b in zip(self.result_a.cumulative, self.result_b.cumulative)
        )

    def fraction_nonneg(self, window: int | None = None) -> float:
        diffs = self.diffs[: window or len(self.diffs)]
        return sum(1 for d in diffs if d >= 0) / len(diffs)

    def area(self, window: int | None = None) -> float:
        return sum(self.diffs[: window or len(self.diffs)])


def compare_metrics(
    cfg_a: ExperimentConfig,
    cfg_b: ExperimentConfig,
    workers: int = 1,
    use_threads: bool = False,
) -> MetricComparison:
    """Run both metrics on identical samples (identical seeds required)."""
    if dataclasses.replace(cfg_a, metric=cfg_b.metric) != cfg_b:
        raise ValueError(
            "comparison configs must agree on everything except the metric"
        )
    rows = _run_tasks(
        _PairTask(cfg_a, (cfg_a.metric, cfg_b.metric)),
        cfg_a.samples,
        workers,
        use_threads,
    )
    result_a = _histogram((row[0] for row in rows), cfg_a.ng, cfg_a.samples)
    result_b = _histogram((row[1] for row in rows), cfg_b.ng, cfg_b.samples)
    return MetricComparison(cfg_a, cfg_b, result_a, result_b)


# ---------------------------------------------------------------------------
# Output files


def write_csv(result: ExperimentResult, path: str) -> None:
    """One row per position: position,count,probability,cumulative."""
    import csv

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["position", "count", "probability", "cumulative"])
        running = 0
        for position, count in enumerate(result.histogram, start=1):
            running += count
            writer.writerow(
                [
                    position,
                    count,
                    count / result.samples,
                    running / result.samples,
                ]
            )


def write_svg(
    curves: Sequence[tuple[str, ExperimentResult]], path: str, window: int = 35
) -> None:
    """Polyline plot of the accumulated-probability curves."""
    width, height, margin = 640, 400, 45
    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"]
    span = max(min(window, len(result.cumulative)) for _, result in curves)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - 10}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{margin}" y2="10" '
        f'stroke="black"/>',
        f'<text x="{width // 2}" y="{height - 8}" font-size="12">best position'
        f' (first {span})</text>',
        f'<text x="8" y="20" font-size="12">accumulated probability</text>',
    ]
    for idx, (label, result) in enumerate(curves):
        color = colors[idx % len(colors)]
        points = []
        values = result.cumulative[:span]
        for i, value in enumerate(values):
            x = margin + (width - margin - 10) * i / max(span - 1, 1)
            y = (height - margin) - (height - margin - 10) * value
            points.append(f"{x:.1f},{y:.1f}")
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
            f'points="{" ".join(points)}"/>'
        )
        parts.append(
            f'<text x="{width - 170}" y="{20 + 16 * idx}" font-size="12" '
            f'fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts))
