"""Named verification sweeps over enumerated instances.

Every suite is deterministic for a fixed (config, seed): instances are
enumerated in a fixed order, sampling uses one seeded generator, and the
witness sections of two runs with the same config compare byte-for-byte.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional

from . import duality, enriched, posets, stone, tnorms
from .instances import InstanceDoc, InstanceError
from .posets import FinPoset, all_posets, kleisli_compose, upper_sets
from .reports import SuiteReport
from .tnorms import GridChain, Quantale, SampleSpec, grid_closed, lukasiewicz
from .vcat import from_poset, unit_category

SUITES = (
    "quantale-axioms",
    "monad-laws",
    "representability",
    "functoriality",
    "total-partial",
    "stone-weierstrass",
    "enriched-roundtrip",
    "lemma1",
    "twovalued",
    "tensor-maximality",
)

POSET_SIZE_CAP = 5
GRID_CAP = 12


@dataclass
class SuiteConfig:
    suite: str
    quantale: Quantale = field(default_factory=lukasiewicz)
    grid: int = 2
    max_size: int = 2
    seed: int = 0
    corpus: int = 1000
    report_format: str = "table"
    instance: Optional[InstanceDoc] = None

    def echo(self) -> dict:
        return {
            "suite": self.suite,
            "tnorm": self.quantale.name,
            "grid": self.grid,
            "max-size": self.max_size,
            "seed": self.seed,
            "corpus": self.corpus,
        }


def run_suite(config: SuiteConfig) -> SuiteReport:
    if config.suite not in SUITES:
        raise InstanceError("unknown-suite", f"unknown suite {config.suite!r}")
    if config.max_size > POSET_SIZE_CAP:
        raise InstanceError("cap-exceeded", f"max size capped at {POSET_SIZE_CAP}")
    if config.grid > GRID_CAP:
        raise InstanceError("cap-exceeded", f"grid capped at {GRID_CAP}")
    report = SuiteReport(suite=config.suite, config=config.echo())
    start = time.perf_counter()
    _RUNNERS[config.suite](config, report)
    report.elapsed_s = time.perf_counter() - start
    return report


def _poset_sweep(config: SuiteConfig):
    if config.instance is not None and config.instance.poset is not None:
        yield "instance", config.instance.poset
        return
    for size in range(1, config.max_size + 1):
        for k, P in enumerate(all_posets(size)):
            yield f"poset {size}.{k}", P


def _run_quantale_axioms(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    if grid_closed(q, config.grid):
        for n in range(1, config.grid + 1):
            report.absorb(tnorms.verify_quantale_axioms(q, GridChain(n)), f"Q_{n}")
            report.absorb(tnorms.no_zero_divisor_audit(q, GridChain(n)), f"Q_{n}")
    else:
        report.absorb(
            tnorms.verify_quantale_axioms_sampled(q, config.seed, config.corpus),
            "sampled-triples",
        )
        pair_count = max(2, int(round(config.corpus ** 0.5)))
        report.absorb(
            tnorms.no_zero_divisor_audit(
                q, SampleSpec(seed=config.seed + 1, count=pair_count)
            ),
            "sampled-pairs",
        )


def _run_monad_laws(config: SuiteConfig, report: SuiteReport):
    for label, P in _poset_sweep(config):
        report.absorb(posets.verify_monad_laws(P), label)


def _run_representability(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    _require_closed(q, config.grid)
    for label, P in _poset_sweep(config):
        report.absorb(duality.representability_audit(P, q, config.grid), label)


def _run_functoriality(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    _require_closed(q, config.grid)
    n = config.grid
    spaces: dict = {}

    def space(P: FinPoset):
        if P.leq not in spaces:
            spaces[P.leq] = duality.function_space(P, q, n)
        return spaces[P.leq]

    def check(label, X, Y, Z, phi, phi2):
        cz, cy, cx = space(Z), space(Y), space(X)
        via_composite = duality.c_of_distributor(kleisli_compose(phi2, phi), cz, cx)
        lhs = duality.c_of_distributor(phi, cy, cx)
        rhs = duality.c_of_distributor(phi2, cz, cy)
        composed = tuple(lhs[i] for i in rhs)
        report.instances += 1
        report.checks += len(composed)
        if via_composite != composed:
            report.failures.append(f"[{label}] composite map mismatch")

    # exhaustive over tiny posets
    small = [P for size in (1, 2) for P in all_posets(size)]
    for xi, X in enumerate(small):
        for yi, Y in enumerate(small):
            phis = list(posets.continuous_distributors(X, Y))
            for zi, Z in enumerate(small):
                phi2s = list(posets.continuous_distributors(Y, Z))
                for a, phi in enumerate(phis):
                    for b, phi2 in enumerate(phi2s):
                        check(f"exhaustive {xi}.{yi}.{zi}.{a}.{b}", X, Y, Z, phi, phi2)

    # seeded composable pairs over the configured size bound
    rng = random.Random(config.seed)
    pool = [P for size in range(1, config.max_size + 1) for P in all_posets(size)]
    for k in range(config.corpus):
        X, Y, Z = (pool[rng.randrange(len(pool))] for _ in range(3))
        phi = _random_distributor(rng, X, Y)
        phi2 = _random_distributor(rng, Y, Z)
        check(f"sampled {k}", X, Y, Z, phi, phi2)


def _random_distributor(rng: random.Random, X: FinPoset, Y: FinPoset):
    """Random rows repaired to be upper in Y and antitone along X."""
    ups = upper_sets(Y)
    raw = [ups[rng.randrange(len(ups))] for _ in range(X.size)]
    rows = []
    for x in range(X.size):
        acc = (1 << Y.size) - 1
        for x2 in range(X.size):
            if X.leq[x2][x]:
                acc &= raw[x2]
        rows.append(acc)
    return tuple(
        tuple(int(rows[x] >> y & 1) for y in range(Y.size)) for x in range(X.size)
    )


def _run_total_partial(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    _require_closed(q, config.grid)
    size_cap = min(config.max_size, 3)
    pool = [P for size in range(1, size_cap + 1) for P in all_posets(size)]
    for xi, X in enumerate(pool):
        for yi, Y in enumerate(pool):
            for k, phi in enumerate(posets.continuous_distributors(X, Y)):
                rep = duality.total_partial_audit(phi, X, Y, q, config.grid)
                report.absorb(rep, f"{xi}.{yi}.{k}")


def _run_stone(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    _require_closed(q, config.grid)
    doc = config.instance
    if doc is not None and doc.kind == "generators" and doc.functions is not None:
        n = doc.grid or config.grid
        space = duality.function_space(doc.poset, q, n)
        try:
            gens = [space.index[f] for f in doc.functions]
        except KeyError as exc:
            raise InstanceError(
                "bad-document", f"generator {exc.args[0]} is not in the function space"
            )
        report.absorb(stone.sw_audit(doc.poset, q, n, generators=gens), "instance")
        return
    for label, P in _poset_sweep(config):
        for n in range(1, config.grid + 1):
            report.absorb(stone.sw_audit(P, q, n), f"{label} n={n}")


def _enriched_sweep(config: SuiteConfig):
    q = config.quantale
    size_cap = min(config.max_size, 3)
    for size in range(1, size_cap + 1):
        for n in range(1, config.grid + 1):
            for k, X in enumerate(
                enriched.enumerate_enriched_categories(size, q, n)
            ):
                yield f"size {size} n={n} #{k}", X, n


def _run_enriched_roundtrip(config: SuiteConfig, report: SuiteReport):
    _require_closed(config.quantale, config.grid)
    for label, X, n in _enriched_sweep(config):
        report.absorb(enriched.adjunction_audit(X, n), label)
        report.absorb(enriched.pointsep_extension_audit(X, n), label)


def _run_lemma1(config: SuiteConfig, report: SuiteReport):
    _require_closed(config.quantale, config.grid)
    for label, X, n in _enriched_sweep(config):
        report.absorb(enriched.lemma1_audit(X, n), label)


def _run_twovalued(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    _require_closed(q, config.grid)
    g = unit_category(q)
    for label, P in _poset_sweep(config):
        X = from_poset(P, q)
        for k, row in enumerate(enriched.grid_distributors_into(X, config.grid)):
            rep = enriched.twovalued_audit((row,), g, X, config.grid)
            report.absorb(rep, f"{label} row {k}")


def _run_tensor_maximality(config: SuiteConfig, report: SuiteReport):
    q = config.quantale
    n = min(config.grid, 2)
    _require_closed(q, n)
    size_cap = min(config.max_size, 2)
    for size in range(1, size_cap + 1):
        for pk, P in enumerate(all_posets(size)):
            X = from_poset(P, q)
            space = enriched.enumerate_cx(X, n)
            for fi, psi0 in enumerate(space.functions):
                rep = enriched.tensor_maximality_audit(X, psi0, n)
                report.absorb(rep, f"poset {size}.{pk} psi0={fi}")


def _require_closed(q: Quantale, n: int):
    if not grid_closed(q, n):
        raise InstanceError(
            "grid-not-closed",
            f"Q_{n} is not closed under the {q.name} tensor: exhaustive suites need closure",
        )


_RUNNERS = {
    "quantale-axioms": _run_quantale_axioms,
    "monad-laws": _run_monad_laws,
    "representability": _run_representability,
    "functoriality": _run_functoriality,
    "total-partial": _run_total_partial,
    "stone-weierstrass": _run_stone,
    "enriched-roundtrip": _run_enriched_roundtrip,
    "lemma1": _run_lemma1,
    "twovalued": _run_twovalued,
    "tensor-maximality": _run_tensor_maximality,
}
