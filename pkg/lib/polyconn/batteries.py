"""Seeded batteries that check every identity across random instances.

Instance ``i`` of a battery run with root seed ``s`` uses seed ``s + i`` and size
``(s + i) mod (max_n + 1)``, so a run is fully determined by ``(name, count, s)``
and parallel runs report exactly what serial runs report.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import repeat
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict

from polyconn._types import ConnectivitySource, ReturnFormat
from polyconn.config import get_settings
from polyconn.constructors import (
    Graph,
    free_matroid,
    graph_connectivity,
    graph_rank,
    instance_seed,
    matroid_check,
    polymatroid_from_subsets,
    random_connectivity,
    random_graph,
    random_k_polymatroid,
    random_matroid,
    random_polymatroid,
    random_set_function,
    uniform_matroid,
)
from polyconn.core.checks import (
    CheckReport,
    check_bounded_by_norm,
    check_bounded_increments,
    check_equal,
    check_increasing,
    check_increasing_naive,
    check_integer_valued,
    check_k_polymatroid,
    check_submodular_fast,
    check_submodular_naive,
    connectivity_report,
    failed,
    passed,
    polymatroid_report,
)
from polyconn.core.setfunction import SetFunction, make_set_function
from polyconn.exceptions import DomainError
from polyconn.formats import parse, serialize
from polyconn.ops.identities import (
    compactness,
    for_every_minor,
    induced_rows,
    k_duality_rows,
    loopless_matroid_rows,
    minor_dual_identity_check,
)
from polyconn.ops.induced import induced_polymatroid
from polyconn.ops.transforms import (
    compactify,
    connectivity_of,
    contract,
    dual,
    k_dual,
)
from polyconn.utils import LoggerWrapper, import_pandas, metrics

if TYPE_CHECKING:
    import pandas as pd

_logger = LoggerWrapper("batteries")

CONNECTIVITY_SOURCES: tuple[ConnectivitySource, ...] = ("coverage", "graph", "matroid-lambda")

InstanceCheck = Callable[[int, int], Iterator[CheckReport]]


class Battery(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    description: str
    default_count: int
    max_n: int
    check: InstanceCheck


class InstanceOutcome(BaseModel):
    """Result of one instance: the first failing report's description, if any."""

    model_config = ConfigDict(frozen=True)

    index: int
    seed: int
    size: int
    holds: bool
    detail: str | None = None


class BatteryResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    root_seed: int
    instances: int
    failures: tuple[InstanceOutcome, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, Any]:
        return {
            "battery": self.name,
            "instances": self.instances,
            "failures": len(self.failures),
            "passed": self.passed,
        }


def _connectivity_instance(n: int, seed: int) -> SetFunction:
    return random_connectivity(n, seed, CONNECTIVITY_SOURCES[seed % len(CONNECTIVITY_SOURCES)])


def _dual_is_polymatroid(n: int, seed: int) -> Iterator[CheckReport]:
    yield polymatroid_report(dual(random_polymatroid(n, seed), enforce=False))


def _dual_properties(n: int, seed: int) -> Iterator[CheckReport]:
    r = random_polymatroid(n, seed)
    star = dual(r, enforce=False)
    yield check_equal(
        connectivity_of(star, enforce=False),
        connectivity_of(r, enforce=False),
        "dual has the same connectivity",
        "λ_r*",
        "λ_r",
    )
    yield compactness(star, "dual is compact")
    yield check_equal(
        dual(star, enforce=False),
        compactify(r, enforce=False),
        "double dual is the compactification",
        "r**",
        "r♭",
    )


def _compactification(n: int, seed: int) -> Iterator[CheckReport]:
    r = random_polymatroid(n, seed)
    flat = compactify(r, enforce=False)
    yield polymatroid_report(flat)
    yield check_equal(
        connectivity_of(flat, enforce=False),
        connectivity_of(r, enforce=False),
        "compactification has the same connectivity",
        "λ_r♭",
        "λ_r",
    )


def _contraction_keeps_compactness(n: int, seed: int) -> Iterator[CheckReport]:
    r = dual(random_polymatroid(n, seed), enforce=False)
    name = "contraction keeps compactness"
    yield for_every_minor(
        r, name, lambda removed: compactness(contract(r, removed, enforce=False), name)
    )


def _dual_of_contraction(n: int, seed: int) -> Iterator[CheckReport]:
    r = random_polymatroid(n, seed)
    yield for_every_minor(
        r,
        "dual of contraction",
        lambda removed: minor_dual_identity_check(r, removed, enforce=False),
    )


def _k_duality(n: int, seed: int) -> Iterator[CheckReport]:
    k = 1 + seed % 3
    r = random_k_polymatroid(n, k, seed)
    yield check_k_polymatroid(r, k)
    yield from (report for _, report in k_duality_rows(r, k))


def _induced(n: int, seed: int) -> Iterator[CheckReport]:
    lam = _connectivity_instance(n, seed)
    yield connectivity_report(lam)
    yield from (report for _, report in induced_rows(lam))


def _loopless_matroid(n: int, seed: int) -> Iterator[CheckReport]:
    m = random_matroid(n, seed, loopless=True)
    yield matroid_check(m)
    yield from (report for _, report in loopless_matroid_rows(m))


def _bounded_increments(n: int, seed: int) -> Iterator[CheckReport]:
    r = random_polymatroid(n, seed)
    yield check_bounded_increments(r, "increment bounded by norm", "r")
    lam = _connectivity_instance(n, seed)
    yield check_bounded_increments(lam, "connectivity increment bounded by norm", "λ")
    yield check_bounded_by_norm(lam, "connectivity bounded by norm", "λ")


def _oracles_agree(name: str, fast: CheckReport, naive: CheckReport) -> CheckReport:
    if fast.holds == naive.holds:
        return passed(name)
    disagreeing = naive if fast.holds else fast
    return disagreeing.model_copy(update={"check": f"{name}: only this oracle fails"})


def _oracle_equivalence(n: int, seed: int) -> Iterator[CheckReport]:
    f = random_set_function(n, seed)
    yield _oracles_agree(
        "submodular oracles", check_submodular_fast(f), check_submodular_naive(f)
    )
    yield _oracles_agree("increasing oracles", check_increasing(f), check_increasing_naive(f))


def _singleton_connectivity(graph: Graph, lam: SetFunction) -> CheckReport:
    """λ_G({e}) = 2 exactly when e is neither a loop nor incident with a leaf."""
    name = "edge connectivity"
    leaves = graph.leaves()
    for i, edge in enumerate(graph.edges):
        bit = 1 << i
        special = edge.is_loop or any(end in leaves for end in edge.ends)
        if not special and lam.value(bit) != 2:
            return failed(name, lam, (bit,), (bit,), (), "==", rhs_constant=Fraction(2))
        if special and lam.value(bit) > 1:
            return failed(name, lam, (bit,), (bit,), (), "<=", rhs_constant=Fraction(1))
    return passed(name)


def _graph_facts(n: int, seed: int) -> Iterator[CheckReport]:
    graph = random_graph(n, seed)
    lam = graph_connectivity(graph)
    yield connectivity_report(lam)
    yield _singleton_connectivity(graph, lam)
    rank = graph_rank(graph)
    yield check_k_polymatroid(rank, 2)
    yield check_integer_valued(rank)
    coverage = polymatroid_from_subsets(
        free_matroid(graph.vertices), graph.endpoint_family(), enforce=False
    )
    yield check_equal(coverage, rank, "endpoint coverage is the graph rank", "r_P", "r_G")


def _known_values(n: int, seed: int) -> Iterator[CheckReport]:
    u23 = uniform_matroid(2, 3, "abc")
    loop = uniform_matroid(0, 1, "a")
    coloop = free_matroid("a")
    lu13 = connectivity_of(uniform_matroid(1, 3, "abc"))
    yield check_equal(dual(u23), uniform_matroid(1, 3, "abc"), "dual of U23", "r*", "U13")
    yield check_equal(dual(loop), loop, "dual of a loop", "r*", "loop")
    yield check_equal(k_dual(loop, 1), coloop, "1-dual of a loop", "r*1", "coloop")
    yield check_equal(compactify(coloop), loop, "compactified coloop", "r♭", "loop")
    expected = make_set_function(
        "abc", {mask: (0, 2, 2, 3, 2, 3, 3, 3)[mask] for mask in range(8)}
    )
    yield check_equal(
        induced_polymatroid(lu13), expected, "induced of λ(U13)", "r_λ", "expected"
    )


def _io_round_trip(n: int, seed: int) -> Iterator[CheckReport]:
    f = random_set_function(n, seed) if seed % 2 else random_polymatroid(n, seed)
    yield check_equal(parse(serialize(f)), f, "parse inverts serialize", "parsed", "f")


BATTERIES: dict[str, Battery] = {
    battery.name: battery
    for battery in (
        Battery(
            name="dual-is-polymatroid",
            description="the dual of a polymatroid is a polymatroid",
            default_count=1000,
            max_n=10,
            check=_dual_is_polymatroid,
        ),
        Battery(
            name="dual-properties",
            description="the dual keeps connectivity, is compact, and r** = r♭",
            default_count=1000,
            max_n=10,
            check=_dual_properties,
        ),
        Battery(
            name="compactification",
            description="r♭ is a polymatroid with the connectivity of r",
            default_count=1000,
            max_n=10,
            check=_compactification,
        ),
        Battery(
            name="contraction-keeps-compactness",
            description="every contraction of a compact polymatroid is compact",
            default_count=1000,
            max_n=7,
            check=_contraction_keeps_compactness,
        ),
        Battery(
            name="dual-of-contraction",
            description="(r/A)* = ((r*)\\A)♭ for every A",
            default_count=1000,
            max_n=7,
            check=_dual_of_contraction,
        ),
        Battery(
            name="k-duality",
            description="the k-dual is an involution swapping deletion and contraction",
            default_count=500,
            max_n=7,
            check=_k_duality,
        ),
        Battery(
            name="induced-polymatroid",
            description="induced polymatroids are compact, self-dual and realise 2λ",
            default_count=1000,
            max_n=10,
            check=_induced,
        ),
        Battery(
            name="loopless-matroid",
            description="r + r*1 = λ + |X| for loopless matroids",
            default_count=200,
            max_n=10,
            check=_loopless_matroid,
        ),
        Battery(
            name="bounded-increments",
            description="increments are bounded by the norm of the difference",
            default_count=1000,
            max_n=8,
            check=_bounded_increments,
        ),
        Battery(
            name="oracle-equivalence",
            description="fast and naive axiom checks agree",
            default_count=1000,
            max_n=8,
            check=_oracle_equivalence,
        ),
        Battery(
            name="graph-facts",
            description="λ_G and r_G behave as graph connectivity and vertex rank",
            default_count=200,
            max_n=10,
            check=_graph_facts,
        ),
        Battery(
            name="known-values",
            description="exact values of duals, compactifications and induced polymatroids",
            default_count=1,
            max_n=0,
            check=_known_values,
        ),
        Battery(
            name="io-round-trip",
            description="parse(serialize(f)) = f",
            default_count=1000,
            max_n=10,
            check=_io_round_trip,
        ),
    )
}


def run_instance(name: str, index: int, root_seed: int) -> InstanceOutcome:
    """Run instance ``index`` of a battery; exceptions count as failures."""
    battery = BATTERIES[name]
    seed = instance_seed(root_seed, index)
    n = seed % (battery.max_n + 1)
    try:
        for report in battery.check(n, seed):
            if not report.holds:
                return InstanceOutcome(
                    index=index, seed=seed, size=n, holds=False, detail=report.describe()
                )
    except Exception as exc:
        return InstanceOutcome(
            index=index,
            seed=seed,
            size=n,
            holds=False,
            detail=f"{type(exc).__name__}: {exc}",
        )
    return InstanceOutcome(index=index, seed=seed, size=n, holds=True)


def run_battery(
    name: str,
    count: int | None = None,
    root_seed: int = 0,
    workers: int | None = None,
    verbose: bool = False,
) -> BatteryResult:
    """Run ``count`` instances (default: the battery's own count) of one battery.

    Raises:
        DomainError: Unknown battery name, or a negative count or seed.
    """
    if name not in BATTERIES:
        raise DomainError(f"unknown battery '{name}', expected one of {sorted(BATTERIES)}")
    battery = BATTERIES[name]
    count = battery.default_count if count is None else count
    workers = get_settings().workers if workers is None else workers
    if count < 0 or root_seed < 0:
        raise DomainError("count and seed must be nonnegative")

    indices = range(count)
    with metrics.timer("battery_seconds", battery=name) as watch:
        if workers <= 1:
            outcomes = [run_instance(name, index, root_seed) for index in indices]
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                outcomes = list(
                    executor.map(
                        run_instance,
                        repeat(name),
                        indices,
                        repeat(root_seed),
                        chunksize=max(1, count // (4 * workers)),
                    )
                )

    failures = tuple(outcome for outcome in outcomes if not outcome.holds)
    metrics.counter("battery_instances", count, battery=name)
    metrics.counter("battery_failures", len(failures), battery=name)
    for outcome in failures:
        _logger.log_event(
            "identity_failed",
            level="error",
            verbose=True,
            battery=name,
            seed=outcome.seed,
            size=outcome.size,
            detail=outcome.detail,
        )
    _logger.log_event(
        "battery_complete",
        verbose=verbose,
        battery=name,
        instances=count,
        failures=len(failures),
        seconds=round(watch.seconds, 3),
    )
    return BatteryResult(name=name, root_seed=root_seed, instances=count, failures=failures)


def run_batteries(
    names: list[str] | None = None,
    count: int | None = None,
    root_seed: int = 0,
    workers: int | None = None,
    verbose: bool = False,
    *,
    return_as: ReturnFormat = "list",
) -> list[BatteryResult] | pd.DataFrame:
    """Run several batteries (default: all of them) in registry order.

    Args:
        names: Battery names; None runs every battery.
        count: Instances per battery; None uses each battery's default.
        root_seed: Root of the per-instance seeds.
        workers: Worker processes per battery; None uses the configured default.
        verbose: If True, logs one ``battery_complete`` event per battery.
        return_as: "list" returns BatteryResult objects, "dataframe" one summary
            row per battery (requires the ``dataframe`` extra).
    """
    selected = list(BATTERIES) if names is None else names
    results = [
        run_battery(name, count, root_seed, workers, verbose=verbose) for name in selected
    ]
    if return_as == "dataframe":
        pd = import_pandas()
        return pd.DataFrame([result.summary() for result in results])
    return results
