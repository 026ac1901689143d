"""Executable identities between the transforms.

Each identity is a theorem about polymatroids or connectivity functions; a failing
identity means the implementation is wrong, which is why they are exposed to users
(``polyconn lemmas``) as well as to the test-suite.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from typing import Literal

from pydantic import BaseModel, ConfigDict

from polyconn._types import Mask, SubsetLike
from polyconn.config import get_settings
from polyconn.core.checks import (
    CheckReport,
    Witness,
    check_bounded_by_norm,
    check_bounded_increments,
    check_equal,
    check_half_integral,
    connectivity_report,
    failed,
    passed,
    polymatroid_report,
)
from polyconn.core.classify import classify
from polyconn.core.ground import popcounts
from polyconn.core.setfunction import SetFunction
from polyconn.ops.induced import canonical_self_dual, induced_polymatroid
from polyconn.ops.transforms import (
    compact_elements,
    compactify,
    connectivity_of,
    contract,
    delete,
    dual,
    k_dual,
    pointwise_sum,
    require,
    scale,
)
from polyconn.utils import LoggerWrapper

_logger = LoggerWrapper("identities")

Family = Literal["polymatroid", "connectivity function"]
Row = tuple[str, CheckReport]


class IdentityResult(BaseModel):
    """One row of the identity table."""

    model_config = ConfigDict(frozen=True)

    identity: str
    family: Family
    report: CheckReport

    @property
    def holds(self) -> bool:
        return self.report.holds


def minor_dual_identity_check(
    r: SetFunction, subset: SubsetLike, *, enforce: bool = True
) -> CheckReport:
    """Check (r/A)* = ((r*)\\A)♭ for one A ⊆ E."""
    removed = r.ground.mask_of(subset)
    require("minor_dual_identity_check", r, polymatroid_report, enforce)
    lhs = dual(contract(r, removed, enforce=False), enforce=False)
    rhs = compactify(delete(dual(r, enforce=False), removed, enforce=False), enforce=False)
    return check_equal(lhs, rhs, "dual of contraction", "(r/A)*", "(r*\\A)♭")


def _same(name: str, f: SetFunction, g: SetFunction, f_name: str, g_name: str) -> Row:
    return name, check_equal(f, g, name, f_name, g_name)


def minor_subsets(r: SetFunction) -> Iterator[Mask]:
    """Every A ⊆ E when E is small, otherwise the sets within one element of ∅ or E."""
    full = r.ground.full_mask
    if r.size <= get_settings().minor_exhaustive_limit:
        yield from range(r.ground.table_size)
        return
    near = {0, full} | {1 << i for i in range(r.size)} | {full ^ 1 << i for i in range(r.size)}
    yield from sorted(near)


def for_every_minor(
    r: SetFunction, name: str, check: Callable[[Mask], CheckReport]
) -> CheckReport:
    for removed in minor_subsets(r):
        report = check(removed)
        if not report.holds:
            return report.model_copy(
                update={"check": f"{name} (A={r.ground.render(removed)})"}
            )
    return passed(name)


def compactness(f: SetFunction, name: str) -> CheckReport:
    """Holds iff f(E − e) = f(E) for every element e."""
    full = f.ground.full_mask
    for i in range(f.size):
        if f.numerators[full ^ 1 << i] != f.numerators[full]:
            return failed(name, f, (1 << i,), (full ^ 1 << i,), (full,), "==")
    return passed(name)


def _agreeing_compact_elements(r: SetFunction, name: str) -> CheckReport:
    spanning = compact_elements(r, enforce=False)
    by_connectivity = compact_elements(r, via="connectivity", enforce=False)
    if spanning == by_connectivity:
        return passed(name)
    label = sorted(spanning ^ by_connectivity)[0]
    e = 1 << r.ground.index(label)
    if label not in spanning:
        return failed(name, r, (e,), (r.ground.full_mask ^ e,), (r.ground.full_mask,), "==")
    lam = connectivity_of(r, enforce=False)
    witness = Witness(
        subsets=(e,),
        rendered=(r.ground.render(e),),
        lhs_expr=f"r({r.ground.render(e)})",
        rhs_expr=f"λ({r.ground.render(e)})",
        lhs=r.value(e),
        rhs=lam.value(e),
        relation="==",
    )
    return CheckReport(check=name, holds=False, witness=witness)


def k_duality_rows(r: SetFunction, k: int) -> list[Row]:
    involution = f"{k}-dual is an involution"
    swap = f"{k}-dual swaps deletion and contraction"

    def swaps(removed: Mask) -> CheckReport:
        lhs = k_dual(delete(r, removed, enforce=False), k, enforce=False)
        rhs = contract(k_dual(r, k, enforce=False), removed, enforce=False)
        return check_equal(lhs, rhs, swap, "(r\\A)*k", "r*k/A")

    twice = k_dual(k_dual(r, k, enforce=False), k, enforce=False)
    return [
        (involution, check_equal(twice, r, involution, "r*k*k", "r")),
        (swap, for_every_minor(r, swap, swaps)),
    ]


def loopless_matroid_rows(r: SetFunction) -> list[Row]:
    lam = connectivity_of(r, enforce=False)
    matroid_dual = k_dual(r, 1, enforce=False)
    total = pointwise_sum(r, matroid_dual)
    shifted = SetFunction(
        r.ground,
        lam.numerators.astype(object) + popcounts(r.size).astype(object) * lam.denominator,
        lam.denominator,
    )
    size_rule = "rank plus dual rank is connectivity plus size"
    doubling = "rank plus dual rank doubles connectivity"
    agree = "matroid duals agree without loops"
    return [
        (size_rule, check_equal(total, shifted, size_rule, "r+r*1", "λ+|X|")),
        (
            doubling,
            check_equal(
                connectivity_of(total, enforce=False), scale(lam, 2), doubling, "λ_P", "2λ"
            ),
        ),
        (agree, check_equal(dual(r, enforce=False), matroid_dual, agree, "r*", "r*1")),
    ]


def polymatroid_identities(r: SetFunction) -> list[Row]:
    """Every identity that holds for the polymatroid r, evaluated on r."""
    lam = connectivity_of(r, enforce=False)
    star = dual(r, enforce=False)
    flat = compactify(r, enforce=False)
    rows: list[Row] = []
    if r.size <= get_settings().pair_check_limit:
        name = "increment bounded by norm"
        rows.append((name, check_bounded_increments(r, name, "r")))

    star_connectivity = connectivity_of(star, enforce=False)
    flat_connectivity = connectivity_of(flat, enforce=False)
    double_dual = dual(star, enforce=False)
    rows += [
        ("connectivity is a connectivity function", connectivity_report(lam)),
        ("dual is a polymatroid", polymatroid_report(star)),
        _same("dual has the same connectivity", star_connectivity, lam, "λ_r*", "λ_r"),
        ("dual is compact", compactness(star, "dual is compact")),
        _same("double dual is the compactification", double_dual, flat, "r**", "r♭"),
        ("compactification is a polymatroid", polymatroid_report(flat)),
        _same(
            "compactification has the same connectivity", flat_connectivity, lam, "λ_r♭", "λ_r"
        ),
        ("compactification is compact", compactness(flat, "compactification is compact")),
    ]
    name = "compact elements by spanning and by connectivity agree"
    rows.append((name, _agreeing_compact_elements(r, name)))

    name = "contraction keeps compactness of the dual"
    rows.append(
        (
            name,
            for_every_minor(
                star,
                name,
                lambda removed: compactness(contract(star, removed, enforce=False), name),
            ),
        )
    )
    name = "dual of contraction is compactified deletion of dual"
    rows.append(
        (
            name,
            for_every_minor(
                r, name, lambda removed: minor_dual_identity_check(r, removed, enforce=False)
            ),
        )
    )

    facts = classify(r)
    if facts.is_compact:
        name = "contraction keeps compactness"
        rows.append(
            (
                name,
                for_every_minor(
                    r, name, lambda removed: compactness(contract(r, removed, enforce=False), name)
                ),
            )
        )
    if facts.is_integer_valued and facts.min_k is not None:
        rows += k_duality_rows(r, max(1, math.ceil(facts.min_k)))
    loopless_matroid = facts.is_integer_valued and all(
        r.value(1 << i) == 1 for i in range(r.size)
    )
    if loopless_matroid:
        rows += loopless_matroid_rows(r)
    return rows


def induced_rows(lam: SetFunction) -> list[Row]:
    """Identities of the induced polymatroid of λ and of its half."""
    induced = induced_polymatroid(lam, enforce=False)
    half = canonical_self_dual(lam, enforce=False)
    rows: list[Row] = [
        ("induced is a polymatroid", polymatroid_report(induced)),
        ("induced is compact", compactness(induced, "induced is compact")),
        _same("induced is self-dual", dual(induced, enforce=False), induced, "r*", "r"),
        _same(
            "induced doubles connectivity",
            connectivity_of(induced, enforce=False),
            scale(lam, 2),
            "λ_r",
            "2λ",
        ),
        _same(
            "half-induced realises connectivity",
            connectivity_of(half, enforce=False),
            lam,
            "λ_(r/2)",
            "λ",
        ),
        ("half-induced is a polymatroid", polymatroid_report(half)),
        ("half-induced is compact", compactness(half, "half-induced is compact")),
        _same("half-induced is self-dual", dual(half, enforce=False), half, "(r/2)*", "r/2"),
    ]
    if lam.denominator == 1:
        rows.append(("half-induced is half-integral", check_half_integral(half)))
    return rows


def connectivity_identities(lam: SetFunction) -> list[Row]:
    """Every identity that holds for the connectivity function λ, evaluated on λ."""
    rows: list[Row] = []
    if lam.size <= get_settings().pair_check_limit:
        name = "connectivity increment bounded by norm"
        rows.append((name, check_bounded_increments(lam, name, "λ")))
    name = "connectivity bounded by norm"
    rows.append((name, check_bounded_by_norm(lam, name, "λ")))
    return rows + induced_rows(lam)


def run_lemmas(f: SetFunction, verbose: bool = False) -> list[IdentityResult]:
    """Run every identity applicable to f; empty when f is neither kind of function."""
    results: list[IdentityResult] = []
    if polymatroid_report(f).holds:
        results.extend(
            IdentityResult(identity=name, family="polymatroid", report=report)
            for name, report in polymatroid_identities(f)
        )
    if connectivity_report(f).holds:
        results.extend(
            IdentityResult(identity=name, family="connectivity function", report=report)
            for name, report in connectivity_identities(f)
        )
    for result in results:
        if not result.holds:
            _logger.log_event(
                "identity_failed",
                level="error",
                verbose=True,
                identity=result.identity,
                detail=result.report.describe(),
            )
    _logger.log_event(
        "identities_complete",
        verbose=verbose,
        size=f.size,
        checked=len(results),
        failed=sum(not result.holds for result in results),
    )
    return results
