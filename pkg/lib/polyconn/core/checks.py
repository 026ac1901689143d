"""Axiom checks with concrete witnesses.

Every check scans subsets in ascending mask order (then ascending element order)
and reports the first violation it meets, so reports are deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from polyconn._types import Mask
from polyconn.config import get_settings
from polyconn.core.ground import all_masks
from polyconn.core.setfunction import SetFunction, norm_numerators, to_rat
from polyconn.exceptions import DomainError

Relation = Literal["==", "<=", ">", "in Z", "in Z/2"]


class Witness(BaseModel):
    """The subsets behind a violation and both sides of the inequality that fails.

    ``relation`` is the relation the axiom requires between ``lhs`` and ``rhs``;
    a witness always has ``lhs relation rhs`` false.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    subsets: tuple[int, ...]
    rendered: tuple[str, ...]
    lhs_expr: str
    rhs_expr: str
    lhs: Fraction
    rhs: Fraction
    relation: Relation

    @property
    def violated(self) -> bool:
        if self.relation == "==":
            return self.lhs != self.rhs
        if self.relation == "<=":
            return self.lhs > self.rhs
        if self.relation == ">":
            return self.lhs <= self.rhs
        if self.relation == "in Z":
            return self.lhs.denominator != 1
        return self.lhs.denominator not in (1, 2)

    def describe(self) -> str:
        if self.relation in ("in Z", "in Z/2"):
            return f"{self.lhs_expr} = {self.lhs} is not {self.relation}"
        return (
            f"{self.lhs_expr} = {self.lhs}, {self.rhs_expr} = {self.rhs}, "
            f"expected {self.lhs_expr} {self.relation} {self.rhs_expr}"
        )


class CheckReport(BaseModel):
    """Outcome of one axiom check: holds, or fails with a witness."""

    model_config = ConfigDict(frozen=True)

    check: str
    holds: bool
    witness: Witness | None = None

    @model_validator(mode="after")
    def witness_matches_outcome(self) -> Self:
        if self.holds and self.witness is not None:
            raise ValueError("a holding check carries no witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing check needs a witness")
        return self

    def describe(self) -> str:
        if self.holds:
            return f"{self.check} holds"
        assert self.witness is not None
        return f"{self.check} fails: {self.witness.describe()}"

    def __bool__(self) -> bool:
        return self.holds


def passed(check: str) -> CheckReport:
    return CheckReport(check=check, holds=True)


def failed(
    check: str,
    f: SetFunction,
    subsets: tuple[Mask, ...],
    lhs_terms: tuple[Mask, ...],
    rhs_terms: tuple[Mask, ...],
    relation: Relation,
    rhs_constant: Fraction = Fraction(0),
) -> CheckReport:
    """Build a failing report whose sides are sums of f over the given masks."""
    render = f.ground.render

    def side(terms: tuple[Mask, ...], constant: Fraction) -> tuple[str, Fraction]:
        if not terms:
            return str(constant), constant
        return " + ".join(f"f({render(m)})" for m in terms), sum(
            (f.value(m) for m in terms), Fraction(0)
        )

    lhs_expr, lhs = side(lhs_terms, Fraction(0))
    rhs_expr, rhs = side(rhs_terms, rhs_constant)
    witness = Witness(
        subsets=subsets,
        rendered=tuple(render(m) for m in subsets),
        lhs_expr=lhs_expr,
        rhs_expr=rhs_expr,
        lhs=lhs,
        rhs=rhs,
        relation=relation,
    )
    return CheckReport(check=check, holds=False, witness=witness)


def _first(hits: np.ndarray) -> int | None:
    indices = np.flatnonzero(np.asarray(hits, dtype=bool))
    return int(indices[0]) if indices.size else None


def check_normalised(f: SetFunction) -> CheckReport:
    if f.numerators[0] == 0:
        return passed("normalised")
    return failed("normalised", f, (0,), (0,), (), "==")


def check_symmetric(f: SetFunction) -> CheckReport:
    num = f.numerators
    masks = all_masks(f.size)
    complements = f.ground.full_mask ^ masks
    first = _first(num != num[complements])
    if first is None:
        return passed("symmetric")
    other = f.ground.full_mask ^ first
    return failed("symmetric", f, (first, other), (first,), (other,), "==")


def check_submodular_naive(f: SetFunction) -> CheckReport:
    """Test f(X∩Y) + f(X∪Y) <= f(X) + f(Y) over all ordered pairs (X, Y)."""
    limit = get_settings().pair_check_limit
    if f.size > limit:
        raise DomainError(f"pair enumeration is limited to {limit} elements, got {f.size}")
    num = f.numerators
    masks = all_masks(f.size)
    for x in range(f.ground.table_size):
        meet = x & masks
        join = x | masks
        y = _first(num[meet] + num[join] > num[x] + num)
        if y is not None:
            return failed("submodular", f, (x, y), (x & y, x | y), (x, y), "<=")
    return passed("submodular")


def check_submodular_fast(f: SetFunction) -> CheckReport:
    """Local form: f(X∪{a,b}) + f(X) <= f(X∪{a}) + f(X∪{b}) for a < b outside X."""
    num = f.numerators
    masks = all_masks(f.size)
    best: tuple[int, int, int] | None = None
    for a in range(f.size):
        for b in range(a + 1, f.size):
            bit_a, bit_b = 1 << a, 1 << b
            base = masks[(masks & (bit_a | bit_b)) == 0]
            hit = _first(
                num[base | bit_a | bit_b] + num[base] > num[base | bit_a] + num[base | bit_b]
            )
            if hit is not None:
                candidate = (int(base[hit]), a, b)
                if best is None or candidate < best:
                    best = candidate
    if best is None:
        return passed("submodular")
    x, a, b = best
    bit_a, bit_b = 1 << a, 1 << b
    return failed(
        "submodular",
        f,
        (x, bit_a, bit_b),
        (x | bit_a | bit_b, x),
        (x | bit_a, x | bit_b),
        "<=",
    )


def check_increasing(f: SetFunction) -> CheckReport:
    """Single-element steps f(X) <= f(X∪{a}); these imply the full monotonicity."""
    num = f.numerators
    masks = all_masks(f.size)
    best: tuple[int, int] | None = None
    for a in range(f.size):
        bit = 1 << a
        base = masks[(masks & bit) == 0]
        hit = _first(num[base] > num[base | bit])
        if hit is not None:
            candidate = (int(base[hit]), a)
            if best is None or candidate < best:
                best = candidate
    if best is None:
        return passed("increasing")
    x, a = best
    return failed("increasing", f, (x, 1 << a), (x,), (x | 1 << a,), "<=")


def check_increasing_naive(f: SetFunction) -> CheckReport:
    """Definitional form f(X) <= f(Y) for all X ⊆ Y, kept as an oracle."""
    limit = get_settings().pair_check_limit
    if f.size > limit:
        raise DomainError(f"pair enumeration is limited to {limit} elements, got {f.size}")
    num = f.numerators
    masks = all_masks(f.size)
    for x in range(f.ground.table_size):
        supersets = masks[(masks & x) == x]
        hit = _first(num[x] > num[supersets])
        if hit is not None:
            y = int(supersets[hit])
            return failed("increasing", f, (x, y), (x,), (y,), "<=")
    return passed("increasing")


def check_connected(f: SetFunction) -> CheckReport:
    """f(X) > 0 for every proper nonempty X; meaningful for connectivity functions."""
    if f.size <= 1:
        return passed("connected")
    proper = f.numerators[1 : f.ground.full_mask]
    hit = _first(proper <= 0)
    if hit is None:
        return passed("connected")
    x = hit + 1
    return failed("connected", f, (x,), (x,), (), ">")


def check_integer_valued(f: SetFunction) -> CheckReport:
    hit = _first(f.numerators % f.denominator != 0)
    if hit is None:
        return passed("integer-valued")
    return failed("integer-valued", f, (hit,), (hit,), (), "in Z")


def check_half_integral(f: SetFunction) -> CheckReport:
    hit = _first((f.numerators * 2) % f.denominator != 0)
    if hit is None:
        return passed("half-integral")
    return failed("half-integral", f, (hit,), (hit,), (), "in Z/2")


def check_singletons_at_most(f: SetFunction, bound: Fraction, check: str) -> CheckReport:
    for i in range(f.size):
        if f.value(1 << i) > bound:
            return failed(check, f, (1 << i,), (1 << i,), (), "<=", rhs_constant=bound)
    return passed(check)


def check_unitary(f: SetFunction) -> CheckReport:
    return check_singletons_at_most(f, Fraction(1), "unitary")


def connectivity_report(f: SetFunction) -> CheckReport:
    """First failing connectivity-function axiom, or a holding report."""
    for report in (check_normalised(f), check_symmetric(f), check_submodular_fast(f)):
        if not report.holds:
            return report
    return passed("connectivity function")


def polymatroid_report(f: SetFunction) -> CheckReport:
    """First failing polymatroid axiom, or a holding report."""
    for check in (check_normalised, check_increasing, check_submodular_fast):
        report = check(f)
        if not report.holds:
            return report
    return passed("polymatroid")


def check_k_polymatroid(f: SetFunction, k: Fraction | int | str) -> CheckReport:
    """Polymatroid whose singleton values are all at most k."""
    report = polymatroid_report(f)
    if not report.holds:
        return report
    bound = to_rat(k)
    report = check_singletons_at_most(f, bound, f"{bound}-polymatroid")
    return report if not report.holds else passed(f"{bound}-polymatroid")


def check_equal(
    f: SetFunction, g: SetFunction, check: str, f_name: str = "f", g_name: str = "g"
) -> CheckReport:
    """Pointwise equality of two set functions on the same ground set."""
    if f.ground != g.ground:
        raise DomainError(
            f"ground sets differ: {list(f.ground.labels)} vs {list(g.ground.labels)}"
        )
    if f == g:
        return passed(check)
    denominator = math.lcm(f.denominator, g.denominator)
    hit = _first(f.numerators_over(denominator) != g.numerators_over(denominator))
    assert hit is not None
    rendered = f.ground.render(hit)
    witness = Witness(
        subsets=(hit,),
        rendered=(rendered,),
        lhs_expr=f"{f_name}({rendered})",
        rhs_expr=f"{g_name}({rendered})",
        lhs=f.value(hit),
        rhs=g.value(hit),
        relation="==",
    )
    return CheckReport(check=check, holds=False, witness=witness)


def check_bounded_increments(f: SetFunction, check: str, name: str = "f") -> CheckReport:
    """f(Y) − f(X) <= ‖Y − X‖_f for every nested pair X ⊆ Y."""
    limit = get_settings().pair_check_limit
    if f.size > limit:
        raise DomainError(f"pair enumeration is limited to {limit} elements, got {f.size}")
    # the bound rearranges to h(Y) <= h(X) with h = f − ‖·‖_f
    h = f.numerators.astype(object) - norm_numerators(f)
    masks = all_masks(f.size)
    for x in range(f.ground.table_size):
        supersets = masks[(masks & x) == x]
        hit = _first(h[supersets] > h[x])
        if hit is None:
            continue
        y = int(supersets[hit])
        render = f.ground.render
        witness = Witness(
            subsets=(x, y),
            rendered=(render(x), render(y)),
            lhs_expr=f"{name}({render(y)}) - {name}({render(x)})",
            rhs_expr=f"||{render(y ^ x)}||",
            lhs=f.value(y) - f.value(x),
            rhs=sum((f.value(1 << i) for i in f.ground.positions(y ^ x)), Fraction(0)),
            relation="<=",
        )
        return CheckReport(check=check, holds=False, witness=witness)
    return passed(check)


def check_bounded_by_norm(f: SetFunction, check: str, name: str = "f") -> CheckReport:
    """f(Z) <= ‖Z‖_f for every Z."""
    hit = _first(f.numerators.astype(object) > norm_numerators(f))
    if hit is None:
        return passed(check)
    render = f.ground.render
    witness = Witness(
        subsets=(hit,),
        rendered=(render(hit),),
        lhs_expr=f"{name}({render(hit)})",
        rhs_expr=f"||{render(hit)}||",
        lhs=f.value(hit),
        rhs=sum((f.value(1 << i) for i in f.ground.positions(hit)), Fraction(0)),
        relation="<=",
    )
    return CheckReport(check=check, holds=False, witness=witness)
