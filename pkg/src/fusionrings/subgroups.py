"""Quantum subgroups as restriction data: normality and centrality tests,
the trivially-restricting subobject, and grouplike extraction."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import (
    InternalInconsistency,
    InvalidRestriction,
    SearchBudgetExceeded,
)
from .ring import FusionRing, Subobject, Support, ValidationReport
from .central import GroupTable, is_central_subobject


@dataclass(frozen=True)
class RestrictionData:
    """A fusion-compatible decomposition map from irreducibles of the big
    ring to multisets of irreducibles of the subgroup's ring."""

    source: FusionRing
    target: FusionRing
    rule: Callable[[str], Support]
    name: str = "restriction"

    @classmethod
    def from_dict(cls, source: FusionRing, target: FusionRing,
                  mapping: Mapping[str, Support], name="restriction") -> "RestrictionData":
        table = {k: dict(v) for k, v in mapping.items()}

        def rule(label):
            try:
                return dict(table[label])
            except KeyError:
                raise InvalidRestriction(f"no restriction entry for {label!r}") from None

        return cls(source, target, rule, name=name)

    def restrict(self, label: str) -> Support:
        return dict(self.rule(label))


def identity_restriction(ring: FusionRing) -> RestrictionData:
    return RestrictionData(ring, ring, lambda l: {l: 1}, name="identity")


def trivial_restriction(ring: FusionRing, unit_ring: FusionRing) -> RestrictionData:
    return RestrictionData(ring, unit_ring,
                           lambda l: {unit_ring.unit: ring.dim(l)},
                           name="trivial")


def su2_parity_restriction(su2: FusionRing, z2ring: FusionRing) -> RestrictionData:
    """SU(2) -> Z2 center branching: V_n restricts to (n+1) copies of the
    parity character."""
    labels = z2ring.labels()
    nontrivial = next(l for l in labels if l != z2ring.unit)

    def rule(label):
        n = int(label[1:])
        return {z2ring.unit if n % 2 == 0 else nontrivial: n + 1}

    return RestrictionData(su2, z2ring, rule, name="su2-parity")


def su2_weight_restriction(su2: FusionRing, zring: FusionRing) -> RestrictionData:
    """Classical weight branching SU(2) -> S^1: V_n restricts to the
    characters z^-n, z^-n+2, ..., z^n."""

    def rule(label):
        n = int(label[1:])
        return {f"z{k}": 1 for k in range(-n, n + 1, 2)}

    return RestrictionData(su2, zring, rule, name="su2-weights")


def validate_restriction(r: RestrictionData, depth: int = 6) -> ValidationReport:
    """Check the restriction invariants to depth, reporting all failures."""
    full = r.source.is_explicit
    report = ValidationReport(checked_depth=None if full else depth)
    explored = r.source.elements(None if full else depth)
    unit_map = r.restrict(r.source.unit)
    if unit_map != {r.target.unit: 1}:
        report.add("unit", (r.source.unit,), f"unit restricts to {unit_map}")
    for tau in explored:
        m = r.restrict(tau)
        for lam in m:
            r.target.dim(lam)  # raises UnknownLabel on dangling targets
        want = r.source.dim(tau)
        got = sum(n * r.target.dim(lam) for lam, n in m.items())
        if got != want:
            report.add("dimension", (tau,), f"{got} != dim {want}")
        dual_m = {r.target.dual(lam): n for lam, n in m.items()}
        if r.restrict(r.source.dual(tau)) != dual_m:
            report.add("conjugation", (tau,), "map(dual tau) != dual of map(tau)")
    for a in explored:
        ma = r.restrict(a)
        for b in explored:
            mb = r.restrict(b)
            lhs = Counter()
            for x, n in ma.items():
                for y, m in mb.items():
                    for c, k in r.target.product(x, y).items():
                        lhs[c] += n * m * k
            rhs = Counter()
            for c, n in r.source.product(a, b).items():
                for lam, m in r.restrict(c).items():
                    rhs[lam] += n * m
            if lhs != rhs:
                report.add("multiplicativity", (a, b), f"{dict(lhs)} != {dict(rhs)}")
    return report


@dataclass
class NormalityResult:
    normal: bool
    witness: tuple | None = None  # (tau, multiplicity, dim)
    checked_depth: int | None = None

    def __bool__(self):
        return self.normal


def is_normal(r: RestrictionData, depth: int = 6) -> NormalityResult:
    """Normality test: the target unit's multiplicity in each restricted
    irreducible must be 0 or the full dimension."""
    _require_valid(r, depth)
    full = r.source.is_explicit
    for tau in r.source.elements(None if full else depth):
        m = r.restrict(tau).get(r.target.unit, 0)
        if m not in (0, r.source.dim(tau)):
            return NormalityResult(False, witness=(tau, m, r.source.dim(tau)),
                                   checked_depth=None if full else depth)
    return NormalityResult(True, checked_depth=None if full else depth)


@dataclass
class CentralSubgroupResult:
    central: bool
    assignment: dict[str, str] | None = None  # tau -> grouplike of the target
    witness: tuple | None = None
    checked_depth: int | None = None

    def __bool__(self):
        return self.central


def is_central_subgroup(r: RestrictionData, depth: int = 6) -> CentralSubgroupResult:
    """Centrality test: each irreducible must restrict to dim-many copies of
    a single dimension-1 target element; returns the grouplike assignment."""
    _require_valid(r, depth)
    full = r.source.is_explicit
    checked = None if full else depth
    assignment = {}
    for tau in r.source.elements(None if full else depth):
        m = r.restrict(tau)
        if len(m) != 1:
            return CentralSubgroupResult(False, witness=(tau, m), checked_depth=checked)
        (lam, n), = m.items()
        if r.target.dim(lam) != 1 or n != r.source.dim(tau):
            return CentralSubgroupResult(False, witness=(tau, m), checked_depth=checked)
        assignment[tau] = lam
    return CentralSubgroupResult(True, assignment=assignment, checked_depth=checked)


def trivial_restriction_subobject(r: RestrictionData, depth: int = 6) -> Subobject:
    """The subobject of irreducibles restricting to a sum of trivials.

    Cross-checked on request by the caller against the coset-group
    criterion; closure of constituents is verified through the restriction
    rule itself so it also covers constituents beyond the depth."""
    _require_valid(r, depth)
    full = r.source.is_explicit
    explored = r.source.elements(None if full else depth)

    def trivially_restricts(tau):
        return r.restrict(tau) == {r.target.unit: r.source.dim(tau)}

    members = {tau for tau in explored if trivially_restricts(tau)}
    for a in members:
        if r.source.dual(a) not in members and r.source.dual(a) in set(explored):
            raise InvalidRestriction(f"trivially-restricting set not dual-closed at {a!r}")
        for b in members:
            for c in r.source.product(a, b):
                # constituents beyond the depth are still checked via the rule
                if not trivially_restricts(c):
                    raise InvalidRestriction(
                        f"trivially-restricting set not fusion-closed: {c!r} in {a!r} x {b!r}")
    return Subobject(frozenset(members))


def central_subgroup_cross_check(r: RestrictionData, depth: int = 6) -> bool:
    """Consistency check: the restriction centrality test must agree
    with the coset-group criterion on the trivially-restricting subobject."""
    by_restriction = is_central_subgroup(r, depth).central
    sigma = trivial_restriction_subobject(r, depth)
    by_cosets = is_central_subobject(r.source, sigma, depth).central
    if by_restriction != by_cosets:
        raise InternalInconsistency(
            f"centrality tests disagree for {r.name}: "
            f"restriction={by_restriction}, cosets={by_cosets}")
    return by_restriction


def _require_valid(r: RestrictionData, depth: int):
    report = validate_restriction(r, depth)
    if not report.ok:
        raise InvalidRestriction(str(report))


def grouplikes(ring: FusionRing, depth: int = 6, closure_cap: int = 4096) -> GroupTable:
    """The group of dimension-1 basis elements (dual of the abelianization).

    Explored dim-1 elements are closed under fusion (their products are
    dim-1 singletons by the dimension homomorphism — verified); a closure
    escaping `closure_cap` elements aborts.
    """
    full = ring.is_explicit
    seeds = [l for l in ring.elements(None if full else depth) if ring.dim(l) == 1]
    elems = list(seeds)
    index = {l: i for i, l in enumerate(elems)}
    i = 0
    while i < len(elems):
        a = elems[i]
        for b in list(elems):
            supp = ring.product(a, b)
            if len(supp) != 1:
                raise InternalInconsistency(
                    f"dim-1 product {a!r} x {b!r} not a singleton: {supp}")
            (c, n), = supp.items()
            if n != 1 or ring.dim(c) != 1:
                raise InternalInconsistency(
                    f"dim-1 product {a!r} x {b!r} gave {supp}")
            if c not in index:
                if len(elems) >= closure_cap:
                    raise SearchBudgetExceeded("grouplike closure did not terminate")
                index[c] = len(elems)
                elems.append(c)
        i += 1
    mult = tuple(
        tuple(index[next(iter(ring.product(a, b)))] for b in elems)
        for a in elems)
    table = GroupTable(mult, index[ring.unit], tuple(elems))
    table.verify()
    return table
