"""Chain group, sigma-cosets, central subobjects and center computation.

The chain relation is computed as the union-find closure of "merge every
constituent of every product"; a brute-force word-support oracle exists
alongside it to validate the closure on finite rings.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    InternalInconsistency,
    NotAGroup,
    SearchBudgetExceeded,
)
from .ring import FusionRing, Subobject, check_subobject

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 6


def search_budget() -> int:
    return int(os.environ.get("FUSIONRING_SEARCH_BUDGET", DEFAULT_BUDGET))


class UnionFind:
    """Plain union-find with path compression; nodes are labels."""

    def __init__(self):
        self.parent: dict[str, str] = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass
class CosetPartition:
    """A partition of (an explored part of) the basis into cosets."""

    ring: FusionRing
    blocks: tuple[tuple[str, ...], ...]
    block_of: dict[str, int]
    explored: tuple[str, ...]
    identity_block: int

    @classmethod
    def from_unionfind(cls, ring: FusionRing, uf: UnionFind,
                       explored: Iterable[str]) -> "CosetPartition":
        explored = tuple(explored)
        for x in explored:
            uf.add(x)
        raw = [ring.sort_labels(members) for members in uf.classes().values()]
        raw.sort(key=lambda blk: ring.order_key(blk[0]))
        block_of = {l: i for i, blk in enumerate(raw) for l in blk}
        return cls(ring, tuple(tuple(b) for b in raw), block_of, explored,
                   block_of[ring.unit])

    def block_members(self, i: int) -> tuple[str, ...]:
        return self.blocks[i]

    def explored_blocks(self) -> list[int]:
        seen = set(self.explored)
        return [i for i, blk in enumerate(self.blocks) if any(l in seen for l in blk)]

    def same_partition(self, other: "CosetPartition", restrict: set[str] | None = None) -> bool:
        """Equality as partitions, optionally restricted to a label set."""

        def normal(part):
            out = []
            for blk in part.blocks:
                members = frozenset(l for l in blk if restrict is None or l in restrict)
                if members:
                    out.append(members)
            return frozenset(out)

        return normal(self) == normal(other)

    def to_json(self):
        return {
            "blocks": [list(blk) for blk in self.blocks],
            "identity_block": self.identity_block,
            "explored": list(self.explored),
        }


@dataclass
class GroupTable:
    """A finite group as an index matrix over coset blocks."""

    mult: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]  # one representative label per element

    @property
    def size(self) -> int:
        return len(self.mult)

    def verify(self):
        n = self.size
        if not all(len(row) == n for row in self.mult):
            raise NotAGroup("table not square")
        if any(not (0 <= v < n) for row in self.mult for v in row):
            raise NotAGroup("table entry out of range")
        e = self.identity
        for a in range(n):
            if self.mult[e][a] != a or self.mult[a][e] != a:
                raise NotAGroup(f"identity law fails at {a}")
        for a in range(n):
            if not any(self.mult[a][b] == e for b in range(n)):
                raise NotAGroup(f"no inverse for {a}")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                        raise NotAGroup(f"associativity fails at ({a},{b},{c})")

    def inverse(self, a: int) -> int:
        for b in range(self.size):
            if self.mult[a][b] == self.identity:
                return b
        raise NotAGroup(f"no inverse for {a}")

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.mult[out][a]
        return out

    def element_order(self, a: int) -> int:
        cur, k = a, 1
        while cur != self.identity:
            cur = self.mult[cur][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.size
        return all(self.mult[a][b] == self.mult[b][a]
                   for a in range(n) for b in range(a + 1, n))

    def center_size(self) -> int:
        n = self.size
        return sum(1 for a in range(n)
                   if all(self.mult[a][b] == self.mult[b][a] for b in range(n)))

    def to_json(self):
        return {"mult": [list(r) for r in self.mult],
                "identity": self.identity,
                "labels": list(self.labels)}


@dataclass
class GroupDescriptor:
    """Structural identification of a chain/coset group."""

    order: int | None  # None for infinite / not-closed-at-depth
    is_abelian: bool | None
    abelian_invariants: list[int] | None
    flag: str  # "exact" | "stable_at_depth(k)" | "unstable_at_depth(k)"
    presentation: dict | None = None
    exponent: int | None = None
    center_size: int | None = None
    name: str | None = None
    stable_depth: int | None = None

    def __post_init__(self):
        if self.abelian_invariants and self.order is not None:
            if math.prod(self.abelian_invariants) != self.order:
                raise InternalInconsistency("invariants do not multiply to the order")

    def to_json(self):
        doc = {"order": self.order, "abelian": self.is_abelian,
               "invariants": self.abelian_invariants, "flag": self.flag}
        if self.presentation is not None:
            doc["presentation"] = self.presentation
        if self.name is not None:
            doc["name"] = self.name
        return doc


# ----------------------------------------------------------- chain relation


def merge_closure(ring: FusionRing, depth: int = 6) -> CosetPartition:
    """Union-find fixed point of "merge every constituent of a x b" over all
    explored pairs.  Constituents beyond the depth are merged under their
    canonical labels."""
    explored = ring.elements(None if ring.is_explicit else depth)
    uf = UnionFind()
    for x in explored:
        uf.add(x)
    for a in explored:
        for b in explored:
            supp = list(ring.product(a, b))
            first = supp[0]
            for c in supp[1:]:
                uf.union(first, c)
    return CosetPartition.from_unionfind(ring, uf, explored)


def chain_oracle(ring: FusionRing, max_len: int = 6) -> CosetPartition:
    """Brute-force chain relation on a finite ring: X ~ Y iff some word of
    length <= max_len contains both in its support; transitive closure
    applied.

    Enumerates word supports exhaustively; since the support of w.z depends
    only on the support of w, states are deduplicated by support set.
    """
    labels = ring.labels()
    supports: set[frozenset[str]] = set()
    frontier = {frozenset([z]) for z in labels}
    supports |= frontier
    for _ in range(max_len - 1):
        nxt = set()
        for supp in frontier:
            for z in labels:
                ext = set()
                for x in supp:
                    ext.update(ring.product(x, z))
                fs = frozenset(ext)
                if fs not in supports:
                    nxt.add(fs)
        supports |= nxt
        frontier = nxt
    uf = UnionFind()
    for l in labels:
        uf.add(l)
    for supp in supports:
        members = list(supp)
        for other in members[1:]:
            uf.union(members[0], other)
    return CosetPartition.from_unionfind(ring, uf, labels)


def trivial_class(ring: FusionRing, depth: int = 6) -> Subobject:
    """The chain class of the unit (the trivially-chained elements),
    returned as a subobject."""
    part = merge_closure(ring, depth)
    members = part.blocks[part.identity_block]
    d = None if ring.is_explicit else depth
    sub = check_subobject(ring, members, depth=d)  # guaranteed; hard error otherwise
    return sub


# -------------------------------------------------------------- sigma-cosets


def _sigma_related(ring: FusionRing, sigma: frozenset[str], a: str, b: str) -> bool:
    return any(c in sigma for c in ring.product(a, ring.dual(b)))


def sigma_cosets(ring: FusionRing, sigma: Subobject, depth: int = 6,
                 _validated: bool = False) -> CosetPartition:
    """Partition of the explored basis under a ~ b iff supp(a x dual(b))
    meets sigma, with transitive closure applied after the pairwise tests."""
    if not _validated:
        sigma = check_subobject(ring, sigma.members,
                                depth=None if ring.is_explicit else depth)
    explored = ring.elements(None if ring.is_explicit else depth)
    uf = UnionFind()
    related: dict[str, set[str]] = {a: {a} for a in explored}
    for x in explored:
        uf.add(x)
    for i, a in enumerate(explored):
        for b in explored[i + 1:]:
            if _sigma_related(ring, sigma.members, a, b):
                uf.union(a, b)
                related[a].add(b)
                related[b].add(a)
    part = CosetPartition.from_unionfind(ring, uf, explored)
    if ring.is_explicit:
        # the pairwise relation should already be transitive; closure is a
        # defense against bad fusion data, so log if it changed anything
        for a in explored:
            expected = {b for b in explored if part.block_of[a] == part.block_of[b]}
            if related[a] != expected:
                log.warning("sigma relation was not transitive at %r "
                            "(closure added %s)", a, sorted(expected - related[a]))
                break
        unit_block = set(part.blocks[part.identity_block])
        if unit_block != set(sigma.members):
            raise InternalInconsistency(
                f"unit block {sorted(unit_block)} != sigma {sorted(sigma.members)}")
    else:
        unit_block = {l for l in part.blocks[part.identity_block] if l in set(explored)}
        if unit_block != {l for l in sigma.members if l in set(explored)}:
            raise InternalInconsistency("unit block differs from sigma on the explored basis")
    return part


@dataclass
class CentralityResult:
    central: bool
    partition: CosetPartition
    table: GroupTable | None = None
    # block products by index; values >= len(partition.blocks) are frontier
    # classes beyond the explored partition (infinite groups at finite depth)
    products: dict[tuple[int, int], int] = field(default_factory=dict)
    witness: tuple | None = None

    def __bool__(self):
        return self.central


def is_central_subobject(ring: FusionRing, sigma: Subobject,
                         depth: int = 6) -> CentralityResult:
    """Decide whether sigma's cosets form a group.

    Every representative pair of every pair of blocks is checked (the
    product must land in one single coset for all of them).  When all block
    products stay inside the explored partition the full group table is
    returned; otherwise centrality is reported with the partial product map.
    """
    sigma = check_subobject(ring, sigma.members,
                            depth=None if ring.is_explicit else depth)
    part = sigma_cosets(ring, sigma, depth, _validated=True)
    nblocks = len(part.blocks)
    anchors: list[str] = [blk[0] for blk in part.blocks]
    classify_cache: dict[str, int] = dict(part.block_of)

    def classify(label: str) -> int:
        cls = classify_cache.get(label)
        if cls is not None:
            return cls
        for i, anchor in enumerate(anchors):
            if _sigma_related(ring, sigma.members, label, anchor):
                classify_cache[label] = i
                return i
        anchors.append(label)
        cls = len(anchors) - 1
        classify_cache[label] = cls
        return cls

    explored_set = set(part.explored)
    products: dict[tuple[int, int], int] = {}
    for i in range(nblocks):
        bi = [l for l in part.blocks[i] if l in explored_set]
        for j in range(nblocks):
            bj = [l for l in part.blocks[j] if l in explored_set]
            seen: set[int] = set()
            for a in bi:
                for b in bj:
                    for c in ring.product(a, b):
                        # constituents beyond the exploration window are
                        # outside the depth-qualified claim
                        if not ring.is_explicit and c not in explored_set:
                            continue
                        seen.add(classify(c))
                    if len(seen) > 1:
                        return CentralityResult(
                            False, part,
                            witness=(i, j, (a, b), sorted(seen)))
            if seen:
                products[(i, j)] = seen.pop()
    complete = (len(products) == nblocks * nblocks
                and all(v < nblocks for v in products.values()))
    if complete:
        mult = tuple(tuple(products[(i, j)] for j in range(nblocks))
                     for i in range(nblocks))
        table = GroupTable(mult, part.identity_block, tuple(anchors[:nblocks]))
        table.verify()
        return CentralityResult(True, part, table=table, products=products)
    return CentralityResult(True, part, products=products)


def enumerate_central_subobjects(ring: FusionRing) -> list[Subobject]:
    """All central subobjects of a finite explicit ring.

    Candidates come from the closure lattice (closures of subsets of size
    <= 2, then joins) rather than the raw powerset.
    """
    from .ring import generated_subobject

    budget = search_budget()
    labels = ring.labels()
    lattice: set[frozenset[str]] = set()
    seeds = [frozenset()] + [frozenset([a]) for a in labels]
    seeds += [frozenset(p) for p in combinations(labels, 2)]
    for s in seeds:
        lattice.add(generated_subobject(ring, s).members)
    while True:
        new = set()
        for s1 in lattice:
            for s2 in lattice:
                if len(lattice) + len(new) > budget:
                    raise SearchBudgetExceeded("central-subobject lattice too large")
                j = generated_subobject(ring, s1 | s2).members
                if j not in lattice:
                    new.add(j)
        if not new:
            break
        lattice |= new
    out = []
    for members in lattice:
        sub = Subobject(members)
        if is_central_subobject(ring, sub).central:
            out.append(sub)
    out.sort(key=lambda s: (len(s.members), tuple(sorted(s.members))))
    return out


def center_subobject(ring: FusionRing, depth: int = 6) -> Subobject:
    """The intersection of all central subobjects; computed as the unit's
    chain class and cross-checked against the enumeration on finite rings."""
    ez = trivial_class(ring, depth)
    if ring.is_explicit:
        centrals = enumerate_central_subobjects(ring)
        inter = frozenset(ring.labels())
        for sub in centrals:
            inter &= sub.members
        if inter != ez.members:
            raise InternalInconsistency(
                f"intersection of central subobjects {sorted(inter)} != "
                f"unit chain class {sorted(ez.members)}")
    return ez


# --------------------------------------------------------------- chain group


def _generator_classes(ring: FusionRing, part: CosetPartition) -> list[int]:
    """Blocks of the ring generators, deduplicated, identity dropped, and
    reduced modulo inverses (the dual generator's class)."""
    out: list[int] = []
    covered: set[int] = set()
    for g in ring.generators:
        cls = part.block_of[g]
        if cls == part.identity_block or cls in covered:
            continue
        out.append(cls)
        covered.add(cls)
        covered.add(part.block_of.get(ring.dual(g), cls))
    return out


def _presentation(ring: FusionRing, res: CentralityResult, depth: int):
    """Generator-class presentation discovered within the depth horizon."""
    part = res.partition
    gens = _generator_classes(ring, part)
    relations = []
    if len(gens) == 1:
        g = gens[0]
        cur = g
        for k in range(2, depth + 2):
            cur = res.products.get((cur, g))
            if cur is None or cur >= len(part.blocks):
                break
            if cur == part.identity_block:
                relations.append(f"g^{k}")
                break
    gen_labels = [part.blocks[g][0] for g in gens]
    return {"generators": [f"[{l}]" for l in gen_labels],
            "relations": relations}


def _chain_result_at(ring: FusionRing, depth: int):
    ez = trivial_class(ring, depth)
    res = is_central_subobject(ring, ez, depth)
    if not res.central:
        raise InternalInconsistency(
            f"unit chain class is not central (witness {res.witness})")
    return ez, res


def _signature(ring, res, depth):
    if res.table is not None:
        t = res.table
        inv = abelian_invariants(t) if t.is_abelian() else None
        return ("finite", t.size, t.is_abelian(), tuple(inv or ()))
    pres = _presentation(ring, res, depth)
    return ("presentation", len(pres["generators"]), tuple(pres["relations"]))


def chain_group(ring: FusionRing, depth: int = 6,
                candidates: Mapping[str, GroupTable] | None = None):
    """Compute the chain group: the unit's chain class must be central and
    the coset group is identified structurally.

    Returns (GroupTable or presentation dict, GroupDescriptor).  Generated
    rings are computed at `depth` and `depth`+1; agreement is reported as
    stable_at_depth(depth), never as exact.
    """
    if ring.is_explicit:
        _, res = _chain_result_at(ring, depth)
        desc = identify_group(res.table, candidates=candidates)
        desc.flag = "exact"
        return res.table, desc

    _, res = _chain_result_at(ring, depth)
    _, res_next = _chain_result_at(ring, depth + 1)
    stable = _signature(ring, res, depth) == _signature(ring, res_next, depth + 1)
    flag = f"{'stable' if stable else 'unstable'}_at_depth({depth})"
    if res.table is not None:
        desc = identify_group(res.table, candidates=candidates)
        desc.flag = flag
        desc.stable_depth = depth if stable else None
        return res.table, desc

    pres = _presentation(ring, res, depth)
    name = None
    order = None
    invariants = None
    abelian = None
    if len(pres["generators"]) == 1:
        abelian = True
        if not pres["relations"]:
            name = "Z"
        else:
            k = int(pres["relations"][0].split("^")[1])
            name, order, invariants = f"Z/{k}Z", k, [k]
    desc = GroupDescriptor(order=order, is_abelian=abelian,
                           abelian_invariants=invariants, flag=flag,
                           presentation=pres, name=name,
                           stable_depth=depth if stable else None)
    return pres, desc


# --------------------------------------------------------- identify_group


def abelian_invariants(table: GroupTable) -> list[int]:
    """Invariant factors of a finite abelian table, from the counts of
    solutions of x^(p^j) = e for each prime p dividing the order."""
    n = table.size
    if n == 1:
        return []
    primes = _prime_factors(n)
    primary: dict[int, list[int]] = {}
    for p in primes:
        counts = [1]  # counts[j] = #{x : x^(p^j) = e}
        j = 0
        while counts[-1] < _p_part(n, p):
            j += 1
            counts.append(sum(1 for a in range(n)
                              if table.power(a, p ** j) == table.identity))
        exps = []
        for level in range(1, len(counts)):
            m = _ilog(counts[level] // counts[level - 1], p)
            exps.append(m)  # number of cyclic p-factors with exponent >= level
        factors = []
        for level, m in enumerate(exps, start=1):
            nxt = exps[level] if level < len(exps) else 0
            factors.extend([p ** level] * (m - nxt))
        primary[p] = sorted(factors, reverse=True)
    width = max(len(v) for v in primary.values())
    invariants = []
    for i in range(width):
        d = 1
        for p in primes:
            if i < len(primary[p]):
                d *= primary[p][i]
        invariants.append(d)
    invariants.sort()
    return invariants


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _ilog(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def tables_isomorphic(t1: GroupTable, t2: GroupTable) -> bool:
    """Backtracking isomorphism test; fine for order <= 24 or so."""
    n = t1.size
    if n != t2.size:
        return False
    orders1 = [t1.element_order(a) for a in range(n)]
    orders2 = [t2.element_order(a) for a in range(n)]
    if sorted(orders1) != sorted(orders2):
        return False
    phi: dict[int, int] = {t1.identity: t2.identity}
    inv: dict[int, int] = {t2.identity: t1.identity}
    elems = sorted((a for a in range(n) if a != t1.identity),
                   key=lambda a: (-orders1[a], a))

    def consistent(a, v):
        for b, w in list(phi.items()) + [(a, v)]:
            for (x, y, fx, fy) in ((a, b, v, w), (b, a, w, v)):
                prod = t1.mult[x][y]
                image = t2.mult[fx][fy]
                if prod in phi:
                    if phi[prod] != image:
                        return False
                elif image in inv:
                    return False  # image taken by a different preimage
        return True

    def extend(k):
        if k == len(elems):
            return True
        a = elems[k]
        for v in range(n):
            if v in inv or orders2[v] != orders1[a]:
                continue
            if not consistent(a, v):
                continue
            phi[a] = v
            inv[v] = a
            if extend(k + 1):
                return True
            del phi[a]
            del inv[v]
        return False

    return extend(0)


def identify_group(table: GroupTable,
                   candidates: Mapping[str, GroupTable] | None = None) -> GroupDescriptor:
    """Order, abelian invariants, exponent and center size of a finite
    table; names it by matching any caller-supplied candidate tables."""
    table.verify()
    n = table.size
    abelian = table.is_abelian()
    orders = [table.element_order(a) for a in range(n)]
    exponent = math.lcm(*orders) if orders else 1
    invariants = abelian_invariants(table) if abelian else None
    name = None
    if n == 1:
        name = "trivial"
    elif abelian:
        name = " x ".join(f"Z/{d}Z" for d in invariants)
    if candidates:
        for cand_name, cand in candidates.items():
            if tables_isomorphic(table, cand):
                name = cand_name
                break
    return GroupDescriptor(order=n, is_abelian=abelian,
                           abelian_invariants=invariants, flag="exact",
                           exponent=exponent, center_size=table.center_size(),
                           name=name)
