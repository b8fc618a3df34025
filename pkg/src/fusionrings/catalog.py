"""Builders for the rings the package ships with, ring constructors
(direct and free products) and the JSON ring-file loader."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import AxiomViolation, MalformedFile, MalformedRing, NotAGroup
from .ring import BasisElement, FusionRing, Support, validate_ring


# -------------------------------------------------------------- group rings


@dataclass(frozen=True)
class GroupPresentationInput:
    """A finite group given by elements and a full multiplication table."""

    elements: tuple[str, ...]
    table: Mapping[tuple[str, str], str]
    identity: str

    def check(self):
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise NotAGroup("duplicate element labels")
        if self.identity not in elems:
            raise NotAGroup(f"identity {self.identity!r} not among elements")
        for a in self.elements:
            for b in self.elements:
                if self.table.get((a, b)) not in elems:
                    raise NotAGroup(f"table not total at ({a!r},{b!r})")
        for a in self.elements:
            if self.table[(self.identity, a)] != a or self.table[(a, self.identity)] != a:
                raise NotAGroup(f"identity law fails at {a!r}")
        for a in self.elements:
            if not any(self.table[(a, b)] == self.identity for b in self.elements):
                raise NotAGroup(f"no inverse for {a!r}")
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                        raise NotAGroup(f"associativity fails at ({a!r},{b!r},{c!r})")

    def inverse(self, a: str) -> str:
        for b in self.elements:
            if self.table[(a, b)] == self.identity:
                return b
        raise NotAGroup(f"no inverse for {a!r}")


def group_ring(g: GroupPresentationInput) -> FusionRing:
    """The fusion ring of C*(Gamma): all dims 1, singleton group-law fusion."""
    g.check()
    basis = [BasisElement(e, 1) for e in g.elements]
    dual = {e: g.inverse(e) for e in g.elements}
    fusion = {(a, b): {g.table[(a, b)]: 1} for a in g.elements for b in g.elements}
    return FusionRing.explicit(basis, g.identity, dual, fusion, name="group-ring")


def cyclic_group(n: int) -> GroupPresentationInput:
    elems = tuple("e" if k == 0 else f"g{k}" for k in range(n))
    table = {(elems[i], elems[j]): elems[(i + j) % n] for i in range(n) for j in range(n)}
    return GroupPresentationInput(elems, table, "e")


def klein_group() -> GroupPresentationInput:
    elems = ("e", "a", "b", "ab")
    idx = {e: i for i, e in enumerate(elems)}
    # Klein four = Z2 x Z2 via bitwise xor on indices
    table = {(x, y): elems[idx[x] ^ idx[y]] for x in elems for y in elems}
    return GroupPresentationInput(elems, table, "e")


def s3_group() -> GroupPresentationInput:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    names = ["e", "r", "r2", "s", "sr", "sr2"]
    lookup = {p: n for p, n in zip(perms, names)}

    def compose(p, q):  # (p*q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(3))

    table = {(lookup[p], lookup[q]): lookup[compose(p, q)] for p in perms for q in perms}
    return GroupPresentationInput(tuple(names), table, "e")


# ------------------------------------------------------- finite rep rings


def rep_ring_char_table(irreps: Sequence[tuple[str, int]], unit: str,
                        fusion: Mapping[tuple[str, str], Support],
                        dual: Mapping[str, str] | None = None,
                        name="rep-ring") -> FusionRing:
    """Ingest the representation ring of a finite group as data.

    `dual` defaults to the unique partner with the unit in the product;
    the result is validated and rejected on any axiom failure.
    """
    labels = [lab for lab, _ in irreps]
    if dual is None:
        dual = {}
        for a in labels:
            partners = [b for b in labels if fusion.get((a, b), {}).get(unit, 0) == 1]
            if len(partners) != 1:
                raise MalformedRing(f"cannot infer dual of {a!r}")
            dual[a] = partners[0]
    ring = FusionRing.explicit([BasisElement(l, d) for l, d in irreps],
                               unit, dual, fusion, name=name)
    report = validate_ring(ring)
    if not report.ok:
        raise AxiomViolation(report)
    return ring


def rep_s3_ring() -> FusionRing:
    """Rep(S3): trivial, sign and the 2-dimensional irrep."""
    fusion = {
        ("1", "1"): {"1": 1}, ("1", "sgn"): {"sgn": 1}, ("1", "rho"): {"rho": 1},
        ("sgn", "1"): {"sgn": 1}, ("sgn", "sgn"): {"1": 1}, ("sgn", "rho"): {"rho": 1},
        ("rho", "1"): {"rho": 1}, ("rho", "sgn"): {"rho": 1},
        ("rho", "rho"): {"1": 1, "sgn": 1, "rho": 1},
    }
    return rep_ring_char_table([("1", 1), ("sgn", 1), ("rho", 2)], "1", fusion,
                               name="rep-s3")


def rep_z4_ring() -> FusionRing:
    """Rep(Z4): the dual group ring, four characters with cyclic fusion."""
    labels = [f"chi{k}" for k in range(4)]
    fusion = {(labels[i], labels[j]): {labels[(i + j) % 4]: 1}
              for i in range(4) for j in range(4)}
    return rep_ring_char_table([(l, 1) for l in labels], "chi0", fusion,
                               name="rep-z4")


# -------------------------------------------------- generated catalog rings


def su2_ring() -> FusionRing:
    """SU(2) fusion: V_a x V_b = V_|a-b| + V_|a-b|+2 + ... + V_a+b.

    The same ring serves SU_q(2) and B_u(Q), which share these fusion rules.
    """

    def parse(lab):
        return int(lab[1:])

    def oracle(a, b):
        x, y = parse(a), parse(b)
        return {f"V{c}": 1 for c in range(abs(x - y), x + y + 1, 2)}

    return FusionRing.generated("V0", ["V1"], oracle,
                                dual_fn=lambda l: l,
                                dim_fn=lambda l: parse(l) + 1,
                                name="su2")


def so3_ring() -> FusionRing:
    """SO(3) fusion (integer spins); also serves A_aut(B, tau)."""

    def parse(lab):
        return int(lab[1:])

    def oracle(a, b):
        x, y = parse(a), parse(b)
        return {f"W{c}": 1 for c in range(abs(x - y), x + y + 1)}

    return FusionRing.generated("W0", ["W1"], oracle,
                                dual_fn=lambda l: l,
                                dim_fn=lambda l: 2 * parse(l) + 1,
                                name="so3")


def z_group_ring() -> FusionRing:
    """Group ring of Z (dual of the circle group), as a generated ring."""

    def parse(lab):
        return int(lab[1:])

    def oracle(a, b):
        return {f"z{parse(a) + parse(b)}": 1}

    return FusionRing.generated("z0", ["z1", "z-1"], oracle,
                                dual_fn=lambda l: f"z{-parse(l)}",
                                dim_fn=lambda l: 1,
                                name="z-group-ring")


_AU_BAR = {"u": "v", "v": "u"}


def au_word_ring(n: int = 2) -> FusionRing:
    """The free-unitary word ring: basis = words over {u, v} with v = dual u.

    Fusion of x and y sums over all cancelling factorizations x = a.g,
    y = dual(g).b, contributing the concatenation a.b.  Dims are defined
    recursively so the dimension homomorphism holds with dim(u) = n.
    """
    if n < 2:
        raise MalformedRing("au_word_ring needs dim parameter n >= 2")

    def bar(w: str) -> str:
        return "".join(_AU_BAR[c] for c in reversed(w))

    def oracle(x, y):
        x = "" if x == "e" else x
        y = "" if y == "e" else y
        out = {}
        for k in range(min(len(x), len(y)) + 1):
            g = x[len(x) - k:]
            if bar(g) == y[:k]:
                w = x[: len(x) - k] + y[k:]
                out[w or "e"] = 1
        return out

    dims: dict[str, int] = {"": 1, "u": n, "v": n}

    def dim(lab):
        w = "" if lab == "e" else lab
        if w in dims:
            return dims[w]
        p, c = w[:-1], w[-1]
        d = dim(p if p else "e") * n
        if p and p[-1] == _AU_BAR[c]:
            d -= dim(p[:-1] if p[:-1] else "e")
        dims[w] = d
        return d

    return FusionRing.generated("e", ["u", "v"], oracle,
                                dual_fn=lambda l: "e" if l == "e" else bar(l),
                                dim_fn=dim,
                                name=f"au-word-ring(n={n})")


# --------------------------------------------------------------- products


def direct_product(r1: FusionRing, r2: FusionRing) -> FusionRing:
    """Componentwise product ring on pair labels '(a,b)'."""

    def pair(a, b):
        return f"({a},{b})"

    def unpair(lab):
        inner = lab[1:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return inner[:i], inner[i + 1:]
        raise MalformedRing(f"bad pair label {lab!r}")

    if r1.is_explicit and r2.is_explicit:
        basis = [BasisElement(pair(a.label, b.label), a.dim * b.dim)
                 for a in r1.basis for b in r2.basis]
        unit = pair(r1.unit, r2.unit)
        dual = {pair(a, b): pair(r1.dual(a), r2.dual(b))
                for a in r1.labels() for b in r2.labels()}
        fusion = {}
        for a1 in r1.labels():
            for b1 in r2.labels():
                for a2 in r1.labels():
                    for b2 in r2.labels():
                        supp = {}
                        for c1, n1 in r1.product(a1, a2).items():
                            for c2, n2 in r2.product(b1, b2).items():
                                supp[pair(c1, c2)] = n1 * n2
                        fusion[(pair(a1, b1), pair(a2, b2))] = supp
        return FusionRing.explicit(basis, unit, dual, fusion,
                                   name=f"{r1.name}x{r2.name}")
    if not r1.is_explicit and not r2.is_explicit:
        def oracle(x, y):
            a1, b1 = unpair(x)
            a2, b2 = unpair(y)
            out = {}
            for c1, n1 in r1.product(a1, a2).items():
                for c2, n2 in r2.product(b1, b2).items():
                    out[pair(c1, c2)] = n1 * n2
            return out

        gens = [pair(g, r2.unit) for g in r1.generators]
        gens += [pair(r1.unit, g) for g in r2.generators]
        return FusionRing.generated(
            pair(r1.unit, r2.unit), gens, oracle,
            dual_fn=lambda l: pair(r1.dual(unpair(l)[0]), r2.dual(unpair(l)[1])),
            dim_fn=lambda l: r1.dim(unpair(l)[0]) * r2.dim(unpair(l)[1]),
            name=f"{r1.name}x{r2.name}")
    raise MalformedRing("direct_product needs two explicit or two generated rings")


def free_product(r1: FusionRing, r2: FusionRing, factor_depth: int = 6) -> FusionRing:
    """Free-product ring: alternating tagged words in nontrivial irreducibles.

    Fusion follows Wang's classification: letters from different factors
    concatenate; equal-factor boundary letters are fused in their factor,
    the trivial constituent recursing into the shorter words.
    """
    factors = (r1, r2)

    def letters_of(lab: str) -> tuple[tuple[int, str], ...]:
        if lab == "e":
            return ()
        out = []
        for piece in lab.split("*"):
            tag, flab = piece.split(":", 1)
            out.append((int(tag) - 1, flab))
        return tuple(out)

    def label_of(word) -> str:
        if not word:
            return "e"
        return "*".join(f"{i + 1}:{l}" for i, l in word)

    memo: dict[tuple, Counter] = {}

    def fuse(s: tuple, t: tuple) -> Counter:
        if not s:
            return Counter({t: 1})
        if not t:
            return Counter({s: 1})
        key = (s, t)
        hit = memo.get(key)
        if hit is not None:
            return hit
        (fi, sl), (fj, tl) = s[-1], t[0]
        out = Counter()
        if fi != fj:
            out[s + t] = 1
        else:
            fac = factors[fi]
            for c, m in fac.product(sl, tl).items():
                if c == fac.unit:
                    rec = fuse(s[:-1], t[1:])
                    for w, k in rec.items():
                        out[w] += m * k
                else:
                    out[s[:-1] + ((fi, c),) + t[1:]] += m
        memo[key] = out
        return out

    def oracle(x, y):
        return {label_of(w): m for w, m in fuse(letters_of(x), letters_of(y)).items()}

    def dual_fn(lab):
        word = letters_of(lab)
        return label_of(tuple((i, factors[i].dual(l)) for i, l in reversed(word)))

    def dim_fn(lab):
        d = 1
        for i, l in letters_of(lab):
            d *= factors[i].dim(l)
        return d

    gens = []
    for i, fac in enumerate(factors):
        if fac.is_explicit:
            fac_gens = [l for l in fac.labels() if l != fac.unit]
        else:
            fac_gens = [g for g in fac.generators if g != fac.unit]
        gens += [label_of(((i, g),)) for g in fac_gens]
    return FusionRing.generated("e", gens, oracle, dual_fn=dual_fn,
                                dim_fn=dim_fn,
                                name=f"{r1.name}*{r2.name}")


# ----------------------------------------------------------------- file I/O


def save_ring(ring: FusionRing, path, depth: int = 6):
    """Write a ring as canonical JSON; generated rings are truncated at
    `depth` and stamped with "truncated_at"."""
    if ring.is_explicit:
        labels = ring.labels()
        truncated = ring.truncated_at
    else:
        labels = ring.elements(depth)
        truncated = depth
    in_scope = set(labels)
    doc = {
        "basis": [{"label": l, "dim": ring.dim(l)} for l in labels],
        "unit": ring.unit,
        "dual": {l: ring.dual(l) for l in labels},
        "fusion": [],
    }
    for a in labels:
        for b in labels:
            try:
                supp = ring.product(a, b)
            except Exception:
                continue
            if not set(supp) <= in_scope:
                continue  # escapes the truncation; omitted, hence the stamp
            for c in sorted(supp, key=lambda l: labels.index(l)):
                doc["fusion"].append({"a": a, "b": b, "c": c, "n": supp[c]})
    if truncated is not None:
        doc["truncated_at"] = truncated
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=False) + "\n")


def load_ring(path, validate: bool = True) -> FusionRing:
    """Load an explicit ring from the JSON schema; validates the axioms
    unless `validate` is False (callers that report violations themselves)."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedFile(str(exc)) from exc
    for key in ("basis", "unit", "dual", "fusion"):
        if key not in doc:
            raise MalformedFile(f"missing key {key!r}")
    try:
        basis = [BasisElement(b["label"], int(b["dim"])) for b in doc["basis"]]
        dual = {str(k): str(v) for k, v in doc["dual"].items()}
        fusion: dict[tuple[str, str], Support] = {}
        for entry in doc["fusion"]:
            key = (entry["a"], entry["b"])
            supp = fusion.setdefault(key, {})
            if entry["c"] in supp:
                raise MalformedFile(f"duplicate fusion entry {entry}")
            supp[entry["c"]] = int(entry["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFile(str(exc)) from exc
    truncated = doc.get("truncated_at")
    ring = FusionRing.explicit(basis, doc["unit"], dual, fusion,
                               name=Path(path).stem, truncated_at=truncated)
    if validate:
        report = validate_ring(ring)
        if not report.ok:
            raise AxiomViolation(report)
    return ring


def load_group(path) -> GroupPresentationInput:
    """Load a finite group presentation: {"elements", "identity", "table"}
    where table is a nested map row-label -> col-label -> product."""
    try:
        doc = json.loads(Path(path).read_text())
        elements = tuple(doc["elements"])
        table = {(a, b): doc["table"][a][b] for a in elements for b in elements}
        g = GroupPresentationInput(elements, table, doc["identity"])
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise MalformedFile(str(exc)) from exc
    g.check()
    return g
