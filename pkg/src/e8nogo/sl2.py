"""Dynkin indices, marked diagrams, and low-index sl2 classification.

A defining vector lives in the coroot lattice; its index is half its squared
length, equivalently the positive-root sum of Eq-style pairings divided by
twice the dual Coxeter number.  Both routes are implemented and the engine
asserts their agreement.

Classification is exact enumeration: all node labelings in {0,1,2} for the
ambient type (with realizability checked through an actual sl2 triple), or
partition combinatorics for the odd orthogonal algebras.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import LieError, TripleNotFoundError
from .roots import RootSystem, SimpleType, build_root_system


@dataclass(frozen=True)
class DefiningVector:
    """A coroot-lattice element presenting an sl2 subalgebra."""

    algebra: SimpleType
    h: tuple[int, ...]

    def __post_init__(self):
        if len(self.h) != self.algebra.rank:
            raise LieError("defining vector length must equal the rank")

    def labels(self) -> tuple:
        """Values of the simple roots on h (the node marks, for normalized h)."""
        rs = build_root_system(self.algebra)
        return tuple(
            sum(rs.cartan[k][i] * self.h[k] for k in range(rs.rank))
            for i in range(rs.rank)
        )


@dataclass(frozen=True)
class MarkedDiagram:
    """Node labels of a normalized defining vector."""

    algebra: SimpleType
    labels: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (0, 1, 2) for v in self.labels):
            raise LieError("marks must lie in {0, 1, 2}")

    def defining_vector(self) -> DefiningVector:
        rs = build_root_system(self.algebra)
        coords = _coroot_coords_from_labels(rs, self.labels)
        return DefiningVector(self.algebra, coords)

    def render(self) -> str:
        """Text diagram; E types use the two-row layout with node 2 dropped."""
        t = self.algebra
        if t.family == "E":
            top = [1] + list(range(3, t.rank + 1))
            first = " ".join(str(self.labels[i - 1]) for i in top)
            second = "    " + str(self.labels[1])
            return first + "\n" + second
        return " ".join(str(v) for v in self.labels)

    def to_json(self) -> str:
        return json.dumps(
            {str(i + 1): v for i, v in enumerate(self.labels)}, sort_keys=True
        )


def _coroot_coords_from_labels(rs: RootSystem, labels) -> tuple[int, ...]:
    """Solve <alpha_i, h> = labels_i for h in simple-coroot coordinates."""
    from .kernels import solve

    n = rs.rank
    rows = [
        {k: rs.cartan[k][i] for k in range(n) if rs.cartan[k][i]} for i in range(n)
    ]
    x = solve(rows, list(labels), n)
    if x is None or any(q.denominator != 1 for q in x):
        raise LieError(f"labels {labels} are not integral on the coroot lattice")
    return tuple(int(q) for q in x)


def dynkin_index(h: DefiningVector) -> Fraction:
    """Half the squared length of the defining vector.

    Cross-checked against the positive-root formula (sum of squared root
    values over twice the dual Coxeter number); disagreement is an engine
    bug and raises.
    """
    rs = build_root_system(h.algebra)
    by_form = rs.coroot_form(h.h, h.h) / 2
    total = Fraction(0)
    for alpha in rs.positive_roots:
        total += rs.eval_root_on_coroot(alpha, h.h) ** 2
    by_roots = total / (2 * rs.dual_coxeter)
    if by_form != by_roots:
        raise LieError("index formulas disagree; engine inconsistency")
    return by_form


def irrep_index_in_sln(n: int) -> int:
    """Index of the n-dimensional irreducible sl2 inside sl_n."""
    if n < 2:
        raise LieError("the irreducible embedding needs n at least 2")
    return comb(n + 1, 3)


@lru_cache(maxsize=1)
def omega_index_row_e8() -> tuple[int, ...]:
    """Per-node sums of squared fundamental-weight pairings over 60."""
    rs = build_root_system(SimpleType("E", 8))
    out = []
    for i in range(8):
        h = rs.root_coords(tuple(1 if j == i else 0 for j in range(8)))
        total = sum(rs.eval_root_on_coroot(a, h) ** 2 for a in rs.positive_roots)
        q = total / 60
        if q.denominator != 1:
            raise LieError("index row must be integral")
        out.append(int(q))
    return tuple(out)


# --------------------------------------------------------------------------
# Partition combinatorics for odd orthogonal algebras
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionSpec:
    """A partition of n labeling a nilpotent class of so_n."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if sum(self.parts) != self.n:
            raise LieError("parts must sum to n")
        if any(p < 1 for p in self.parts):
            raise LieError("parts must be positive")
        if tuple(sorted(self.parts, reverse=True)) != self.parts:
            raise LieError("parts must be weakly decreasing")

    def validate_orthogonal(self) -> None:
        for p in set(self.parts):
            if p % 2 == 0 and self.parts.count(p) % 2:
                raise LieError("even parts must occur with even multiplicity")
        if all(p == 1 for p in self.parts):
            raise LieError("the trivial partition carries no sl2")

    def __str__(self) -> str:
        groups = []
        for p in sorted(set(self.parts), reverse=True):
            k = self.parts.count(p)
            groups.append(f"{p}^{k}" if k > 1 else str(p))
        return "+".join(groups)


def partition_index_son(p: PartitionSpec) -> Fraction:
    """Dynkin index of the sl2 of a partition inside so_n."""
    p.validate_orthogonal()
    return Fraction(sum(comb(part + 1, 3) for part in p.parts), 2)


def partition_weights(p: PartitionSpec) -> list[int]:
    out = []
    for part in p.parts:
        out.extend(range(part - 1, -part - 1, -2))
    return sorted(out, reverse=True)


def partition_defining_vector(p: PartitionSpec) -> DefiningVector:
    """Defining vector of a partition class of so_n in simple-coroot coordinates."""
    p.validate_orthogonal()
    if p.n % 2 == 0:
        raise LieError("only odd orthogonal algebras are classified here")
    rank = (p.n - 1) // 2
    weights = partition_weights(p)
    orth = weights[:rank]
    if sorted(weights[rank + 1 :], reverse=True) != sorted(
        [-v for v in orth], reverse=True
    ):
        raise LieError("partition weights are not symmetric")
    coords = []
    prev = 0
    for j in range(rank - 1):
        c = orth[j] + prev
        coords.append(c)
        prev = c
    # last coordinate from the short coroot 2 e_rank
    last = Fraction(orth[rank - 1] + prev, 2)
    if last.denominator != 1:
        raise LieError("partition weights do not land in the coroot lattice")
    coords.append(int(last))
    return DefiningVector(SimpleType("B", rank), tuple(coords))


def defining_vector_from_partition(
    p: PartitionSpec, embedding: tuple[tuple[int, ...], ...]
) -> tuple[int, ...]:
    """Push a partition defining vector through a coroot table into E8."""
    dv = partition_defining_vector(p)
    if len(embedding) != dv.algebra.rank:
        raise LieError("embedding rank does not match the partition algebra")
    out = [0] * len(embedding[0])
    for c, beta in zip(dv.h, embedding):
        for i, b in enumerate(beta):
            out[i] += c * b
    return tuple(out)


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------


def _partitions(n: int):
    def gen(rest, maxp):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxp), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return gen(n, n)


def classify_sl2_upto_index(
    t: SimpleType, max_index: int, seed: int = 0
) -> list[tuple[MarkedDiagram, Fraction]]:
    """All sl2 classes of index between 1 and max_index, with their indices.

    For E8 this enumerates the {0,1,2} labelings, prefilters by the per-node
    index row, and keeps exactly the labelings realized by an actual sl2
    triple.  For odd orthogonal types the partition classification is used
    instead; no structure constants are involved there.
    """
    if t.family == "B":
        out = []
        for parts in _partitions(2 * t.rank + 1):
            p = PartitionSpec(2 * t.rank + 1, tuple(parts))
            try:
                p.validate_orthogonal()
            except LieError:
                continue
            idx = partition_index_son(p)
            if 0 < idx <= max_index:
                dv = partition_defining_vector(p)
                diagram = MarkedDiagram(t, tuple(int(v) for v in dv.labels()))
                out.append((diagram, idx, p))
        out.sort(key=lambda row: (row[1], row[0].labels))
        return [(d, idx) for d, idx, _ in out]

    if t != SimpleType("E", 8):
        raise LieError(f"classification implemented for E8 and B types, not {t}")

    from .chevalley import build_e8_chevalley, sl2_triple_from_defining_vector

    alg = build_e8_chevalley()
    rs = alg.root_system
    row = omega_index_row_e8()
    out = []
    for code in range(3**8):
        labels = []
        c = code
        for _ in range(8):
            labels.append(c % 3)
            c //= 3
        labels = tuple(labels)
        if not any(labels):
            continue
        bound = sum(v * v * r for v, r in zip(labels, row))
        if bound > max_index:
            continue
        diagram = MarkedDiagram(t, labels)
        dv = diagram.defining_vector()
        idx = dynkin_index(dv)
        if idx > max_index:
            continue
        try:
            sl2_triple_from_defining_vector(dv.h, alg, seed=seed)
        except TripleNotFoundError:
            continue
        out.append((diagram, idx))
    out.sort(key=lambda row: (row[1], row[0].labels))
    return out
