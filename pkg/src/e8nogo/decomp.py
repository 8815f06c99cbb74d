"""Decompositions of the 248-dim adjoint module: sl2 weights, multiplicity
tables over one or two sl2 factors, refinement into centralizer irreducibles,
and branching along Cartan-compatible embeddings.

Peeling is deterministic: the maximal remaining weight is removed first,
under plain lexicographic order for sl2 powers and under root-coordinate
height (then lex) for general product types, so every emitted table is
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chevalley import (
    ChevalleyAlgebra,
    Sl2Triple,
    Subalgebra,
    bracket,
    build_e8_chevalley,
    commuting_pair,
)
from .errors import LieError, PeelInconsistencyError
from .roots import (
    IrrepLabel,
    RepMultiset,
    SimpleType,
    build_root_system,
    irrep,
    weight_system,
)

DIM = 248
RANK = 8
N_POS = 120


@dataclass(frozen=True)
class WeightMultiset:
    """Multiset of integer weight tuples, one coordinate per sl2 factor."""

    k: int
    entries: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def from_dict(k: int, d: dict) -> "WeightMultiset":
        return WeightMultiset(k, tuple(sorted((tuple(w), m) for w, m in d.items() if m)))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def negated(self) -> "WeightMultiset":
        return WeightMultiset.from_dict(
            self.k, {tuple(-c for c in w): m for w, m in self.entries}
        )


def sl2_weights(
    hs: list,
    alg: ChevalleyAlgebra | None = None,
    triples: list[Sl2Triple] | None = None,
    seed: int = 0,
) -> WeightMultiset:
    """Ad-weights of the 248-dim module under k commuting sl2 factors.

    ``hs`` lists the defining vectors in simple-coroot coordinates; a zero
    vector denotes the trivial factor.  Unless verified triples are supplied,
    commuting sl2 triples realizing the nonzero vectors are constructed
    first; a failure there signals a non-commuting (or invalid) pair.
    """
    alg = alg or build_e8_chevalley()
    hs = [tuple(int(c) for c in h) for h in hs]
    k = len(hs)
    if triples is None:
        nonzero = [h for h in hs if any(h)]
        if len(nonzero) == 2:
            commuting_pair(nonzero[0], nonzero[1], alg, seed=seed)
        elif len(nonzero) == 1:
            from .chevalley import sl2_triple_from_defining_vector

            sl2_triple_from_defining_vector(nonzero[0], alg, seed=seed)
    else:
        for a in range(len(triples)):
            for b in range(a + 1, len(triples)):
                for x in triples[a].elements():
                    for y in triples[b].elements():
                        if not bracket(x, y).is_zero():
                            raise LieError("sl2 triples do not commute")

    counts: dict[tuple[int, ...], int] = {}
    for idx in range(2 * N_POS):
        wc = alg.root_weights[idx]
        w = tuple(
            sum(wc[i] * h[i] for i in range(RANK)) for h in hs
        )
        counts[w] = counts.get(w, 0) + 1
    zero = tuple(0 for _ in range(k))
    counts[zero] = counts.get(zero, 0) + RANK
    return WeightMultiset.from_dict(k, counts)


@dataclass
class BiTable:
    """Multiplicities of the m (x) n isotypic pieces, optionally refined."""

    dims: dict[tuple[int, int], int]
    contents: dict[tuple[int, int], RepMultiset] = field(default_factory=dict)

    def dim_total(self) -> int:
        return sum(m * n * d for (m, n), d in self.dims.items())

    def cell(self, m: int, n: int) -> int:
        return self.dims.get((m, n), 0)

    def max_m(self) -> int:
        return max((m for (m, _) in self.dims), default=0)

    def max_n(self) -> int:
        return max((n for (_, n) in self.dims), default=0)

    def symmetric(self) -> bool:
        keys = set(self.dims) | {(n, m) for (m, n) in self.dims}
        return all(self.cell(m, n) == self.cell(n, m) for (m, n) in keys)

    def render(self) -> str:
        """Aligned text, m across and n down."""
        M, N = self.max_m(), self.max_n()
        width = max(
            [len(str(d)) for d in self.dims.values()] + [len(str(M)) + 2, 3]
        )
        head = " ".join(f"m={m}".rjust(width) for m in range(1, M + 1))
        lines = ["    " + head]
        for n in range(1, N + 1):
            row = " ".join(str(self.cell(m, n)).rjust(width) for m in range(1, M + 1))
            lines.append(f"n={n} " + row)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        out = {"dims": [[m, n, d] for (m, n), d in sorted(self.dims.items())]}
        if self.contents:
            cells = []
            for (m, n), rep in sorted(self.contents.items()):
                entries = [
                    {
                        "type": "x".join(str(t) for t in label.algebra),
                        "weight": [list(w) for w in label.weight],
                        "mult": mult,
                    }
                    for label, mult in rep.entries
                ]
                cells.append([m, n, entries])
            out["contents"] = cells
        return out


def peel_to_bitable(w: WeightMultiset) -> BiTable:
    """Resolve a symmetric sl2^k weight multiset into a multiplicity table.

    Greedy peeling from the lexicographically largest weight; a negative
    intermediate count means the multiset is not a module and signals an
    invalid defining vector.
    """
    if w.negated().entries != w.entries:
        raise PeelInconsistencyError("weight multiset is not negation symmetric")
    k = w.k
    remaining = {wt: m for wt, m in w.entries if m}
    dims: dict[tuple, int] = {}
    while remaining:
        top = max(remaining)
        count = remaining[top]
        if count < 0 or any(c < 0 for c in top):
            raise PeelInconsistencyError(f"peeling failed at weight {top}")
        rep = tuple(c + 1 for c in top)
        dims[rep] = dims.get(rep, 0) + count
        for grid in _rep_weights(rep):
            nv = remaining.get(grid, 0) - count
            if nv < 0:
                raise PeelInconsistencyError(f"peeling drove {grid} negative")
            if nv:
                remaining[grid] = nv
            else:
                remaining.pop(grid, None)
    if k == 1:
        return BiTable({(m[0], 1): d for m, d in dims.items()})
    if k != 2:
        raise LieError("tables are rendered for one or two sl2 factors")
    return BiTable({(m, n): d for (m, n), d in dims.items()})


def _rep_weights(rep: tuple[int, ...]) -> list[tuple[int, ...]]:
    grids: list[tuple[int, ...]] = [()]
    for m in rep:
        grids = [g + (m - 1 - 2 * i,) for g in grids for i in range(m)]
    return grids


# --------------------------------------------------------------------------
# Refinement into centralizer irreducibles
# --------------------------------------------------------------------------


def _restriction_weight(alg, idx: int, factors) -> tuple[tuple[int, ...], ...]:
    wc = alg.root_weights[idx]
    out = []
    for coroots in factors:
        out.append(
            tuple(
                int(sum(wc[i] * cor[i] for i in range(RANK))) for cor in coroots
            )
        )
    return tuple(out)


def refine_bitable(
    hs: list,
    z: Subalgebra,
    alg: ChevalleyAlgebra | None = None,
    table: BiTable | None = None,
) -> BiTable:
    """Refine each isotypic piece into irreducibles of the centralizer.

    The ambient basis weights at each extreme sl2 biweight are restricted to
    the centralizer's Cartan through its simple-root map, higher cells are
    subtracted, and the remainder is peeled into highest-weight modules.
    """
    alg = alg or build_e8_chevalley()
    if z.identified_type is None or z.simple_root_map is None:
        raise LieError("centralizer type must be identified before refining")
    hs = [tuple(int(c) for c in h) for h in hs]
    if len(hs) == 1:
        hs = [hs[0], (0,) * RANK]
    if table is None:
        table = peel_to_bitable(sl2_weights(hs, alg, triples=[]))
    algebra = z.identified_type
    factors = z.simple_root_map

    cell_weights: dict[tuple[int, int], dict] = {}
    for idx in range(2 * N_POS):
        wc = alg.root_weights[idx]
        bi = tuple(sum(wc[i] * h[i] for i in range(RANK)) for h in hs)
        if bi[0] < 0 or bi[1] < 0:
            continue
        zw = _restriction_weight(alg, idx, factors)
        cell = (bi[0], bi[1])
        cell_weights.setdefault(cell, {})
        cell_weights[cell][zw] = cell_weights[cell].get(zw, 0) + 1
    zero_bi = (0, 0)
    zero_w = tuple(tuple(0 for _ in coroots) for coroots in factors)
    cell_weights.setdefault(zero_bi, {})
    cell_weights[zero_bi][zero_w] = cell_weights[zero_bi].get(zero_w, 0) + RANK

    contents: dict[tuple[int, int], RepMultiset] = {}
    content_weights: dict[tuple[int, int], dict] = {}
    M, N = table.max_m(), table.max_n()
    for m in range(M, 0, -1):
        for n in range(N, 0, -1):
            pool = dict(cell_weights.get((m - 1, n - 1), {}))
            for mp in range(m, M + 1):
                if (mp - m) % 2:
                    continue
                for np_ in range(n, N + 1):
                    if (np_ - n) % 2 or (mp, np_) == (m, n):
                        continue
                    for zw, cnt in content_weights.get((mp, np_), {}).items():
                        nv = pool.get(zw, 0) - cnt
                        if nv < 0:
                            raise PeelInconsistencyError(
                                f"cell ({m},{n}) underflows at {zw}"
                            )
                        if nv:
                            pool[zw] = nv
                        else:
                            pool.pop(zw, None)
            expected = table.cell(m, n)
            if not pool:
                if expected:
                    raise PeelInconsistencyError(
                        f"cell ({m},{n}) expected dimension {expected}, got none"
                    )
                continue
            rep = peel_product(algebra, pool)
            got = rep.dimension
            if got != expected:
                raise PeelInconsistencyError(
                    f"cell ({m},{n}) refined to dimension {got}, table says {expected}"
                )
            contents[(m, n)] = rep
            content_weights[(m, n)] = pool
    return BiTable(dict(table.dims), contents)


def _height_functionals(algebra: tuple[SimpleType, ...]) -> list[tuple[Fraction, ...]]:
    out = []
    for t in algebra:
        rs = build_root_system(t)
        n = t.rank
        out.append(
            tuple(
                sum(rs.fundamental_weights[j][i] for j in range(n)) for i in range(n)
            )
        )
    return out


def peel_product(
    algebra: tuple[SimpleType, ...], pool: dict
) -> RepMultiset:
    """Peel a weight multiset over a product type into irreducibles.

    The maximal weight in (height, lex) order is always a dominant highest
    weight of the remaining multiset; height is measured in root coordinates.
    """
    ranks = [t.rank for t in algebra]
    heights = _height_functionals(tuple(algebra))

    def key(w):
        ht = sum(
            sum(Fraction(c) * h for c, h in zip(part, hvec))
            for part, hvec in zip(w, heights)
        )
        return (ht, _concat(w))

    remaining = dict(pool)
    out: dict[IrrepLabel, int] = {}
    while remaining:
        top = max(remaining, key=key)
        count = remaining[top]
        if count < 0 or any(c < 0 for w in top for c in w):
            raise PeelInconsistencyError(f"stuck at non-dominant weight {top}")
        label = IrrepLabel(tuple(algebra), top)
        out[label] = out.get(label, 0) + count
        for w, mult in weight_system(label).items():
            wk = _split(w, ranks)
            nv = remaining.get(wk, 0) - count * mult
            if nv < 0:
                raise PeelInconsistencyError(f"peeling drove {wk} negative")
            if nv:
                remaining[wk] = nv
            else:
                remaining.pop(wk, None)
    return RepMultiset.from_dict(tuple(algebra), out)


def _concat(w: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    for part in w:
        out = out + tuple(part)
    return out


def _split(flat: tuple[int, ...], ranks: list[int]) -> tuple[tuple[int, ...], ...]:
    out = []
    pos = 0
    for r in ranks:
        out.append(tuple(flat[pos : pos + r]))
        pos += r
    return tuple(out)


# --------------------------------------------------------------------------
# Cartan-compatible embeddings and branching
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CartanEmbedding:
    """Restriction map on weights for a subalgebra of matching Cartan data.

    ``matrix`` has one row per target fundamental coordinate (all factors
    concatenated) and one column per source fundamental coordinate.
    """

    source: tuple[SimpleType, ...]
    target: tuple[SimpleType, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def map_weight(self, flat: tuple) -> tuple[int, ...]:
        out = []
        for row in self.matrix:
            v = sum(Fraction(row[j]) * flat[j] for j in range(len(flat)))
            if v.denominator != 1:
                raise LieError("embedding does not map this weight to the target lattice")
            out.append(int(v))
        return tuple(out)

    def compose(self, inner: "CartanEmbedding") -> "CartanEmbedding":
        """The composite restriction source -> inner.target through self."""
        if inner.source != self.target:
            raise LieError("embeddings do not compose")
        rows = []
        for row in inner.matrix:
            rows.append(
                tuple(
                    sum(row[k] * self.matrix[k][j] for k in range(len(self.matrix)))
                    for j in range(len(self.matrix[0]))
                )
            )
        return CartanEmbedding(self.source, inner.target, tuple(rows))


def branch(rep: RepMultiset, e: CartanEmbedding) -> RepMultiset:
    """Restrict a representation multiset along a Cartan embedding."""
    if rep.algebra != e.source:
        raise LieError("representation does not live over the embedding source")
    ranks = [t.rank for t in e.target]
    pool: dict = {}
    for label, mult in rep.entries:
        for w, k in weight_system(label).items():
            key = _split(e.map_weight(w), ranks)
            pool[key] = pool.get(key, 0) + mult * k
    out = peel_product(tuple(e.target), pool)
    if out.dimension != rep.dimension:
        raise PeelInconsistencyError("branching lost dimension")
    return out


def _fund_to_orth(t: SimpleType) -> list[list[Fraction]]:
    """Matrix sending fundamental coordinates to orthogonal coordinates."""
    n = t.rank
    M = [[Fraction(0)] * n for _ in range(n)]
    if t.family == "B":
        # mu_i = lam_i + ... + lam_{n-1} + lam_n / 2
        for i in range(n):
            for j in range(i, n - 1):
                M[i][j] = Fraction(1)
            M[i][n - 1] = Fraction(1, 2)
    elif t.family == "D":
        for i in range(n - 2):
            for j in range(i, n - 2):
                M[i][j] = Fraction(1)
            M[i][n - 2] = Fraction(1, 2)
            M[i][n - 1] = Fraction(1, 2)
        M[n - 2][n - 2] = Fraction(1, 2)
        M[n - 2][n - 1] = Fraction(1, 2)
        M[n - 1][n - 2] = Fraction(-1, 2)
        M[n - 1][n - 1] = Fraction(1, 2)
    elif t.family == "C":
        for i in range(n):
            for j in range(i, n):
                M[i][j] = Fraction(1)
    else:
        raise LieError(f"orthogonal coordinates not defined for {t}")
    return M


def _orth_to_fund(t: SimpleType) -> list[list[Fraction]]:
    n = t.rank
    M = [[Fraction(0)] * n for _ in range(n)]
    if t.family == "B":
        for i in range(n - 1):
            M[i][i] = Fraction(1)
            M[i][i + 1] = Fraction(-1)
        M[n - 1][n - 1] = Fraction(2)
    elif t.family == "D":
        for i in range(n - 2):
            M[i][i] = Fraction(1)
            M[i][i + 1] = Fraction(-1)
        M[n - 2][n - 2] = Fraction(1)
        M[n - 2][n - 1] = Fraction(-1)
        M[n - 1][n - 2] = Fraction(1)
        M[n - 1][n - 1] = Fraction(1)
    elif t.family == "C":
        for i in range(n - 1):
            M[i][i] = Fraction(1)
            M[i][i + 1] = Fraction(-1)
        M[n - 1][n - 1] = Fraction(1)
    else:
        raise LieError(f"orthogonal coordinates not defined for {t}")
    return M


def _vector_dim(t: SimpleType) -> int:
    if t.family == "B":
        return 2 * t.rank + 1
    if t.family == "D":
        return 2 * t.rank
    raise LieError(f"no vector representation convention for {t}")


def _vector_weight(t: SimpleType) -> tuple[int, ...]:
    # for B1 the defining orthogonal module is the adjoint, weight 2
    if t.family == "B" and t.rank == 1:
        return (2,)
    return (1,) + (0,) * (t.rank - 1)


def orthogonal_block_embedding(
    source: SimpleType,
    parts: list[tuple[SimpleType, list[int]]],
    validate: bool = True,
) -> CartanEmbedding:
    """Embedding of a product of B/D types into a B/D type by coordinate blocks.

    ``parts`` assigns each target factor the source orthogonal coordinates it
    acts on; leftover coordinates are dropped.  When ``validate`` is set the
    embedding is checked by branching the source vector representation into
    the factor vectors plus trivials.
    """
    src_orth = _fund_to_orth(source)
    rows: list[tuple[Fraction, ...]] = []
    for t, coords in parts:
        if len(coords) != t.rank:
            raise LieError("coordinate block does not match target rank")
        back = _orth_to_fund(t)
        for i in range(t.rank):
            row = [Fraction(0)] * source.rank
            for k, c in enumerate(coords):
                if back[i][k]:
                    for j in range(source.rank):
                        row[j] += back[i][k] * src_orth[c][j]
            rows.append(tuple(row))
    emb = CartanEmbedding(
        (source,), tuple(t for t, _ in parts), tuple(rows)
    )
    if validate:
        vec = RepMultiset.from_dict(
            (source,), {irrep(source, _vector_weight(source)): 1}
        )
        got = branch(vec, emb)
        expected: dict[IrrepLabel, int] = {}
        targets = tuple(t for t, _ in parts)
        used = 0
        for f, (t, _) in enumerate(parts):
            w = tuple(
                _vector_weight(tt) if g == f else tuple(0 for _ in range(tt.rank))
                for g, tt in enumerate(targets)
            )
            label = IrrepLabel(targets, w)
            expected[label] = expected.get(label, 0) + 1
            used += _vector_dim(t)
        leftover = _vector_dim(source) - used
        if leftover:
            triv = IrrepLabel(targets, tuple(tuple(0 for _ in range(t.rank)) for t in targets))
            expected[triv] = leftover
        if got.as_dict() != expected:
            raise LieError(f"vector branching validation failed for {parts}")
    return emb


def diagonal_embedding(t: SimpleType, copies: int = 2) -> CartanEmbedding:
    """The diagonal of a product of identical factors; weights add."""
    n = t.rank
    rows = []
    for i in range(n):
        rows.append(tuple(Fraction(1 if j % n == i else 0) for j in range(n * copies)))
    return CartanEmbedding(tuple(t for _ in range(copies)), (t,), tuple(rows))
