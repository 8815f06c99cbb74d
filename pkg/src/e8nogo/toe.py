"""Candidate enumeration and the machine-checked chirality no-go report.

Every candidate pairs one or two commuting sl2 subalgebras of E8 with the
maximal compact subgroup of their centralizer in the relevant real form.
The engine computes the centralizer, its type, the isotypic multiplicity
table, the centralizer contents of each cell, and the reality verdict of the
fermion cell V_{2,1}; the real-form bookkeeping (which ambient form carries
which compact group) is pinned catalog data, everything else is computed.

The outcome is the report that no candidate is chiral: V_{2,1} always has a
self-conjugate structure, so the exit verdict of the ToE check is negative
for every row, in both the strict and the relaxed mode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chevalley import (
    ChevalleyAlgebra,
    Sl2Triple,
    Subalgebra,
    build_e8_chevalley,
    centralizer,
    identify_type,
    root_triple,
    sl2_triple_from_defining_vector,
    triple_from_orthogonal_roots,
    verify_coroot_base,
)
from .decomp import (
    BiTable,
    CartanEmbedding,
    RepMultiset,
    branch,
    diagonal_embedding,
    orthogonal_block_embedding,
    peel_to_bitable,
    refine_bitable,
    sl2_weights,
)
from .errors import EngineConsistencyError, LieError
from .reality import dual_weight, eigenspace_dims, CenterElement, minus_one_in_weyl, self_conjugate
from .roots import IrrepLabel, SimpleType, build_root_system, irrep
from .sl2 import PartitionSpec, defining_vector_from_partition

# so13 simple coroots inside E8, node order matching the B6 diagram;
# catalog data, certified against the computed centralizer before use.
SO13_COROOTS = (
    (0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, -1, -1, -2, -2, -2, -2, 0),
)

AMBIENT_SPLIT = "E8(8)"
AMBIENT_MINUS24 = "E8(-24)"
AMBIENT_COMPLEX = "R(E8,C)"


@dataclass(frozen=True)
class CandidateConfig:
    ambient: str
    kind: str  # "real" or "complex"
    index_pair: tuple[int, int]
    pair_key: str
    centralizer_complex_type: tuple[SimpleType, ...]
    gmax: tuple[SimpleType, ...]
    gmax_name: str
    modes: tuple[str, ...]


@dataclass
class CandidateReport:
    config: CandidateConfig
    defining_vectors: tuple[tuple[int, ...], tuple[int, ...]]
    bitable: BiTable
    v21: RepMultiset
    v32: RepMultiset | None
    v22_dim: int
    toe2: bool
    toe2prime: bool
    toe3_fails: bool

    @property
    def verdict(self) -> str:
        if self.toe3_fails:
            return "excluded by ToE3 (V21 self-conjugate)"
        return "NOT EXCLUDED"


def _types(*specs: str) -> tuple[SimpleType, ...]:
    return tuple(SimpleType.parse(s) for s in specs)


CATALOG: tuple[CandidateConfig, ...] = (
    CandidateConfig(
        AMBIENT_MINUS24, "real", (1, 1), "oneone", _types("D6"), _types("B5"),
        "Spin(11)", ("toe2", "toe2prime"),
    ),
    CandidateConfig(
        AMBIENT_SPLIT, "real", (1, 1), "oneone", _types("D6"), _types("B2", "B3"),
        "Spin(5)×Spin(7)", ("toe2", "toe2prime"),
    ),
    CandidateConfig(
        AMBIENT_MINUS24, "real", (1, 1), "oneone", _types("D6"), _types("B4", "B1"),
        "Spin(9)×Spin(3)", ("toe2", "toe2prime"),
    ),
    CandidateConfig(
        AMBIENT_COMPLEX, "complex", (1, 0), "one", _types("E7"), _types("E7"),
        "E7", ("toe2", "toe2prime"),
    ),
    CandidateConfig(
        AMBIENT_COMPLEX, "complex", (1, 1), "oneone", _types("D6"), _types("D6"),
        "Spin(12)", ("toe2", "toe2prime"),
    ),
    CandidateConfig(
        AMBIENT_COMPLEX, "complex", (2, 0), "two", _types("B6"), _types("B6"),
        "Spin(13)", ("toe2", "toe2prime"),
    ),
    CandidateConfig(
        AMBIENT_SPLIT, "real", (2, 2), "twotwo", _types("C2", "C2"), _types("C2"),
        "Spin(5)", ("toe2prime",),
    ),
    CandidateConfig(
        AMBIENT_COMPLEX, "complex", (2, 2), "twotwo", _types("C2", "C2"),
        _types("C2", "C2"), "Spin(5)×Spin(5)", ("toe2prime",),
    ),
    CandidateConfig(
        AMBIENT_COMPLEX, "complex", (1, 2), "onetwo", _types("A1", "B4"),
        _types("A1", "B4"), "SU(2)×Spin(9)", ("toe2prime",),
    ),
)


def enumerate_candidates(mode: str) -> list[CandidateConfig]:
    """Candidate configurations of a mode, in fixed report order."""
    if mode not in ("toe2", "toe2prime"):
        raise LieError(f"unknown mode {mode!r}")
    return [c for c in CATALOG if mode in c.modes]


class PipelineContext:
    """Shared exact data for all candidates: triples, centralizers, tables."""

    def __init__(self, seed: int = 0):
        self.alg: ChevalleyAlgebra = build_e8_chevalley()
        rs = self.alg.root_system
        self.seed = seed
        theta = rs.highest_root
        theta_e7 = max(
            (r for r in rs.positive_roots if r[7] == 0), key=lambda r: (sum(r), r)
        )
        omega1 = tuple(int(c) for c in rs.root_coords((1,) + (0,) * 7))
        self.h_theta = theta
        self.h_theta_e7 = theta_e7
        self.h_diag = omega1

        self.t_theta = root_triple(self.alg, theta)
        self.t_theta_e7 = root_triple(self.alg, theta_e7)
        self.t_diag = triple_from_orthogonal_roots(self.alg, [theta, theta_e7])

        # so13 = centralizer of the diagonal index-2 sl2; certify the catalog
        # coroot table, then derive the partition defining vectors through it.
        self.z_so13 = identify_type(centralizer(self.t_diag.elements()))
        if self.z_so13.identified_type != (SimpleType("B", 6),):
            raise EngineConsistencyError("index-2 centralizer is not so13")
        if not verify_coroot_base(self.z_so13, list(SO13_COROOTS), SimpleType("B", 6)):
            raise EngineConsistencyError("so13 coroot table failed certification")

        pb = PartitionSpec(13, (2, 2, 2, 2, 1, 1, 1, 1, 1))
        self.h_b = defining_vector_from_partition(pb, SO13_COROOTS)
        ptop = PartitionSpec(13, (2, 2) + (1,) * 9)
        self.h_so13_top = defining_vector_from_partition(ptop, SO13_COROOTS)

        self.t_b = sl2_triple_from_defining_vector(
            self.h_b, self.alg, within=self.t_diag.elements(), seed=seed
        )
        top_root = tuple(-c for c in self.h_so13_top)
        if not rs.is_root(top_root):
            raise EngineConsistencyError("so13 highest coroot is not an E8 root")
        self.t_one_in_so13 = root_triple(self.alg, self.h_so13_top)

        self._pairs: dict[str, dict] = {}

    # -- pair plumbing ---------------------------------------------------

    def pair_vectors(self, key: str) -> tuple[tuple, tuple]:
        zero = (0,) * 8
        if key == "one":
            return self.h_theta, zero
        if key == "two":
            return self.h_diag, zero
        if key == "oneone":
            return self.h_theta, self.h_theta_e7
        if key == "twotwo":
            return self.h_diag, self.h_b
        if key == "onetwo":
            return self.h_so13_top, self.h_diag
        raise LieError(f"unknown pair {key!r}")

    def pair_triples(self, key: str) -> list[Sl2Triple]:
        return {
            "one": [self.t_theta],
            "two": [self.t_diag],
            "oneone": [self.t_theta, self.t_theta_e7],
            "twotwo": [self.t_diag, self.t_b],
            "onetwo": [self.t_one_in_so13, self.t_diag],
        }[key]

    def pair_data(self, key: str) -> dict:
        if key in self._pairs:
            return self._pairs[key]
        h1, h2 = self.pair_vectors(key)
        triples = self.pair_triples(key)
        weights = sl2_weights([h1, h2], self.alg, triples=triples)
        table = peel_to_bitable(weights)
        gens = []
        for t in triples:
            gens.extend([t.e, t.f])
        z = identify_type(centralizer(gens))
        refined = refine_bitable([h1, h2], z, self.alg, table=table)
        if key == "twotwo":
            z, refined = normalize_factor_order(z, refined)
        data = {"h": (h1, h2), "z": z, "table": refined}
        self._pairs[key] = data
        return data


def _swap_rep_factors(rep: RepMultiset) -> RepMultiset:
    algebra = (rep.algebra[1], rep.algebra[0])
    out: dict[IrrepLabel, int] = {}
    for label, mult in rep.entries:
        swapped = IrrepLabel(algebra, (label.weight[1], label.weight[0]))
        out[swapped] = mult
    return RepMultiset.from_dict(algebra, out)


def normalize_factor_order(z: Subalgebra, table: BiTable):
    """Order the two identical centralizer factors so V_{2,1} leads with the
    higher-dimensional tensor slot (the convention used for reporting)."""
    rep = table.contents.get((2, 1))
    if rep is None or len(rep.algebra) != 2 or rep.algebra[0] != rep.algebra[1]:
        return z, table
    label, _ = rep.entries[0]
    first = irrep(label.algebra[0], label.weight[0]).dimension
    second = irrep(label.algebra[1], label.weight[1]).dimension
    if first >= second:
        return z, table
    z.simple_root_map = (z.simple_root_map[1], z.simple_root_map[0])
    contents = {
        cell: _swap_rep_factors(rep) for cell, rep in table.contents.items()
    }
    return z, BiTable(dict(table.dims), contents)


def _dual_rep(rep: RepMultiset) -> RepMultiset:
    out: dict[IrrepLabel, int] = {}
    for label, mult in rep.entries:
        out[dual_weight(label)] = out.get(dual_weight(label), 0) + mult
    return RepMultiset.from_dict(rep.algebra, out)


def _merge_reps(a: RepMultiset | None, b: RepMultiset | None, algebra):
    out: dict[IrrepLabel, int] = {}
    for rep in (a, b):
        if rep is None:
            continue
        for label, mult in rep.entries:
            out[label] = out.get(label, 0) + mult
    if not out:
        return None
    return RepMultiset.from_dict(algebra, out)


def _gmax_embedding(config: CandidateConfig) -> CartanEmbedding | None:
    d6 = SimpleType("D", 6)
    if config.pair_key == "oneone" and config.kind == "real":
        blocks = {
            "Spin(11)": [(SimpleType("B", 5), [0, 1, 2, 3, 4])],
            "Spin(5)×Spin(7)": [
                (SimpleType("B", 2), [3, 4]),
                (SimpleType("B", 3), [0, 1, 2]),
            ],
            "Spin(9)×Spin(3)": [
                (SimpleType("B", 4), [0, 1, 2, 3]),
                (SimpleType("B", 1), [4]),
            ],
        }[config.gmax_name]
        return orthogonal_block_embedding(d6, blocks)
    if config.pair_key == "twotwo" and config.kind == "real":
        return diagonal_embedding(SimpleType("C", 2))
    return None


def evaluate_candidate(
    config: CandidateConfig, ctx: PipelineContext | None = None
) -> CandidateReport:
    """Compute the report row of one candidate, all checks enforced."""
    ctx = ctx or default_context()
    data = ctx.pair_data(config.pair_key)
    z: Subalgebra = data["z"]
    table: BiTable = data["table"]

    if z.identified_type != config.centralizer_complex_type:
        raise EngineConsistencyError(
            f"centralizer {z.identified_type} does not match catalog "
            f"{config.centralizer_complex_type}"
        )

    if config.kind == "complex":
        if not minus_one_in_weyl(config.centralizer_complex_type):
            raise EngineConsistencyError(
                "complex-case centralizer must have -1 in its Weyl group"
            )
        dims: dict[tuple[int, int], int] = {}
        for (m, n), d in table.dims.items():
            dims[(m, n)] = dims.get((m, n), 0) + d
            dims[(n, m)] = dims.get((n, m), 0) + d
        full = BiTable(dims)
        v21 = _merge_reps(
            table.contents.get((2, 1)),
            _dual_rep(table.contents[(1, 2)]) if (1, 2) in table.contents else None,
            config.gmax,
        )
        v32 = _merge_reps(
            table.contents.get((3, 2)),
            _dual_rep(table.contents[(2, 3)]) if (2, 3) in table.contents else None,
            config.gmax,
        )
        v22_dim = 2 * table.cell(2, 2)
    else:
        if not table.symmetric():
            raise EngineConsistencyError("real-form table must be symmetric")
        full = BiTable(dict(table.dims), dict(table.contents))
        emb = _gmax_embedding(config)
        v21 = table.contents[(2, 1)]
        v32 = table.contents.get((3, 2))
        if emb is not None:
            v21 = branch(v21, emb)
            v32 = branch(v32, emb) if v32 is not None else None
            v23 = table.contents.get((2, 3))
            if v23 is not None:
                if branch(v23, emb).entries != (v32.entries if v32 else ()):
                    raise EngineConsistencyError(
                        "gravitino cells disagree after restriction"
                    )
        v22_dim = table.cell(2, 2)

    if v21 is None:
        raise EngineConsistencyError("candidate has no V21 cell")

    toe2 = all(m + n <= 4 for (m, n), d in full.dims.items() if d)
    toe2prime = all(m < 4 and n < 4 for (m, n), d in full.dims.items() if d)
    toe3_fails = self_conjugate(v21)

    if full.dim_total() not in (248, 496):
        raise EngineConsistencyError("table does not exhaust the adjoint module")
    if not full.symmetric():
        raise EngineConsistencyError("emitted table must be conjugation symmetric")

    return CandidateReport(
        config=config,
        defining_vectors=ctx.pair_vectors(config.pair_key),
        bitable=full,
        v21=v21,
        v32=v32,
        v22_dim=v22_dim,
        toe2=toe2,
        toe2prime=toe2prime,
        toe3_fails=toe3_fails,
    )


_CONTEXT: PipelineContext | None = None


def default_context(seed: int = 0) -> PipelineContext:
    global _CONTEXT
    if _CONTEXT is None or _CONTEXT.seed != seed:
        _CONTEXT = PipelineContext(seed=seed)
    return _CONTEXT


# --------------------------------------------------------------------------
# Rendering
# --------------------------------------------------------------------------


def compact_group_name(algebra: tuple[SimpleType, ...]) -> str:
    names = []
    for t in algebra:
        if t.family == "A":
            names.append(f"SU({t.rank + 1})")
        elif t.family == "B":
            names.append(f"Spin({2 * t.rank + 1})")
        elif t.family == "C" and t.rank == 2:
            names.append("Spin(5)")
        elif t.family == "C":
            names.append(f"Sp({2 * t.rank})")
        elif t.family == "D":
            names.append(f"Spin({2 * t.rank})")
        else:
            names.append(str(t))
    return "×".join(names)


def render_rep_dims(rep: RepMultiset | None) -> str:
    """Dimension string such as 32⊕32', (4,8), or 4⊕16."""
    if rep is None or not rep.entries:
        return "-"
    product = len(rep.algebra) > 1
    raw = []
    for label, mult in rep.entries:
        dims = tuple(
            irrep(t, w).dimension for t, w in zip(label.algebra, label.weight)
        )
        raw.extend([dims] * mult)
    raw.sort()
    seen: dict[tuple, int] = {}
    parts = []
    for dims in raw:
        tick = seen.get(dims, 0)
        seen[dims] = tick + 1
        suffix = "'" * tick
        if product:
            parts.append("(" + ",".join(str(d) for d in dims) + ")" + suffix)
        else:
            parts.append(str(dims[0]) + suffix)
    return "⊕".join(parts)


def dimension_no_go() -> dict:
    """The counting obstruction: three generations need more odd weight
    space than any adjoint involution of E8 offers."""
    rs = build_root_system(SimpleType("E", 8))
    om8 = tuple(int(c) for c in rs.root_coords((0,) * 7 + (1,)))
    om1 = tuple(int(c) for c in rs.root_coords((1,) + (0,) * 7))
    minus_dims = sorted(
        {eigenspace_dims(CenterElement(h))[1] for h in (om8, om1)}
    )
    serre = (248 + 8) // 2
    required = 2 * 2 * 45
    one_generation = 2 * 2 * 15
    return {
        "required": required,
        "required_factors": [2, 2, 45],
        "minus_eigenspace_dims": minus_dims,
        "serre_bound": serre,
        "excluded": required > max(minus_dims),
        "one_generation_required": one_generation,
        "one_generation_excluded_by_dimension": one_generation > serre,
    }


def theorem_report(mode: str, ctx: PipelineContext | None = None) -> dict:
    """Evaluate every candidate of a mode and assemble the verdict document."""
    ctx = ctx or default_context()
    candidates = enumerate_candidates(mode)
    rows = []
    all_fail = True
    for config in candidates:
        rep = evaluate_candidate(config, ctx)
        if not rep.toe3_fails:
            all_fail = False
        rows.append(rep)
    return {"mode": mode, "rows": rows, "all_toe3_fail": all_fail}


def report_to_json_dict(report: dict) -> dict:
    out = {"mode": report["mode"], "candidates": []}
    for rep in report["rows"]:
        out["candidates"].append(
            {
                "ambient": rep.config.ambient,
                "gmax": rep.config.gmax_name,
                "index_pair": list(rep.config.index_pair),
                "defining_vectors": [list(h) for h in rep.defining_vectors],
                "centralizer": "x".join(
                    str(t) for t in rep.config.centralizer_complex_type
                ),
                "V21": render_rep_dims(rep.v21),
                "V32": render_rep_dims(rep.v32),
                "V22_dim": rep.v22_dim,
                "toe2": rep.toe2,
                "toe2prime": rep.toe2prime,
                "toe3_fails": rep.toe3_fails,
                "verdict": rep.verdict,
            }
        )
    out["all_toe3_fail"] = report["all_toe3_fail"]
    return out


def render_report(report: dict) -> str:
    headers = ["ambient", "G_max", "V_{2,1}", "V_{3,2}", "dim V_{2,2}", "ToE2", "ToE3"]
    rows = []
    for rep in report["rows"]:
        rows.append(
            [
                rep.config.ambient,
                rep.config.gmax_name,
                render_rep_dims(rep.v21),
                render_rep_dims(rep.v32),
                str(rep.v22_dim),
                "holds" if rep.toe2 else "fails",
                "fails" if rep.toe3_fails else "HOLDS",
            ]
        )
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    n = len(rows)
    k = sum(1 for rep in report["rows"] if rep.toe3_fails)
    lines.append("")
    lines.append(
        f"{k}/{n} candidates fail ToE3 (V21 self-conjugate): "
        + ("no chiral candidate survives" if report["all_toe3_fail"] else "DISCREPANCY")
    )
    return "\n".join(lines)
