"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every tolerance is exact; none of these computations is permitted to
approximate.
"""

import json
import random

import pytest

from e8nogo.chevalley import (
    AlgebraElement,
    bracket,
    build_e8_chevalley,
    verify_coroot_base,
)
from e8nogo.decomp import branch, orthogonal_block_embedding, refine_bitable
from e8nogo.reality import (
    CenterElement,
    RealityType,
    dual_weight,
    eigenspace_dims,
    frobenius_schur,
    self_conjugate,
    tensor_square_indicator,
)
from e8nogo.roots import (
    RepMultiset,
    SimpleType,
    build_root_system,
    irrep,
    weight_system,
    weyl_dimension,
)
from e8nogo.sl2 import classify_sl2_upto_index, omega_index_row_e8
from e8nogo.toe import (
    SO13_COROOTS,
    dimension_no_go,
    render_rep_dims,
    theorem_report,
)

E8 = SimpleType("E", 8)
B6 = SimpleType("B", 6)


def ok(n, text):
    print(f"acceptance criterion {n}: PASS - {text}")


def test_criterion_1_index_row():
    assert omega_index_row_e8() == (2, 4, 7, 15, 10, 6, 3, 1)
    ok(1, "omega index row (2,4,7,15,10,6,3,1), exact")


def test_criterion_2_classification():
    two = classify_sl2_upto_index(E8, 2)
    assert [(d.labels, i) for d, i in two] == [
        ((0, 0, 0, 0, 0, 0, 0, 1), 1),
        ((1, 0, 0, 0, 0, 0, 0, 0), 2),
    ]
    one = classify_sl2_upto_index(E8, 1)
    assert [(d.labels, i) for d, i in one] == [((0, 0, 0, 0, 0, 0, 0, 1), 1)]
    ok(2, "exactly the two marked diagrams at index <= 2, one at index 1")


def test_criterion_3_centralizers(ctx):
    assert ctx.pair_data("one")["z"].dim == 133
    assert ctx.pair_data("one")["z"].identified_type == (SimpleType("E", 7),)
    assert ctx.z_so13.dim == 78
    assert ctx.z_so13.identified_type == (B6,)
    assert verify_coroot_base(ctx.z_so13, list(SO13_COROOTS), B6)
    z22 = ctx.pair_data("twotwo")["z"]
    assert (z22.dim, z22.identified_type) == (20, (SimpleType("C", 2),) * 2)
    z12 = ctx.pair_data("onetwo")["z"]
    assert (z12.dim, z12.identified_type) == (
        39,
        (SimpleType("A", 1), SimpleType("B", 4)),
    )
    ok(3, "centralizers (133,E7) (78,B6+coroot table) (20,C2xC2) (39,A1xB4)")


def test_criterion_4_multiplicity_tables(ctx):
    t22 = ctx.pair_data("twotwo")["table"]
    assert t22.dims == {
        (1, 1): 20, (2, 1): 20, (3, 1): 6,
        (1, 2): 20, (2, 2): 16, (3, 2): 4,
        (1, 3): 6, (2, 3): 4,
    }
    t12 = ctx.pair_data("onetwo")["table"]
    assert t12.dims == {
        (1, 1): 39, (2, 1): 18, (3, 1): 1,
        (1, 2): 32, (2, 2): 16,
        (1, 3): 10, (2, 3): 2,
    }
    t11 = ctx.pair_data("oneone")["table"]
    assert t11.dims == {
        (1, 1): 66, (2, 1): 32, (1, 2): 32, (2, 2): 12, (3, 1): 1, (1, 3): 1,
    }
    for key in ("one", "two", "oneone", "twotwo", "onetwo"):
        assert ctx.pair_data(key)["table"].dim_total() == 248
    ok(4, "cells of both index-2 tables and the index-(1,1) table, sums 248")


def test_criterion_5_refinements(ctx):
    alg = build_e8_chevalley()
    ref = refine_bitable([ctx.h_diag], ctx.z_so13, alg)
    assert ref.contents[(1, 1)].as_dict() == {irrep(B6, (0, 1, 0, 0, 0, 0)): 1}
    assert ref.contents[(2, 1)].as_dict() == {irrep(B6, (0, 0, 0, 0, 0, 1)): 1}
    assert ref.contents[(3, 1)].as_dict() == {
        irrep(B6, (0, 0, 0, 0, 0, 0)): 1,
        irrep(B6, (1, 0, 0, 0, 0, 0)): 1,
    }
    t22 = ctx.pair_data("twotwo")["table"]
    assert render_rep_dims(t22.contents[(2, 1)]) == "(5,4)"
    assert render_rep_dims(t22.contents[(2, 2)]) == "(4,4)"
    assert render_rep_dims(t22.contents[(2, 3)]) == "(1,4)"
    ok(5, "adjoint+spin+vector refinement and V21=5x4, V22=4x4, V23=1x4")


def test_criterion_6_results_tables(ctx):
    report = theorem_report("toe2", ctx)
    got = [
        (r.config.ambient, r.config.gmax_name, render_rep_dims(r.v21))
        for r in report["rows"]
    ]
    assert got == [
        ("E8(-24)", "Spin(11)", "32"),
        ("E8(8)", "Spin(5)×Spin(7)", "(4,8)"),
        ("E8(-24)", "Spin(9)×Spin(3)", "(16,2)"),
        ("R(E8,C)", "E7", "56"),
        ("R(E8,C)", "Spin(12)", "32⊕32'"),
        ("R(E8,C)", "Spin(13)", "64"),
    ]
    prime = theorem_report("toe2prime", ctx)
    extra = [
        (r.config.ambient, r.config.gmax_name, render_rep_dims(r.v21),
         render_rep_dims(r.v32))
        for r in prime["rows"][6:]
    ]
    assert extra == [
        ("E8(8)", "Spin(5)", "4⊕16", "4"),
        ("R(E8,C)", "Spin(5)×Spin(5)", "(4,5)⊕(5,4)", "(1,4)⊕(4,1)"),
        ("R(E8,C)", "SU(2)×Spin(9)", "(2,9)⊕(2,16)", "(2,1)"),
    ]
    assert [r.config.gmax_name for r in prime["rows"][:6]] == [
        r.config.gmax_name for r in report["rows"]
    ]
    ok(6, "6 strict rows and 3 extra rows with the exact V21/V32 columns")


def test_criterion_7_theorem(ctx):
    for mode, count in (("toe2", 6), ("toe2prime", 9)):
        report = theorem_report(mode, ctx)
        assert len(report["rows"]) == count
        assert report["all_toe3_fail"]
        for rep in report["rows"]:
            assert self_conjugate(rep.v21)
    from e8nogo.cli import main

    assert main(["toe", "--mode", "toe2"]) == 0
    assert main(["toe", "--mode", "toe2prime"]) == 0
    ok(7, "every candidate fails ToE3 in both modes; exit code 0")


def test_criterion_8_dimension_no_go():
    rs = build_root_system(E8)
    om8 = tuple(int(c) for c in rs.root_coords((0,) * 7 + (1,)))
    om1 = tuple(int(c) for c in rs.root_coords((1,) + (0,) * 7))
    dims = {eigenspace_dims(CenterElement(h))[1] for h in (om8, om1)}
    assert dims == {112, 128}
    info = dimension_no_go()
    assert info["required"] == 180 and info["serre_bound"] == 128
    assert info["excluded"] is True
    ok(8, "minus eigenspaces {112,128}; 180 > 128 verdict")


def _dominant_weights_up_to(t, dim_cap):
    rs = build_root_system(t)
    out = []
    bound = 8
    def rec(prefix):
        if len(prefix) == t.rank:
            lab = irrep(t, tuple(prefix))
            d = weyl_dimension(lab)
            if 1 < d <= dim_cap:
                out.append(lab)
            return
        for c in range(bound):
            cand = prefix + [c]
            # dimension grows monotonically in each coordinate
            probe = cand + [0] * (t.rank - len(cand))
            if weyl_dimension(irrep(t, tuple(probe))) > dim_cap:
                break
            rec(cand)
    rec([])
    return out


def test_criterion_9_reality_oracle():
    types = [
        SimpleType("A", 1), SimpleType("A", 2), SimpleType("A", 3),
        SimpleType("B", 2), SimpleType("B", 3), SimpleType("C", 2),
        SimpleType("C", 3), SimpleType("D", 3), SimpleType("G", 2),
    ]
    checked = 0
    for t in types:
        for label in _dominant_weights_up_to(t, 64):
            assert frobenius_schur(label) == tensor_square_indicator(label)
            checked += 1
    assert checked >= 100
    for ell in range(1, 9):
        spin = irrep(SimpleType("B", ell), (0,) * (ell - 1) + (1,))
        fs = frobenius_schur(spin)
        expect = (
            RealityType.REAL if ell % 4 in (0, 3) else RealityType.QUATERNIONIC
        )
        assert fs is expect
    ok(9, f"parity rule matches the tensor-square oracle on {checked} irreps "
          "of rank <= 3 and the mod-4 spin rule for B1..B8")


def test_criterion_10_structural_suites(ctx):
    alg = build_e8_chevalley()
    rng = random.Random(17)
    from fractions import Fraction

    for _ in range(10_000):
        i, j, k = (rng.randrange(248) for _ in range(3))
        ei = AlgebraElement(alg, {i: Fraction(1)})
        ej = AlgebraElement(alg, {j: Fraction(1)})
        ek = AlgebraElement(alg, {k: Fraction(1)})
        s = (
            bracket(bracket(ei, ej), ek)
            + bracket(bracket(ej, ek), ei)
            + bracket(bracket(ek, ei), ej)
        )
        assert s.is_zero()

    elements = (
        ctx.t_diag.elements()
        + ctx.t_b.elements()
        + [AlgebraElement(alg, {240 + i: Fraction(1)}) for i in range(8)]
    )
    for x in elements:
        for y in elements:
            for z in elements:
                s = (
                    bracket(bracket(x, y), z)
                    + bracket(bracket(y, z), x)
                    + bracket(bracket(z, x), y)
                )
                assert s.is_zero()

    # Freudenthal totals match the Weyl dimension for every label the
    # pipeline ever touches
    labels = set()
    for mode in ("toe2", "toe2prime"):
        for rep in theorem_report(mode, ctx)["rows"]:
            for cell_rep in rep.bitable.contents.values():
                labels.update(lab for lab, _ in cell_rep.entries)
            labels.update(lab for lab, _ in rep.v21.entries)
            if rep.v32 is not None:
                labels.update(lab for lab, _ in rep.v32.entries)
    assert len(labels) >= 15
    for label in labels:
        for t, w in zip(label.algebra, label.weight):
            factor = irrep(t, w)
            assert sum(weight_system(factor).values()) == weyl_dimension(factor)

    d6 = SimpleType("D", 6)
    for parts, split in (
        ([(SimpleType("B", 5), [0, 1, 2, 3, 4])], (11, 1)),
        ([(SimpleType("B", 4), [0, 1, 2, 3]), (SimpleType("B", 1), [4])], (9, 3)),
        ([(SimpleType("B", 2), [3, 4]), (SimpleType("B", 3), [0, 1, 2])], (5, 7)),
    ):
        emb = orthogonal_block_embedding(d6, parts)  # validates 12 -> split
        vec = RepMultiset.from_dict((d6,), {irrep(d6, (1, 0, 0, 0, 0, 0)): 1})
        out = branch(vec, emb)
        assert out.dimension == 12
        dims = sorted(
            label.dimension for label, m in out.entries for _ in range(m)
        )
        assert dims == sorted(split) or dims == sorted(split + (1,) * (12 - sum(split)))
    ok(10, "Jacobi sweeps clean; Freudenthal=Weyl on all pipeline labels; "
           "vector branchings 12 = 11+1, 9+3, 7+5 validated")
