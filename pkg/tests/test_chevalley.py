"""Chevalley basis of E8: relations, Jacobi, triples, centralizers."""

import random
from fractions import Fraction

import pytest

from e8nogo.chevalley import (
    AlgebraElement,
    bracket,
    build_e8_chevalley,
    centralizer,
    commuting_pair,
    coroot_system,
    identify_type,
    root_triple,
    sl2_triple_from_defining_vector,
    triple_from_orthogonal_roots,
    verify_coroot_base,
    verify_triple,
)
from e8nogo.errors import IdentifyError, LieError, TripleNotFoundError
from e8nogo.roots import SimpleType
from e8nogo.toe import SO13_COROOTS


def basis_vec(alg, i):
    return AlgebraElement(alg, {i: Fraction(1)})


def test_constants_are_unit(alg):
    assert all(n in (1, -1) for n in alg._constants.values())


def test_chevalley_relations_full_sweep(alg):
    # [h_i, x_a] = <a, a_i^vee> x_a for all i and all 240 roots
    for i in range(8):
        h = basis_vec(alg, 240 + i)
        for idx in range(240):
            x = basis_vec(alg, idx)
            expect = x.scale(alg.root_weights[idx][i])
            assert bracket(h, x) == expect


def test_cartan_is_abelian(alg):
    for i in range(8):
        for j in range(8):
            assert bracket(basis_vec(alg, 240 + i), basis_vec(alg, 240 + j)).is_zero()


def test_opposite_root_brackets_give_coroots(alg):
    rs = alg.root_system
    theta = rs.highest_root
    h = bracket(alg.x(theta), alg.x(tuple(-c for c in theta)))
    assert h == alg.h(theta)
    for alpha in rs.positive_roots[:20]:
        h = bracket(alg.x(alpha), alg.x(tuple(-c for c in alpha)))
        assert h == alg.h(alpha)


def test_bracket_antisymmetry_and_self(alg):
    rng = random.Random(5)
    for _ in range(50):
        x = AlgebraElement(
            alg, {rng.randrange(248): Fraction(rng.randint(-3, 3)) for _ in range(4)}
        )
        y = AlgebraElement(
            alg, {rng.randrange(248): Fraction(rng.randint(-3, 3)) for _ in range(4)}
        )
        assert bracket(x, x).is_zero()
        assert bracket(x, y) == bracket(y, x).scale(-1)


def test_jacobi_random_sweep(alg):
    rng = random.Random(0)
    for _ in range(10_000):
        i, j, k = (rng.randrange(248) for _ in range(3))
        ei, ej, ek = basis_vec(alg, i), basis_vec(alg, j), basis_vec(alg, k)
        total = (
            bracket(bracket(ei, ej), ek)
            + bracket(bracket(ej, ek), ei)
            + bracket(bracket(ek, ei), ej)
        )
        assert total.is_zero(), (i, j, k)


def test_jacobi_full_sweep_on_pair_plus_cartan(alg, ctx):
    elements = (
        ctx.t_diag.elements()
        + ctx.t_b.elements()
        + [basis_vec(alg, 240 + i) for i in range(8)]
    )
    assert len(elements) == 14
    for x in elements:
        for y in elements:
            for z in elements:
                total = (
                    bracket(bracket(x, y), z)
                    + bracket(bracket(y, z), x)
                    + bracket(bracket(z, x), y)
                )
                assert total.is_zero()


def test_extra_sl2_bracket_recovers_defining_vector(alg):
    # e built on -alpha8 and the D7-chain highest root; [e, f] recovers the
    # stated defining vector a2+a3+2a4+2a5+2a6+2a7
    rs = alg.root_system
    theta_d7 = max(
        (r for r in rs.positive_roots if r[0] == 0), key=lambda r: (sum(r), r)
    )
    assert theta_d7 == (0, 1, 1, 2, 2, 2, 2, 1)
    neg_a8 = (0, 0, 0, 0, 0, 0, 0, -1)
    t = triple_from_orthogonal_roots(alg, [neg_a8, theta_d7])
    assert t.h == alg.h((0, 1, 1, 2, 2, 2, 2, 0))
    assert bracket(t.e, t.f) == t.h
    assert verify_triple(t)


def test_sl2_triple_for_highest_root_is_the_root_triple(alg):
    rs = alg.root_system
    h = tuple(int(c) for c in rs.root_coords((0,) * 7 + (1,)))
    t = sl2_triple_from_defining_vector(h, alg)
    assert t.e == alg.x(rs.highest_root)
    assert t.f == alg.x(tuple(-c for c in rs.highest_root))


def test_sl2_triple_rejects_zero_and_impossible(alg):
    with pytest.raises(TripleNotFoundError):
        sl2_triple_from_defining_vector((0,) * 8, alg)
    # a weight-2-free vector: 4 * omega8 has no weight-2 root spaces
    rs = alg.root_system
    h = tuple(4 * int(c) for c in rs.root_coords((0,) * 7 + (1,)))
    with pytest.raises(TripleNotFoundError):
        sl2_triple_from_defining_vector(h, alg)


def test_centralizer_of_index1_sl2_is_e7(alg):
    rs = alg.root_system
    t = root_triple(alg, rs.highest_root)
    z = identify_type(centralizer(t.elements()))
    assert z.dim == 133
    assert z.identified_type == (SimpleType("E", 7),)
    # spanned by root spaces of the standard E7 subsystem: all coroots have
    # node-8 coordinate zero
    for cor in coroot_system(z):
        assert cor[7] == 0


def test_centralizer_of_index2_sl2_is_so13(ctx):
    z = ctx.z_so13
    assert z.dim == 78
    assert z.identified_type == (SimpleType("B", 6),)
    assert verify_coroot_base(z, list(SO13_COROOTS), SimpleType("B", 6))


def test_centralizer_of_22_pair_is_c2c2(ctx):
    data = ctx.pair_data("twotwo")
    z = data["z"]
    assert z.dim == 20
    assert z.identified_type == (SimpleType("C", 2), SimpleType("C", 2))


def test_centralizer_of_12_pair_is_a1b4(ctx):
    data = ctx.pair_data("onetwo")
    z = data["z"]
    assert z.dim == 39
    assert z.identified_type == (SimpleType("A", 1), SimpleType("B", 4))


def test_centralizer_of_11_pair_is_d6(ctx):
    data = ctx.pair_data("oneone")
    z = data["z"]
    assert z.dim == 66
    assert z.identified_type == (SimpleType("D", 6),)


def test_centralizer_dim_complements_nontrivial_isotypics(ctx):
    # dim Z(sl2) + dim of the nontrivial sl2-isotypic part = 248
    for key, h in (("one", ctx.h_theta), ("two", ctx.h_diag)):
        data = ctx.pair_data(key)
        table = data["table"]
        nontrivial = sum(
            m * n * d for (m, n), d in table.dims.items() if (m, n) != (1, 1)
        )
        assert data["z"].dim + nontrivial == 248


def test_identify_requires_cartan(alg):
    x = alg.x(alg.root_system.highest_root)
    sub = centralizer([x])
    # the centralizer of a single nilpotent is not reductive in our position;
    # identification must refuse rather than guess
    with pytest.raises(IdentifyError):
        identify_type(sub)


def test_commuting_pair_verifies(alg, ctx):
    t1, t2 = ctx.t_diag, ctx.t_b
    for x in t1.elements():
        for y in t2.elements():
            assert bracket(x, y).is_zero()


def test_bracket_rejects_mismatched_algebras(alg):
    from e8nogo.chevalley import ChevalleyAlgebra

    other = ChevalleyAlgebra()
    with pytest.raises(LieError):
        bracket(alg.x(alg.root_system.highest_root), other.x(other.root_system.highest_root))


def test_dump_constants_format(alg):
    dump = alg.dump_constants()
    line = dump.splitlines()[0]
    fields = line.split("  ")
    assert len(fields) == 3
    assert fields[2].lstrip("-") == "1"
