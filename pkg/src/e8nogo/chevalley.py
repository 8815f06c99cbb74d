"""Explicit Chevalley basis of E8: structure constants, brackets, centralizers.

Basis order: the 120 positive root vectors x_alpha (height-lex order), then
the 120 negatives in matching order, then the simple coroots h_1..h_8.

Structure constants are generated by the extraspecial-pair algorithm over the
fixed root order: the constant of each extraspecial pair is set to +1 (all
root strings in E8 have length one), every other constant follows from
antisymmetry, the opposite-pair rule N(-a,-b) = -N(a,b), and the four-root
Jacobi relation.  Any consistent sign convention yields an isomorphic
algebra; the Jacobi sweeps and the pinned bracket identities in the tests are
convention independent.

All arithmetic is exact; elements are sparse rational vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import EngineConsistencyError, IdentifyError, LieError, TripleNotFoundError
from .kernels import eliminate, fraction_matrix_inverse, nullspace, rank, solve
from .roots import FAMILIES, RootSystem, SimpleType, build_root_system

DIM = 248
RANK = 8
N_POS = 120


class ChevalleyAlgebra:
    """E8 with integer structure constants over the fixed Chevalley basis."""

    def __init__(self):
        self.root_system: RootSystem = build_root_system(SimpleType("E", 8))
        rs = self.root_system
        pos = list(rs.positive_roots)
        self.roots: list[tuple[int, ...]] = pos + [tuple(-c for c in r) for r in pos]
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        # weight coordinates of every root, i.e. <root, alpha_i_check> for all i
        self.root_weights = [rs.weight_coords(r) for r in self.roots]
        self._constants = _structure_constants(rs, self.roots, self.root_index)

    # -- basis bookkeeping -------------------------------------------------

    def basis_size(self) -> int:
        return DIM

    def basis_label(self, idx: int) -> str:
        if idx < 2 * N_POS:
            return "x[" + ",".join(str(c) for c in self.roots[idx]) + "]"
        return f"h{idx - 2 * N_POS + 1}"

    def x(self, root) -> "AlgebraElement":
        return AlgebraElement(self, {self.root_index[tuple(root)]: Fraction(1)})

    def h(self, coroot_coords) -> "AlgebraElement":
        coeffs = {
            2 * N_POS + i: Fraction(v) for i, v in enumerate(coroot_coords) if v
        }
        return AlgebraElement(self, coeffs)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def element(self, coeffs: dict) -> "AlgebraElement":
        return AlgebraElement(
            self, {i: Fraction(v) for i, v in coeffs.items() if v}
        )

    def constant(self, a: int, b: int) -> int:
        """N(alpha, beta) for root indices with root sum again a root."""
        return self._constants.get((a, b), 0)

    # -- basis brackets ----------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[b_i, b_j] of two basis vectors as a sparse coefficient dict."""
        if i >= 2 * N_POS and j >= 2 * N_POS:
            return {}
        if i >= 2 * N_POS:
            k = i - 2 * N_POS
            val = self.root_weights[j][k]
            return {j: Fraction(val)} if val else {}
        if j >= 2 * N_POS:
            k = j - 2 * N_POS
            val = self.root_weights[i][k]
            return {i: Fraction(-val)} if val else {}
        a, b = self.roots[i], self.roots[j]
        s = tuple(a[t] + b[t] for t in range(RANK))
        if not any(s):
            # [x_a, x_-a] = h_a; for E8 the coroot has the coordinates of a
            return {2 * N_POS + t: Fraction(a[t]) for t in range(RANK) if a[t]}
        k = self.root_index.get(s)
        if k is None:
            return {}
        return {k: Fraction(self._constants[(i, j)])}

    def dump_constants(self) -> str:
        """Text table `alpha beta N(alpha,beta)`, one root pair per line."""
        lines = []
        for (i, j), n in sorted(self._constants.items()):
            a = " ".join(str(c) for c in self.roots[i])
            b = " ".join(str(c) for c in self.roots[j])
            lines.append(f"{a}  {b}  {n}")
        return "\n".join(lines)


def _structure_constants(rs: RootSystem, roots, root_index) -> dict:
    """All N(a,b) for pairs of roots with a+b a root, keyed by root indices."""
    pos = roots[:N_POS]
    order = {r: i for i, r in enumerate(pos)}  # height-lex position

    def neg(r):
        return tuple(-c for c in r)

    # positive special pairs, grouped by their sum, in height order
    special: dict[tuple, list[tuple]] = {}
    for gamma in pos:
        if sum(gamma) == 1:
            continue
        pairs = []
        for a in pos:
            if sum(a) * 2 > sum(gamma):
                break
            b = tuple(gamma[t] - a[t] for t in range(RANK))
            if b in order and order[a] < order[b]:
                pairs.append((a, b))
        special[gamma] = sorted(pairs, key=lambda p: order[p[0]])

    table: dict[tuple[tuple, tuple], int] = {}

    def lookup_pos(a, b):
        """N(a,b) for positive roots via the table, antisymmetry included."""
        if order[a] < order[b]:
            return table[(a, b)]
        return -table[(b, a)]

    def const(a, b):
        """N(a,b) for arbitrary roots with a+b a root."""
        s = tuple(a[t] + b[t] for t in range(RANK))
        if s not in root_index:
            return 0
        a_pos = a in order
        b_pos = b in order
        if a_pos and b_pos:
            return lookup_pos(a, b)
        if not a_pos and not b_pos:
            return -const(neg(a), neg(b))
        if s in order:
            # mixed signs, positive sum: rotate (a, b, -s) and flip signs
            if a_pos:
                return -lookup_pos(neg(b), s)
            return lookup_pos(neg(a), s)
        return -const(neg(a), neg(b))

    for gamma in pos:
        pairs = special.get(gamma)
        if not pairs:
            continue
        eps, eta = pairs[0]
        table[(eps, eta)] = 1  # extraspecial; E8 root strings give p + 1 = 1
        for a, b in pairs[1:]:
            term1 = term2 = 0
            d1 = tuple(eta[t] - a[t] for t in range(RANK))
            if d1 in root_index:
                term1 = const(eta, neg(a)) * const(d1, eps)
            d2 = tuple(eps[t] - a[t] for t in range(RANK))
            if d2 in root_index:
                term2 = const(neg(a), eps) * const(d2, eta)
            n = term1 + term2
            if n not in (1, -1):
                raise EngineConsistencyError(
                    f"structure constant for {a}+{b} came out {n}"
                )
            table[(a, b)] = n

    out: dict[tuple[int, int], int] = {}
    for i, a in enumerate(roots):
        for j, b in enumerate(roots):
            if i == j:
                continue
            s = tuple(a[t] + b[t] for t in range(RANK))
            if s in root_index:
                out[(i, j)] = const(a, b)
    return out


@lru_cache(maxsize=1)
def build_e8_chevalley() -> ChevalleyAlgebra:
    return ChevalleyAlgebra()


@dataclass(frozen=True)
class AlgebraElement:
    """A sparse rational vector over the 248-element Chevalley basis."""

    algebra: ChevalleyAlgebra
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {i: Fraction(v) for i, v in self.coeffs.items() if v}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + v
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) - v
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {i: -v for i, v in self.coeffs.items()})

    def scale(self, c) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.algebra, {i: c * v for i, v in self.coeffs.items()})

    def dense(self) -> tuple[Fraction, ...]:
        return tuple(self.coeffs.get(i, Fraction(0)) for i in range(DIM))

    def cartan_part(self) -> tuple[Fraction, ...]:
        return tuple(self.coeffs.get(2 * N_POS + i, Fraction(0)) for i in range(RANK))

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.coeffs == other.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        alg = self.algebra
        parts = []
        for i in sorted(self.coeffs):
            v = self.coeffs[i]
            parts.append(f"{v}*{alg.basis_label(i)}" if v != 1 else alg.basis_label(i))
        return " + ".join(parts)


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Lie bracket [x, y], exact and bilinear."""
    if x.algebra is not y.algebra:
        raise LieError("bracket of elements of different algebras")
    alg = x.algebra
    out: dict[int, Fraction] = {}
    for i, xi in x.coeffs.items():
        for j, yj in y.coeffs.items():
            for k, c in alg.bracket_basis(i, j).items():
                out[k] = out.get(k, Fraction(0)) + xi * yj * c
    return AlgebraElement(alg, out)


def ad_rows(g: AlgebraElement) -> list[dict[int, int]]:
    """Integer-cleared rows of ad(g) acting on the 248-dim basis.

    Row k lists the k-th output coordinate of [g, b_j] over columns j.
    """
    alg = g.algebra
    den = 1
    for v in g.coeffs.values():
        den = den * v.denominator // _gcd(den, v.denominator)
    cols: dict[int, dict[int, int]] = {}
    for j in range(DIM):
        acc: dict[int, Fraction] = {}
        for i, gi in g.coeffs.items():
            for k, c in alg.bracket_basis(i, j).items():
                acc[k] = acc.get(k, Fraction(0)) + gi * c
        for k, v in acc.items():
            if v:
                cols.setdefault(k, {})[j] = int(v * den)
    return [cols[k] for k in sorted(cols)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# --------------------------------------------------------------------------
# Subalgebras: centralizers and type identification
# --------------------------------------------------------------------------


@dataclass
class Subalgebra:
    """A bracket-closed subspace of E8 with an identified reductive shape."""

    algebra: ChevalleyAlgebra
    basis: list[AlgebraElement]
    cartan_part: list[tuple[int, ...]]  # simple-coroot coordinates inside h
    identified_type: tuple[SimpleType, ...] | None = None
    simple_root_map: tuple[tuple[tuple[int, ...], ...], ...] | None = None
    # simple_root_map[f] lists the simple coroots of factor f as E8
    # coroot-lattice vectors, in the factor's canonical node order.

    @property
    def dim(self) -> int:
        return len(self.basis)


def centralizer(generators: list[AlgebraElement]) -> Subalgebra:
    """The common kernel of ad(g) over all generators, bracket closure verified."""
    if not generators:
        raise LieError("need at least one generator")
    alg = generators[0].algebra
    rows: list[dict[int, int]] = []
    for g in generators:
        rows.extend(ad_rows(g))
    kernel = nullspace(rows, DIM)
    basis = [
        AlgebraElement(alg, {i: Fraction(v) for i, v in enumerate(vec) if v})
        for vec in kernel
    ]
    sub = Subalgebra(alg, basis, _cartan_intersection(alg, kernel))
    _check_bracket_closed(sub, kernel)
    return sub


def _cartan_intersection(alg: ChevalleyAlgebra, kernel) -> list[tuple[int, ...]]:
    """Basis of (span of kernel) intersected with the fixed Cartan subalgebra."""
    constraints: dict[int, dict[int, int]] = {}
    for k, vec in enumerate(kernel):
        for j in range(2 * N_POS):
            if vec[j]:
                constraints.setdefault(j, {})[k] = vec[j]
    rows = [constraints[j] for j in sorted(constraints)]
    combos = nullspace(rows, len(kernel))
    out = []
    for combo in combos:
        h = [0] * RANK
        for c, vec in zip(combo, kernel):
            if c:
                for i in range(RANK):
                    h[i] += c * vec[2 * N_POS + i]
        g = 0
        for v in h:
            g = _gcd(g, abs(v))
        if g > 1:
            h = [v // g for v in h]
        out.append(tuple(h))
    return sorted(out)


def _reduce_against(ech, pivot_of, vec: dict[int, Fraction]) -> dict[int, Fraction]:
    """Residual of a sparse rational vector modulo echelonized integer rows."""
    vec = dict(vec)
    for col in sorted(pivot_of):
        v = vec.get(col)
        if not v:
            continue
        row = pivot_of[col]
        factor = v / row[col]
        for j, rv in row.items():
            nv = vec.get(j, Fraction(0)) - factor * rv
            if nv:
                vec[j] = nv
            else:
                vec.pop(j, None)
    return vec


def _check_bracket_closed(sub: Subalgebra, kernel) -> None:
    rows = [{j: v for j, v in enumerate(vec) if v} for vec in kernel]
    ech, pivots = eliminate(rows, DIM)
    if len(pivots) != len(kernel):
        raise EngineConsistencyError("kernel basis is not independent")
    pivot_of = {c: ech[i] for i, c in enumerate(pivots)}
    for i in range(len(sub.basis)):
        for j in range(i + 1, len(sub.basis)):
            z = bracket(sub.basis[i], sub.basis[j])
            if z.is_zero():
                continue
            if _reduce_against(ech, pivot_of, z.coeffs):
                raise EngineConsistencyError("centralizer is not bracket closed")


# -- type identification -----------------------------------------------


class _Restriction:
    """Weight decomposition of a subalgebra under its Cartan intersection."""

    def __init__(self, sub: Subalgebra):
        alg = sub.algebra
        rs = alg.root_system
        self.sub = sub
        self.t_basis = sub.cartan_part
        r = len(self.t_basis)
        self.r = r
        if r == 0:
            raise IdentifyError("subalgebra has trivial Cartan intersection")

        groups: dict[tuple, list[int]] = {}
        for idx in range(2 * N_POS):
            wc = alg.root_weights[idx]
            key = tuple(
                sum(wc[i] * t[i] for i in range(RANK)) for t in self.t_basis
            )
            groups.setdefault(key, []).append(idx)
        self.groups = groups

        basis_rows = []
        for el in sub.basis:
            den = 1
            for v in el.coeffs.values():
                den = den * v.denominator // _gcd(den, v.denominator)
            basis_rows.append({k: int(v * den) for k, v in el.coeffs.items()})

        zero_key = tuple(0 for _ in range(r))
        phi_list = []
        dim_check = r
        for key, idxs in sorted(groups.items()):
            cols = set(idxs)
            proj = [
                {j: v for j, v in row.items() if j in cols} for row in basis_rows
            ]
            proj = [p for p in proj if p]
            d = rank(proj, DIM) if proj else 0
            if key == zero_key:
                if d:
                    raise IdentifyError(
                        "Cartan intersection is not a Cartan subalgebra here"
                    )
                continue
            if d > 1:
                raise IdentifyError("root multiplicity above one; not reductive here")
            if d == 1:
                phi_list.append(key)
                dim_check += 1
        if dim_check != sub.dim:
            raise IdentifyError(
                f"weight decomposition ({dim_check}) misses dimension {sub.dim}"
            )
        self.phi_list = phi_list

        self.gram = [
            [rs.coroot_form(self.t_basis[i], self.t_basis[j]) for j in range(r)]
            for i in range(r)
        ]
        self.gram_inv = fraction_matrix_inverse(self.gram)

    def phi_form(self, u, v) -> Fraction:
        r = self.r
        return sum(
            Fraction(u[i]) * self.gram_inv[i][j] * v[j]
            for i in range(r)
            for j in range(r)
        )

    def coroot(self, phi) -> tuple[int, ...]:
        return _coroot_vector(
            self.sub.algebra.root_system, self.t_basis, self.gram, phi, self.phi_form
        )

    def coroot_system(self) -> set[tuple[int, ...]]:
        return {self.coroot(phi) for phi in self.phi_list}


def identify_type(sub: Subalgebra) -> Subalgebra:
    """Fill in identified_type and simple_root_map of a reductive subalgebra.

    The subalgebra roots are the nonzero restrictions of the 240 ambient
    roots to the subalgebra's Cartan (which must lie inside the fixed Cartan
    of E8); simple roots are selected by indecomposability under the
    deterministic lex positivity, and each indecomposable component is
    matched against the catalog of simple types, rank-2 BC systems
    canonically labeled C2.
    """
    data = _Restriction(sub)
    r = data.r

    positive = [phi for phi in data.phi_list if _lex_positive(phi)]
    pos_set = set(positive)
    simple = []
    for phi in positive:
        if not any(
            tuple(phi[i] - psi[i] for i in range(r)) in pos_set for psi in positive
        ):
            simple.append(phi)
    simple.sort()

    cartan_matrix = []
    for a in simple:
        row = []
        for b in simple:
            val = 2 * data.phi_form(a, b) / data.phi_form(a, a)
            if val.denominator != 1:
                raise IdentifyError("non-integral Cartan pairing")
            row.append(int(val))
        cartan_matrix.append(row)

    components = _connected_components(cartan_matrix)
    factors = []
    for comp in components:
        sub_cartan = [[cartan_matrix[i][j] for j in comp] for i in comp]
        t, perm = _match_simple_type(sub_cartan)
        ordered = [simple[comp[perm[k]]] for k in range(len(comp))]
        coroots = tuple(data.coroot(phi) for phi in ordered)
        factors.append((t, coroots))
    factors.sort(key=lambda f: (f[0], f[1]))

    sub.identified_type = tuple(f[0] for f in factors)
    sub.simple_root_map = tuple(f[1] for f in factors)
    claimed = sum(t.dimension for t in sub.identified_type) + (
        r - sum(t.rank for t in sub.identified_type)
    )
    if claimed != sub.dim:
        raise IdentifyError(
            f"identified type {sub.identified_type} has wrong dimension"
        )
    return sub


def coroot_system(sub: Subalgebra) -> set[tuple[int, ...]]:
    """All coroots of a subalgebra as E8 coroot-lattice vectors."""
    return _Restriction(sub).coroot_system()


def verify_coroot_base(
    sub: Subalgebra, table: list[tuple[int, ...]], expected: SimpleType
) -> bool:
    """Certify a claimed simple-coroot table against a computed subalgebra.

    Checks, at the lattice level: every table entry is a coroot of the
    subalgebra, the table's Cartan matrix equals the expected type's in the
    given node order, and every subalgebra coroot is an integer combination
    of the table with signs all nonnegative or all nonpositive (base
    property).
    """
    rs = sub.algebra.root_system
    system = coroot_system(sub)
    for v in table:
        if tuple(v) not in system:
            return False
    target = build_root_system(expected).cartan
    n = len(table)
    for i in range(n):
        for j in range(n):
            val = 2 * rs.coroot_form(table[i], table[j]) / rs.coroot_form(
                table[j], table[j]
            )
            if val != target[i][j]:
                return False
    rows = [
        {j: int(v) for j, v in enumerate(tab) if v} for tab in zip(*table)
    ]
    for cor in system:
        x = solve(rows, list(cor), n)
        if x is None:
            return False
        if any(q.denominator != 1 for q in x):
            return False
        pos = [q for q in x if q > 0]
        neg = [q for q in x if q < 0]
        if pos and neg:
            return False
    return True


def _lex_positive(phi) -> bool:
    for v in phi:
        if v:
            return v > 0
    return False


def _coroot_vector(rs, t_basis, gram, phi, phi_form):
    """The coroot of a restriction functional as an E8 coroot-lattice vector."""
    r = len(t_basis)
    # solve gram * x = phi exactly, row denominators cleared
    dens = [_lcm_den(gram[i]) for i in range(r)]
    rows = [
        {j: int(gram[i][j] * dens[i]) for j in range(r) if gram[i][j]}
        for i in range(r)
    ]
    rhs = [int(Fraction(phi[i]) * dens[i]) for i in range(r)]
    x = solve(rows, rhs, r)
    if x is None:
        raise IdentifyError("functional not in the Cartan form image")
    u = [sum(Fraction(x[k]) * t_basis[k][i] for k in range(r)) for i in range(RANK)]
    norm = phi_form(phi, phi)
    vec = [2 * c / norm for c in u]
    out = []
    for c in vec:
        if c.denominator != 1:
            raise IdentifyError("coroot is not a lattice vector")
        out.append(int(c))
    return tuple(out)


def _lcm_den(row) -> int:
    den = 1
    for v in row:
        q = Fraction(v)
        den = den * q.denominator // _gcd(den, q.denominator)
    return den


def _connected_components(m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if not seen[j] and m[i][j]:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _match_simple_type(cartan: list[list[int]]) -> tuple[SimpleType, tuple[int, ...]]:
    """Match a connected Cartan matrix to a catalog type and node order.

    Returns the type and the permutation perm with cartan[perm[i]][perm[j]]
    equal to the catalog Cartan matrix entry (i, j).  Rank-2 BC systems are
    reported as C2.
    """
    n = len(cartan)
    candidates = []
    for fam in FAMILIES:
        try:
            t = SimpleType(fam, n)
        except LieError:
            continue
        candidates.append(t)
    if n == 2:
        # B2 and C2 are the same root system; canonical label C2
        candidates = [t for t in candidates if t != SimpleType("B", 2)]
        candidates.sort(key=lambda t: (t.family != "C", t))
    for t in candidates:
        target = build_root_system(t).cartan
        perm = _find_permutation(cartan, target)
        if perm is not None:
            return t, perm
    raise IdentifyError(f"no simple type matches Cartan matrix {cartan}")


def _find_permutation(cartan, target):
    n = len(cartan)
    perm = [-1] * n
    used = [False] * n

    def place(i):
        if i == n:
            return True
        for c in range(n):
            if used[c]:
                continue
            ok = cartan[c][c] == target[i][i]
            if ok:
                for j in range(i):
                    if (
                        cartan[c][perm[j]] != target[i][j]
                        or cartan[perm[j]][c] != target[j][i]
                    ):
                        ok = False
                        break
            if ok:
                used[c] = True
                perm[i] = c
                if place(i + 1):
                    return True
                used[c] = False
                perm[i] = -1
        return False

    return tuple(perm) if place(0) else None


# --------------------------------------------------------------------------
# sl2 triples
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Sl2Triple:
    e: AlgebraElement
    h: AlgebraElement
    f: AlgebraElement

    def elements(self) -> list[AlgebraElement]:
        return [self.e, self.h, self.f]


def verify_triple(t: Sl2Triple) -> bool:
    alg = t.e.algebra
    two_e = t.e.scale(2)
    minus_two_f = t.f.scale(-2)
    return (
        bracket(t.h, t.e) == two_e
        and bracket(t.h, t.f) == minus_two_f
        and bracket(t.e, t.f) == t.h
    )


def _orthogonal_cascade(alg, h_coords, plus, within) -> Sl2Triple | None:
    """Try e = sum of x_gamma over pairwise orthogonal roots with sum h.

    Such an e gives f as the matching sum of opposite root vectors and
    [e, f] = h on the nose.  Preferring this sparse shape keeps the
    centralizer of the triple transverse to the fixed Cartan, which the
    type-identification step relies on.
    """
    candidates = []
    for i in plus:
        ok = True
        if within:
            xi = alg.x(alg.roots[i])
            yi = alg.x(tuple(-c for c in alg.roots[i]))
            for g in within:
                if not bracket(g, xi).is_zero() or not bracket(g, yi).is_zero():
                    ok = False
                    break
        if ok:
            candidates.append(alg.roots[i])
    if len(candidates) > 40:
        return None
    target = tuple(int(c) for c in h_coords)

    def orthogonal(g, c):
        idx = alg.root_index[g]
        return sum(alg.root_weights[idx][t] * c[t] for t in range(RANK)) == 0

    def search(start: int, remaining, chosen):
        if not any(remaining):
            return list(chosen)
        if start >= len(candidates) or len(chosen) >= RANK:
            return None
        for k in range(start, len(candidates)):
            g = candidates[k]
            if all(orthogonal(g, c) for c in chosen):
                rest = tuple(remaining[t] - g[t] for t in range(RANK))
                found = search(k + 1, rest, chosen + [g])
                if found is not None:
                    return found
        return None

    roots_found = search(0, target, [])
    if not roots_found:
        return None
    e = alg.zero()
    f = alg.zero()
    for g in roots_found:
        e = e + alg.x(g)
        f = f + alg.x(tuple(-c for c in g))
    t = Sl2Triple(e, alg.h(target), f)
    if verify_triple(t) and _commutes_with_all(t, within):
        return t
    return None


def sl2_triple_from_defining_vector(
    h_coords,
    alg: ChevalleyAlgebra | None = None,
    within: list[AlgebraElement] | None = None,
    seed: int = 0,
    attempts: int = 24,
) -> Sl2Triple:
    """Complete a semisimple h (simple-coroot coordinates) to an sl2 triple.

    Strategy: first look for e as a sum of root vectors over pairwise
    orthogonal roots whose coroots add up to h (deterministic and sparse);
    otherwise seek e in the +2 eigenspace of ad(h), intersected with the
    centralizer of ``within`` if given, by deterministic then seeded
    pseudo-random integer combinations, solving [e, f] = h exactly for f.
    Every candidate triple is verified by brackets.  Raises
    TripleNotFoundError if no completion exists after the attempt budget.
    """
    alg = alg or build_e8_chevalley()
    h_coords = tuple(int(c) for c in h_coords)
    if not any(h_coords):
        raise TripleNotFoundError("zero vector defines no sl2")
    h = alg.h(h_coords)

    weights = [
        sum(alg.root_weights[i][k] * h_coords[k] for k in range(RANK))
        for i in range(2 * N_POS)
    ]
    plus = [i for i in range(2 * N_POS) if weights[i] == 2]
    minus = [i for i in range(2 * N_POS) if weights[i] == -2]
    if not plus or not minus:
        raise TripleNotFoundError("ad(h) has no weight-2 vectors")

    cascade = _orthogonal_cascade(alg, h_coords, plus, within)
    if cascade is not None:
        return cascade

    constraint_rows: list[dict[int, int]] = []
    if within:
        for g in within:
            constraint_rows.extend(ad_rows(g))

    def restricted_kernel(cols: list[int]) -> list[tuple[int, ...]]:
        if not constraint_rows:
            return [tuple(1 if c == j else 0 for j in cols) for c in cols]
        colset = set(cols)
        proj = []
        for row in constraint_rows:
            sub = {cols.index(j): v for j, v in row.items() if j in colset}
            if sub:
                proj.append(sub)
        return nullspace(proj, len(cols))

    plus_space = restricted_kernel(plus)
    minus_space = restricted_kernel(minus)
    if not plus_space or not minus_space:
        raise TripleNotFoundError("constrained eigenspaces are trivial")

    rng = random.Random(seed)
    for attempt in range(attempts):
        if attempt == 0:
            combo = [1] * len(plus_space)
        else:
            combo = [rng.randint(-3, 3) for _ in plus_space]
        e_coeffs: dict[int, Fraction] = {}
        for c, vec in zip(combo, plus_space):
            if c:
                for pos_k, v in enumerate(vec):
                    if v:
                        idx = plus[pos_k]
                        e_coeffs[idx] = e_coeffs.get(idx, Fraction(0)) + c * v
        e = AlgebraElement(alg, e_coeffs)
        if e.is_zero():
            continue
        f = _solve_for_f(alg, e, h, minus, minus_space)
        if f is None:
            continue
        t = Sl2Triple(e, h, f)
        if verify_triple(t) and _commutes_with_all(t, within):
            return t
    raise TripleNotFoundError(
        f"no sl2 completion found for defining vector {h_coords}"
    )


def _solve_for_f(alg, e, h, minus, minus_space):
    """Solve [e, f] = h for f in the span of minus_space over minus columns."""
    nvars = len(minus_space)
    cols: dict[int, dict[int, Fraction]] = {}
    for var, vec in enumerate(minus_space):
        fvec = AlgebraElement(
            alg,
            {
                minus[k]: Fraction(v)
                for k, v in enumerate(vec)
                if v
            },
        )
        br = bracket(e, fvec)
        for i, val in br.coeffs.items():
            cols.setdefault(i, {})[var] = val
    target = dict(h.coeffs)
    rows = []
    rhs = []
    for i in sorted(set(cols) | set(target)):
        row = cols.get(i, {})
        den = 1
        for v in row.values():
            den = den * v.denominator // _gcd(den, v.denominator)
        tv = target.get(i, Fraction(0))
        den = den * tv.denominator // _gcd(den, tv.denominator)
        rows.append({j: int(v * den) for j, v in row.items()})
        rhs.append(int(tv * den))
    x = solve(rows, rhs, nvars)
    if x is None:
        return None
    f_coeffs: dict[int, Fraction] = {}
    for var, vec in enumerate(minus_space):
        if x[var]:
            for k, v in enumerate(vec):
                if v:
                    idx = minus[k]
                    f_coeffs[idx] = f_coeffs.get(idx, Fraction(0)) + x[var] * v
    return AlgebraElement(alg, f_coeffs)


def _commutes_with_all(t: Sl2Triple, within) -> bool:
    if not within:
        return True
    for g in within:
        for el in t.elements():
            if not bracket(g, el).is_zero():
                return False
    return True


def commuting_pair(
    h1_coords, h2_coords, alg: ChevalleyAlgebra | None = None, seed: int = 0
) -> tuple[Sl2Triple, Sl2Triple]:
    """Two sl2 triples with the given defining vectors whose images commute."""
    alg = alg or build_e8_chevalley()
    t1 = sl2_triple_from_defining_vector(h1_coords, alg, seed=seed)
    t2 = sl2_triple_from_defining_vector(
        h2_coords, alg, within=t1.elements(), seed=seed
    )
    return t1, t2


def triple_from_orthogonal_roots(
    alg: ChevalleyAlgebra, roots: list[tuple[int, ...]]
) -> Sl2Triple:
    """The triple (sum x_gamma, sum gamma_check, sum x_-gamma) over given roots.

    The roots must be pairwise strongly orthogonal; the triple is verified by
    brackets before being returned.
    """
    e = alg.zero()
    f = alg.zero()
    h = [0] * RANK
    for g in roots:
        g = tuple(g)
        e = e + alg.x(g)
        f = f + alg.x(tuple(-c for c in g))
        for i in range(RANK):
            h[i] += g[i]
    t = Sl2Triple(e, alg.h(h), f)
    if not verify_triple(t):
        raise TripleNotFoundError(f"roots {roots} do not span a standard triple")
    return t


def root_triple(alg: ChevalleyAlgebra, root) -> Sl2Triple:
    """The sl2 triple through a single root vector."""
    return triple_from_orthogonal_roots(alg, [tuple(root)])
