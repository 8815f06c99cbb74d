"""Root systems of the simple types up to rank 8, with exact lattice arithmetic.

Conventions, fixed once and used everywhere:

* Lattice vectors (roots, coroot-lattice elements) are integer tuples in the
  simple-root respectively simple-coroot basis; weights are tuples of
  integers or Fractions in the fundamental-weight basis.
* The Weyl-invariant form is normalized so long roots have squared length 2;
  equivalently short coroots have squared length 2.
* ``cartan[i][j] = <alpha_j, alpha_i_check>``, so the weight coordinates of a
  root with simple-root coordinates ``a`` are ``cartan @ a``.
* Positive roots are ordered by height, then lexicographically on their
  coordinate tuples; golden renderings rely on this order.

Everything here is a pure function of immutable inputs; the lru caches only
memoize deterministic constructions and are safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import LieError
from .kernels import fraction_matrix_inverse

FAMILIES = "ABCDEFG"

_DIMENSIONS = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple type label such as A1, B6, E8.

    Ordering is lexicographic on (family, rank), which is the canonical
    A < B < C < D < E < F < G tie-break order used by type identification.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise LieError(f"unknown family {self.family!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 1,
            "C": n >= 1,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[self.family]
        if not ok:
            raise LieError(f"unsupported rank {n} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dimension(self) -> int:
        return _DIMENSIONS[self.family](self.rank)

    @staticmethod
    def parse(text: str) -> "SimpleType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in FAMILIES or not text[1:].isdigit():
            raise LieError(f"cannot parse simple type from {text!r}")
        return SimpleType(text[0].upper(), int(text[1:]))


# B1 and C1 are accepted as degenerate aliases (needed for odd spin groups of
# low rank); their single simple root is short resp. long, matching the
# orthogonal-coordinate construction of the higher-rank families.


def _gram(t: SimpleType) -> list[list[Fraction]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, long roots norm 2."""
    n = t.rank
    f = t.family
    G = [[Fraction(0)] * n for _ in range(n)]

    def chain(i, j, val=Fraction(-1)):
        G[i][j] = G[j][i] = val

    if f in "ADE":
        for i in range(n):
            G[i][i] = Fraction(2)
        if f == "A":
            for i in range(n - 1):
                chain(i, i + 1)
        elif f == "D":
            for i in range(n - 3):
                chain(i, i + 1)
            chain(n - 3, n - 2)
            chain(n - 3, n - 1)
        else:  # E6, E7, E8 in Bourbaki numbering: chain 1-3-4-...-n, node 2 on 4
            edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
            for i, j in edges:
                chain(i, j)
    elif f == "B":
        for i in range(n):
            G[i][i] = Fraction(2)
        G[n - 1][n - 1] = Fraction(1)
        for i in range(n - 1):
            chain(i, i + 1)
    elif f == "C":
        for i in range(n):
            G[i][i] = Fraction(1)
        G[n - 1][n - 1] = Fraction(2)
        for i in range(n - 1):
            chain(i, i + 1, Fraction(-1, 2))
        if n >= 2:
            chain(n - 2, n - 1, Fraction(-1))
    elif f == "F":
        diag = [2, 2, 1, 1]
        for i in range(4):
            G[i][i] = Fraction(diag[i])
        chain(0, 1)
        chain(1, 2)
        chain(2, 3, Fraction(-1, 2))
    elif f == "G":
        G[0][0] = Fraction(2, 3)
        G[1][1] = Fraction(2)
        chain(0, 1)
    return G


class RootSystem:
    """An irreducible root system with exact lattice data.

    Immutable after construction; obtain instances through
    :func:`build_root_system`, which caches them.
    """

    def __init__(self, t: SimpleType):
        self.type = t
        self.rank = t.rank
        self.gram = tuple(tuple(r) for r in _gram(t))
        # d_i = (alpha_i, alpha_i)/2; cartan[i][j] = (alpha_i, alpha_j)/d_i.
        self.symmetrizer = tuple(Fraction(self.gram[i][i], 2) for i in range(t.rank))
        cartan = []
        for i in range(t.rank):
            d = self.symmetrizer[i]
            row = tuple(int(self.gram[i][j] / d) for j in range(t.rank))
            cartan.append(row)
        self.cartan = tuple(cartan)
        self.simple_roots = tuple(
            tuple(1 if j == i else 0 for j in range(t.rank)) for i in range(t.rank)
        )
        self.positive_roots = self._generate_positive()
        self._root_set = set(self.positive_roots) | {
            tuple(-c for c in r) for r in self.positive_roots
        }
        self.fundamental_weights = fraction_matrix_inverse(self.cartan)
        # column i of cartan^{-1} = root coordinates of omega_i
        self.dual_coxeter = self._dual_coxeter()

    # -- construction ----------------------------------------------------

    def _generate_positive(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            new = []
            for a in frontier:
                wc = self.weight_coords(a)
                for i in range(n):
                    # q = how far the alpha_i string extends backwards from a
                    q = 0
                    back = list(a)
                    while True:
                        back[i] -= 1
                        if tuple(back) in roots:
                            q += 1
                        else:
                            break
                    if q - wc[i] >= 1:
                        up = list(a)
                        up[i] += 1
                        cand = tuple(up)
                        if cand not in roots:
                            roots.add(cand)
                            new.append(cand)
            frontier = new
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def _dual_coxeter(self) -> int:
        total = Fraction(1) + sum(self.coroot(self.highest_root))
        if total.denominator != 1:
            raise LieError("dual Coxeter number did not come out integral")
        return int(total)

    # -- queries ---------------------------------------------------------

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def is_root(self, v: tuple[int, ...]) -> bool:
        return v in self._root_set

    def all_roots(self) -> list[tuple[int, ...]]:
        neg = [tuple(-c for c in r) for r in self.positive_roots]
        return list(self.positive_roots) + neg

    def weight_coords(self, root_coords) -> tuple:
        """Fundamental-weight coordinates of a vector given in root coordinates."""
        return tuple(
            sum(self.cartan[i][j] * root_coords[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def root_coords(self, weight_coords) -> tuple:
        """Simple-root coordinates of a vector given in weight coordinates."""
        inv = self.fundamental_weights
        return tuple(
            sum(inv[i][j] * Fraction(weight_coords[j]) for j in range(self.rank))
            for i in range(self.rank)
        )

    def form(self, a, b) -> Fraction:
        """Invariant form of two vectors in root coordinates."""
        return sum(
            Fraction(a[i]) * self.gram[i][j] * Fraction(b[j])
            for i in range(self.rank)
            for j in range(self.rank)
            if a[i] and b[j]
        ) or Fraction(0)

    def coroot_form(self, a, b) -> Fraction:
        """Invariant form of two coroot-lattice elements in simple-coroot coordinates."""
        # (alpha_i_check, alpha_j_check) = cartan[i][j] / d_j
        return sum(
            Fraction(a[i]) * Fraction(self.cartan[i][j], 1) / self.symmetrizer[j] * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if a[i] and b[j]
        ) or Fraction(0)

    def coroot(self, root: tuple[int, ...]) -> tuple[Fraction, ...]:
        """Simple-coroot coordinates of the coroot of a root."""
        norm = self.form(root, root)
        return tuple(
            Fraction(root[i]) * self.symmetrizer[i] * 2 / norm for i in range(self.rank)
        )

    def eval_root_on_coroot(self, root, h) -> Fraction:
        """<root, h> for h in simple-coroot coordinates."""
        wc = self.weight_coords(root)
        total = Fraction(0)
        for i in range(self.rank):
            if h[i] and wc[i]:
                total += Fraction(wc[i]) * h[i]
        return total

    # -- Weyl group ------------------------------------------------------

    def reflect_weight(self, i: int, w: tuple) -> tuple:
        """Simple reflection s_i acting on fundamental-weight coordinates."""
        wi = w[i]
        if not wi:
            return tuple(w)
        return tuple(w[j] - wi * self.cartan[j][i] for j in range(self.rank))

    def dominate(self, w: tuple) -> tuple:
        """The dominant Weyl chamber representative of a weight."""
        w = tuple(w)
        while True:
            for i in range(self.rank):
                if w[i] < 0:
                    w = self.reflect_weight(i, w)
                    break
            else:
                return w

    def weyl_orbit(self, w: tuple) -> set:
        orbit = {tuple(w)}
        frontier = [tuple(w)]
        while frontier:
            new = []
            for v in frontier:
                for i in range(self.rank):
                    u = self.reflect_weight(i, v)
                    if u not in orbit:
                        orbit.add(u)
                        new.append(u)
            frontier = new
        return orbit

    # -- rendering -------------------------------------------------------

    def render_roots(self) -> str:
        """One positive root per line, coordinates space-separated."""
        return "\n".join(" ".join(str(c) for c in r) for r in self.positive_roots)


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Construct (and cache) the root system of a simple type."""
    return RootSystem(t)


def pairing(w, h, rs: RootSystem) -> Fraction:
    """<w, h> for w in fundamental-weight coordinates, h in simple-coroot coordinates."""
    if len(w) != rs.rank or len(h) != rs.rank:
        raise LieError("rank mismatch in pairing")
    return sum(Fraction(w[i]) * h[i] for i in range(rs.rank) if w[i] and h[i]) or Fraction(0)


def longest_element_action(t: SimpleType) -> tuple[int, ...]:
    """The permutation sigma with -w0(omega_i) = omega_sigma(i), 0-indexed.

    Computed by descending -omega_i to the dominant chamber; the result is an
    involution, and it is the identity exactly when -1 lies in the Weyl group.
    """
    rs = build_root_system(t)
    sigma = []
    for i in range(rs.rank):
        w = tuple(-1 if j == i else 0 for j in range(rs.rank))
        dom = rs.dominate(w)
        if sum(dom) != 1 or any(c not in (0, 1) for c in dom):
            raise LieError("dominant image of -omega_i is not a fundamental weight")
        sigma.append(dom.index(1))
    return tuple(sigma)


def minus_one_in_weyl_simple(t: SimpleType) -> bool:
    return longest_element_action(t) == tuple(range(t.rank))


# --------------------------------------------------------------------------
# Irreducible representations: labels, dimensions, weight systems
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IrrepLabel:
    """A dominant integral highest weight over a product of simple types.

    ``algebra`` is a tuple of SimpleType factors and ``weight`` a matching
    tuple of fundamental-coordinate tuples.  Single types are wrapped via
    :func:`irrep`.
    """

    algebra: tuple[SimpleType, ...]
    weight: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.algebra) != len(self.weight):
            raise LieError("one weight tuple per algebra factor required")
        for t, w in zip(self.algebra, self.weight):
            if len(w) != t.rank:
                raise LieError(f"weight length does not match rank of {t}")
            if any(c < 0 for c in w):
                raise LieError(f"weight {w} is not dominant")

    @property
    def dimension(self) -> int:
        return weyl_dimension(self)

    def __str__(self) -> str:
        parts = [f"{t}:{','.join(str(c) for c in w)}" for t, w in zip(self.algebra, self.weight)]
        return "[" + " x ".join(parts) + "]"


def irrep(algebra, weight) -> IrrepLabel:
    """Build an IrrepLabel from a single type or a tuple of types."""
    if isinstance(algebra, SimpleType):
        return IrrepLabel((algebra,), (tuple(weight),))
    return IrrepLabel(tuple(algebra), tuple(tuple(w) for w in weight))


def _weyl_dimension_simple(t: SimpleType, weight: tuple[int, ...]) -> int:
    rs = build_root_system(t)
    num = Fraction(1)
    den = Fraction(1)
    for alpha in rs.positive_roots:
        cor = rs.coroot(alpha)
        pair_rho = sum(cor)  # <rho, alpha_check> since rho = (1,..,1)
        pair_lam = sum(Fraction(weight[i]) * cor[i] for i in range(rs.rank))
        num *= pair_lam + pair_rho
        den *= pair_rho
    dim = num / den
    if dim.denominator != 1:
        raise LieError("Weyl dimension did not come out integral")
    return int(dim)


def weyl_dimension(label: IrrepLabel) -> int:
    """Dimension of an irreducible representation by the Weyl product formula."""
    total = 1
    for t, w in zip(label.algebra, label.weight):
        total *= _weyl_dimension_simple(t, tuple(w))
    return total


def _dominants_below(rs: RootSystem, lam: tuple) -> list[tuple]:
    """All dominant weights mu with lam - mu a nonnegative root-lattice element.

    Enumerated over the exact coefficient box c_j <= (lam, omega_j)/d_j, which
    bounds every admissible difference lam - mu = sum c_j alpha_j.
    """
    n = rs.rank
    lam_rc = rs.root_coords(lam)
    bounds = []
    for j in range(n):
        cap = sum(
            Fraction(lam_rc[i]) * rs.gram[i][k] * rs.fundamental_weights[k][j]
            for i in range(n)
            for k in range(n)
        ) / rs.symmetrizer[j]
        bounds.append(int(cap))
    cols = [tuple(rs.cartan[i][j] for i in range(n)) for j in range(n)]
    out = []
    c = [0] * n
    mu = list(lam)
    height = 0
    while True:
        if all(x >= 0 for x in mu):
            out.append((height, tuple(mu)))
        for j in range(n):
            if c[j] < bounds[j]:
                c[j] += 1
                height += 1
                for i in range(n):
                    mu[i] -= cols[j][i]
                break
            height -= c[j]
            for i in range(n):
                mu[i] += c[j] * cols[j][i]
            c[j] = 0
        else:
            break
    out.sort()
    return [m for _, m in out]


@lru_cache(maxsize=None)
def _weight_system_simple(t: SimpleType, weight: tuple[int, ...]) -> tuple:
    """Weight multiplicities of the irrep of a simple type (Freudenthal).

    Returns a tuple of ((weight coords), multiplicity) pairs sorted by weight,
    covering the full Weyl-orbit closure, multiplicities exact.
    """
    rs = build_root_system(t)
    n = rs.rank
    lam = tuple(weight)
    if any(c < 0 for c in lam):
        raise LieError(f"{weight} is not dominant")

    pos_weightcoords = [rs.weight_coords(a) for a in rs.positive_roots]
    dominants = _dominants_below(rs, lam)
    dominant_set = set(dominants)

    rho = tuple(1 for _ in range(n))

    def norm_shift(mu):
        v = tuple(mu[i] + rho[i] for i in range(n))
        rc = rs.root_coords(v)
        return rs.form(rc, rc)

    lam_norm = norm_shift(lam)
    mult: dict[tuple, Fraction] = {lam: Fraction(1)}

    for mu in dominants:
        if mu == lam:
            continue
        acc = Fraction(0)
        for alpha, awc in zip(rs.positive_roots, pos_weightcoords):
            k = 1
            while True:
                nu = tuple(mu[i] + k * awc[i] for i in range(n))
                nud = rs.dominate(nu)
                if nud not in dominant_set:
                    break
                m = mult.get(nud, Fraction(0))
                if m:
                    nu_rc = rs.root_coords(nu)
                    acc += m * rs.form(nu_rc, alpha)
                k += 1
        denom = lam_norm - norm_shift(mu)
        if denom == 0:
            raise LieError("Freudenthal denominator vanished")
        mult[mu] = 2 * acc / denom

    out: dict[tuple, int] = {}
    for mu, m in mult.items():
        if m.denominator != 1:
            raise LieError("non-integral weight multiplicity")
        mi = int(m)
        if mi <= 0:
            continue
        for w in rs.weyl_orbit(mu):
            out[w] = mi
    return tuple(sorted(out.items()))


def weight_system(label: IrrepLabel) -> dict[tuple, int]:
    """Weights with multiplicity, keyed by the concatenated fundamental coordinates."""
    systems = [
        _weight_system_simple(t, tuple(w)) for t, w in zip(label.algebra, label.weight)
    ]
    out = {(): 1}
    for sys in systems:
        nxt = {}
        for prefix, m in out.items():
            for w, k in sys:
                nxt[prefix + w] = m * k
        out = nxt
    return out


# --------------------------------------------------------------------------
# Representation multisets
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RepMultiset:
    """A finite multiset of irreducible labels over one product type."""

    algebra: tuple[SimpleType, ...]
    entries: tuple[tuple[IrrepLabel, int], ...]

    @staticmethod
    def from_dict(algebra, d: dict[IrrepLabel, int]) -> "RepMultiset":
        algebra = (algebra,) if isinstance(algebra, SimpleType) else tuple(algebra)
        for label, m in d.items():
            if label.algebra != algebra:
                raise LieError("mixed algebras in representation multiset")
            if m < 1:
                raise LieError("multiplicities must be positive")
        items = tuple(sorted(d.items(), key=lambda kv: kv[0].weight))
        return RepMultiset(algebra, items)

    def as_dict(self) -> dict[IrrepLabel, int]:
        return dict(self.entries)

    @property
    def dimension(self) -> int:
        return sum(label.dimension * m for label, m in self.entries)

    def __str__(self) -> str:
        return " + ".join(
            (f"{m}*{label}" if m > 1 else str(label)) for label, m in self.entries
        )
