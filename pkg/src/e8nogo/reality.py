"""Reality types of irreducible representations of compact semisimple groups.

An irreducible is Complex when it is not isomorphic to its conjugate dual
(conjugation acts on highest weights as minus the longest Weyl element);
otherwise it is Real or Quaternionic according to the parity of the pairing
of the highest weight with the sum of the positive coroots.  The parity rule
is validated against a brute-force tensor-square oracle in the test suite
before anything downstream trusts it.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import LieError
from .roots import (
    IrrepLabel,
    RepMultiset,
    SimpleType,
    build_root_system,
    longest_element_action,
    weight_system,
)


class RealityType(Enum):
    REAL = "Real"
    QUATERNIONIC = "Quaternionic"
    COMPLEX = "Complex"

    def __str__(self) -> str:
        return self.value

    @property
    def self_conjugate(self) -> bool:
        return self is not RealityType.COMPLEX


def dual_weight(label: IrrepLabel) -> IrrepLabel:
    """The highest weight of the dual representation, factor by factor."""
    weights = []
    for t, w in zip(label.algebra, label.weight):
        sigma = longest_element_action(t)
        weights.append(tuple(w[sigma[i]] for i in range(t.rank)))
    return IrrepLabel(label.algebra, tuple(weights))


@lru_cache(maxsize=None)
def _coroot_sum(t: SimpleType) -> tuple[Fraction, ...]:
    rs = build_root_system(t)
    total = [Fraction(0)] * t.rank
    for alpha in rs.positive_roots:
        for i, c in enumerate(rs.coroot(alpha)):
            total[i] += c
    return tuple(total)


def frobenius_schur(label: IrrepLabel) -> RealityType:
    """Reality type of an irreducible of the compact form."""
    if dual_weight(label) != label:
        return RealityType.COMPLEX
    parity = 0
    for t, w in zip(label.algebra, label.weight):
        total = sum(Fraction(w[i]) * c for i, c in enumerate(_coroot_sum(t)))
        if total.denominator != 1:
            raise LieError("coroot pairing of a self-dual weight must be integral")
        parity += int(total)
    return RealityType.REAL if parity % 2 == 0 else RealityType.QUATERNIONIC


def self_conjugate(rep: RepMultiset) -> bool:
    """Whether a multiset is invariant under conjugate duality."""
    d = rep.as_dict()
    for label, mult in d.items():
        if d.get(dual_weight(label), 0) != mult:
            return False
    return True


def minus_one_in_weyl(algebra) -> bool:
    """Whether -1 lies in the Weyl group of every factor."""
    factors = (algebra,) if isinstance(algebra, SimpleType) else tuple(algebra)
    return all(
        longest_element_action(t) == tuple(range(t.rank)) for t in factors
    )


class CenterElement:
    """Adjoint parity grading induced by a coroot-lattice element.

    A root space sits in the -1 eigenspace exactly when the root pairs oddly
    with the element.
    """

    def __init__(self, coords):
        self.coords = tuple(int(c) for c in coords)
        if len(self.coords) != 8:
            raise LieError("center parities are taken in the rank-8 Cartan")

    def root_parity(self, root_weight_coords) -> int:
        return sum(
            root_weight_coords[i] * self.coords[i] for i in range(8)
        ) % 2


def eigenspace_dims(c: CenterElement) -> tuple[int, int]:
    """(plus, minus) eigenspace dimensions of the induced involution on E8."""
    from .chevalley import build_e8_chevalley

    alg = build_e8_chevalley()
    minus = sum(
        1 for idx in range(240) if c.root_parity(alg.root_weights[idx]) == 1
    )
    return 248 - minus, minus


# --------------------------------------------------------------------------
# Brute-force oracle used to validate the parity rule
# --------------------------------------------------------------------------


def tensor_square_indicator(label: IrrepLabel) -> RealityType:
    """Reality type read off the symmetric/alternating square decomposition.

    For a self-dual irreducible exactly one of the two squares contains the
    trivial module; this is independent of the parity formula and serves as
    its oracle.
    """
    from .decomp import peel_product

    if dual_weight(label) != label:
        return RealityType.COMPLEX
    ws = sorted(weight_system(label).items())
    flat = []
    for w, m in ws:
        flat.extend([w] * m)
    ranks = [t.rank for t in label.algebra]
    sym: dict = {}
    alt: dict = {}
    for i in range(len(flat)):
        for j in range(i, len(flat)):
            w = _split_key(
                tuple(flat[i][k] + flat[j][k] for k in range(len(flat[i]))), ranks
            )
            sym[w] = sym.get(w, 0) + 1
            if i < j:
                alt[w] = alt.get(w, 0) + 1
    trivial = IrrepLabel(
        label.algebra, tuple(tuple(0 for _ in range(r)) for r in ranks)
    )
    sym_mult = peel_product(label.algebra, sym).as_dict().get(trivial, 0)
    alt_mult = peel_product(label.algebra, alt).as_dict().get(trivial, 0)
    if sym_mult + alt_mult != 1:
        raise LieError("self-dual irreducible must carry exactly one invariant form")
    return RealityType.REAL if sym_mult else RealityType.QUATERNIONIC


def _split_key(flat, ranks):
    out = []
    pos = 0
    for r in ranks:
        out.append(tuple(flat[pos : pos + r]))
        pos += r
    return tuple(out)
