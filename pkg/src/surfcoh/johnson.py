"""Target and image of the Johnson homomorphism, over Q.

Third exterior power of H maps into Hom(H, second exterior power / omega) by

    (x ^ y ^ z)(c) = <x,c> y^z + <y,c> z^x + <z,c> x^y   (mod omega)

and H sits inside the image as h -> contract(h ^ omega).  A Hom element is a
(2g) x (C(2g,2) - 1) matrix whose row m holds the quotient coordinates of
the value at the m-th basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, lcm
from typing import Sequence

from .exactla import RationalMatrix, Subspace, Vector, kernel, solve, vector
from .surface import (
    SymplecticSpace,
    WedgeThree,
    WedgeTwo,
    act_on_wedge2,
    from_omega_quotient_coords,
    mod_omega,
    omega_quotient_coords,
    wedge3,
    wedge_vector_two,
)


@dataclass(frozen=True)
class HomSpaceElement:
    space: SymplecticSpace
    matrix: RationalMatrix

    def __call__(self, c: Sequence) -> WedgeTwo:
        """Value at c, as the canonical representative modulo omega."""
        if len(c) != self.space.dim:
            raise ValueError(f"vector of length {len(c)} in a space of dimension {self.space.dim}")
        coords = self.matrix.transpose().apply(vector(c))
        return from_omega_quotient_coords(self.space, coords)

    def flatten(self) -> Vector:
        return tuple(x for row in self.matrix.rows() for x in row)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __add__(self, other: "HomSpaceElement") -> "HomSpaceElement":
        return HomSpaceElement(self.space, self.matrix + other.matrix)

    def __neg__(self) -> "HomSpaceElement":
        return HomSpaceElement(self.space, -self.matrix)


def hom_dim(space: SymplecticSpace) -> int:
    return space.dim * (len(space.pairs) - 1)


def _contract_triple(space: SymplecticSpace, s: int, t: int, u: int, c: Sequence) -> WedgeTwo:
    es = [0] * space.dim
    et = [0] * space.dim
    eu = [0] * space.dim
    es[s] = et[t] = eu[u] = 1
    out = WedgeTwo.zero(space)
    ps = space.pairing(es, c)
    pt = space.pairing(et, c)
    pu = space.pairing(eu, c)
    if ps:
        out = out + WedgeTwo.basis(space, t, u) * ps
    if pt:
        out = out + WedgeTwo.basis(space, u, s) * pt
    if pu:
        out = out + WedgeTwo.basis(space, s, t) * pu
    return out


def contract(xi: WedgeThree) -> HomSpaceElement:
    space = xi.space
    rows = []
    for m, c in enumerate(space.basis()):
        value = WedgeTwo.zero(space)
        for (s, t, u), coef in xi.terms():
            value = value + _contract_triple(space, s, t, u, c) * coef
        rows.append(omega_quotient_coords(value))
    return HomSpaceElement(space, RationalMatrix(rows, ncols=len(space.pairs) - 1))


def embed_H(h: Sequence, space: SymplecticSpace) -> HomSpaceElement:
    """contract(h ^ omega): the copy of H that is divided out."""
    return contract(wedge_vector_two(h, space.omega))


@dataclass(frozen=True)
class JohnsonImage:
    genus: int
    image: Subspace  # span of contract(third exterior power), flattened
    h_copy: Subspace  # span of embed_H(H), flattened
    contract_kernel_dim: int

    @property
    def quotient_dim(self) -> int:
        return self.image.dim - self.h_copy.dim

    @property
    def h_inside_image(self) -> bool:
        return self.h_copy.is_subspace_of(self.image)


@lru_cache(maxsize=8)
def contract_basis(genus: int) -> tuple:
    space = SymplecticSpace(genus)
    return tuple(contract(WedgeThree.basis(space, k)) for k in range(len(space.triples)))


@lru_cache(maxsize=8)
def johnson_image(genus: int) -> JohnsonImage:
    space = SymplecticSpace(genus)
    n = hom_dim(space)
    images = [phi.flatten() for phi in contract_basis(genus)]
    h_copy = [embed_H(h, space).flatten() for h in space.basis()]
    span_map = RationalMatrix.from_columns(images, n)
    return JohnsonImage(
        genus,
        Subspace.span(images, n),
        Subspace.span(h_copy, n),
        kernel(span_map).dim,
    )


def expected_quotient_dim(genus: int) -> int:
    return comb(2 * genus, 3) - 2 * genus


def _evaluation_matrix(target_vector: Sequence, genus: int) -> RationalMatrix:
    """Columns: quotient coordinates of contract(basis triple)(target_vector)."""
    cols = []
    for phi in contract_basis(genus):
        cols.append(omega_quotient_coords(phi(target_vector)))
    return RationalMatrix.from_columns(cols, len(SymplecticSpace(genus).pairs) - 1)


def tau_witness(target_vector: Sequence, target_value: WedgeTwo, genus: int) -> WedgeThree | None:
    """Some xi in the third exterior power with contract(xi)(target_vector) = target_value mod omega."""
    space = SymplecticSpace(genus)
    if target_value.space != space:
        raise ValueError("target value lives in a different symplectic space")
    sol = solve(_evaluation_matrix(target_vector, genus), omega_quotient_coords(target_value))
    if sol is None:
        return None
    return WedgeThree(space, sol)


def tau_hits(target_vector: Sequence, target_value: WedgeTwo, genus: int) -> bool:
    """Whether an element of the image takes target_vector to target_value.

    Elements of the image are defined up to the H copy, but that copy lies
    inside the span of contract(third exterior power), so solvability over
    the whole span decides the question.
    """
    return tau_witness(target_vector, target_value, genus) is not None


def clear_denominators(xi: WedgeThree) -> tuple[WedgeThree, int]:
    """(N * xi, N) with N the least common denominator of xi's coordinates."""
    n = lcm(*(c.denominator for c in xi.coords)) if xi.coords else 1
    return xi * n, n


def describe_wedge3(xi: WedgeThree) -> str:
    labels = xi.space.labels
    terms = [f"{c}*{labels[s]}^{labels[t]}^{labels[u]}" for (s, t, u), c in xi.terms()]
    return " + ".join(terms) if terms else "0"


def is_equivariant(m: RationalMatrix, x: Sequence, y: Sequence, z: Sequence, space: SymplecticSpace) -> bool:
    """contract(Mx^My^Mz)(c) == M.(contract(x^y^z)(M^-1 c)) for every basis c.

    M must be symplectic so that it fixes omega.
    """
    lhs = contract(wedge3(m.apply(x), m.apply(y), m.apply(z), space))
    rhs = contract(wedge3(x, y, z, space))
    inv = m.inverse()
    for c in space.basis():
        left = lhs(c)
        right = mod_omega(act_on_wedge2(m, rhs(inv.apply(c))))
        if left != right:
            return False
    return True
