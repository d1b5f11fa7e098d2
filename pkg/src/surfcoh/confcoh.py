"""Cup products on H^1 of the ordered configuration space of n points on S_g.

H^1(PConf_n(S_g)) is modelled as n copies H_1, ..., H_n of H^1(S_g), so a
class is a vector of length 2gn split into n blocks of length 2g.

The degree-2 target is presented as

    Q^n  (+)  sum over i < j of H_i (x) H_j

modulo the span of the relations R_ij = p_i*[S_g] + p_j*[S_g] - M_ij, where
M_ij = sum_k a_k (x) b_k - b_k (x) a_k in the (i, j) slot.  Coordinates: the
first n entries are the p_i*[S_g]; slot (i, j) then holds (2g)^2 entries
indexed by (s, t) with s from H_i and t from H_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .exactla import (
    RationalMatrix,
    Subspace,
    Vector,
    fixed_subspace,
    is_invariant,
    kernel,
    rank,
    unit_vector,
    vector,
    zero_vector,
)
from .surface import SymplecticSpace, transvection_vectors, transvections

RELATION_SIGNS = ("minus", "plus")


@dataclass(frozen=True)
class ConfSpaceModel:
    genus: int
    points: int
    space: SymplecticSpace = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be at least 2, got {self.genus}")
        if self.points < 1:
            raise ValueError(f"need at least one point, got {self.points}")
        object.__setattr__(self, "space", SymplecticSpace(self.genus))

    @property
    def block_dim(self) -> int:
        return 2 * self.genus

    @property
    def dim(self) -> int:
        return 2 * self.genus * self.points

    def zero(self) -> Vector:
        return zero_vector(self.dim)

    def blocks(self, x: Sequence) -> list[Vector]:
        self.check(x)
        d = self.block_dim
        return [tuple(x[i * d:(i + 1) * d]) for i in range(self.points)]

    def from_blocks(self, blocks: Sequence[Sequence]) -> Vector:
        if len(blocks) != self.points:
            raise ValueError(f"expected {self.points} blocks, got {len(blocks)}")
        out = []
        for b in blocks:
            if len(b) != self.block_dim:
                raise ValueError(f"block of length {len(b)}, expected {self.block_dim}")
            out.extend(vector(b))
        return tuple(out)

    def embed(self, v: Sequence, i: int) -> Vector:
        """The class v placed in block i (1-based), zero elsewhere."""
        if not 1 <= i <= self.points:
            raise ValueError(f"block index {i} outside 1..{self.points}")
        blocks = [self.space.zero()] * self.points
        blocks[i - 1] = v
        return self.from_blocks(blocks)

    def diagonal(self, v: Sequence) -> Vector:
        return self.from_blocks([v] * self.points)

    def check(self, x: Sequence) -> None:
        if len(x) != self.dim:
            raise ValueError(f"class of length {len(x)} does not belong to {self}")


@dataclass(frozen=True)
class H2Class:
    """Canonical representative modulo the relations."""

    coords: tuple

    def is_zero(self) -> bool:
        return not any(self.coords)


class H2Presentation:
    """Ambient degree-2 space with its relation subspace, precomputed."""

    def __init__(self, model: ConfSpaceModel, sign: str = "minus"):
        if sign not in RELATION_SIGNS:
            raise ValueError(f"relation sign must be one of {RELATION_SIGNS}, got {sign!r}")
        self.model = model
        self.sign = sign
        n, d = model.points, model.block_dim
        self.slots = tuple(combinations(range(1, n + 1), 2))
        self._slot_offset = {slot: n + k * d * d for k, slot in enumerate(self.slots)}
        self.ambient_dim = n + len(self.slots) * d * d
        self.relation_vectors = tuple(self._relation(i, j) for i, j in self.slots)
        self.relations = Subspace.span(self.relation_vectors, self.ambient_dim)
        self.relation_rank = self.relations.dim

    def p_index(self, i: int) -> int:
        return i - 1

    def tensor_index(self, i: int, j: int, s: int, t: int) -> int:
        """Coordinate of e_s (x) e_t in slot (i, j), i < j, 0-based s, t."""
        return self._slot_offset[(i, j)] + s * self.model.block_dim + t

    def m_vector(self, i: int, j: int) -> Vector:
        g = self.model.genus
        v = [Fraction(0)] * self.ambient_dim
        for k in range(g):
            v[self.tensor_index(i, j, k, g + k)] += 1
            v[self.tensor_index(i, j, g + k, k)] -= 1
        return tuple(v)

    def _relation(self, i: int, j: int) -> Vector:
        m = self.m_vector(i, j)
        c = -1 if self.sign == "minus" else 1
        v = [c * x for x in m]
        v[self.p_index(i)] += 1
        v[self.p_index(j)] += 1
        return tuple(Fraction(x) for x in v)

    @property
    def relations_independent(self) -> bool:
        return self.relation_rank == len(self.slots)

    def reduce(self, v: Sequence) -> H2Class:
        return H2Class(self.relations.reduce(v))

    def describe(self, v: Sequence) -> str:
        labels = self.model.space.labels
        d = self.model.block_dim
        terms = []
        for idx, c in enumerate(v):
            if not c:
                continue
            if idx < self.model.points:
                terms.append(f"{c}*p{idx + 1}[S]")
                continue
            k, r = divmod(idx - self.model.points, d * d)
            i, j = self.slots[k]
            s, t = divmod(r, d)
            terms.append(f"{c}*{labels[s]}_{i}(x){labels[t]}_{j}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=64)
def relations(model: ConfSpaceModel, sign: str = "minus") -> H2Presentation:
    """Build all R_ij, i < j.  Check ``relations_independent`` on the result."""
    return H2Presentation(model, sign)


def _check_same_model(x: Sequence, pres: H2Presentation) -> None:
    if len(x) != pres.model.dim:
        raise ValueError(f"class of length {len(x)} does not belong to {pres.model}")


def cup_vector(x: Sequence, y: Sequence, pres: H2Presentation) -> Vector:
    """x cup y in the ambient coordinates, before reduction."""
    _check_same_model(x, pres)
    _check_same_model(y, pres)
    model = pres.model
    g, d = model.genus, model.block_dim
    out = [Fraction(0)] * pres.ambient_dim
    xs = [(divmod(m, d), c) for m, c in enumerate(x) if c]
    ys = [(divmod(m, d), c) for m, c in enumerate(y) if c]
    for (bi, s), cx in xs:
        for (bj, t), cy in ys:
            if bi == bj:
                # <e_s, e_t>: +1 for (a_k, b_k), -1 for (b_k, a_k)
                if t == s + g:
                    out[bi] += cx * cy
                elif s == t + g:
                    out[bi] -= cx * cy
            elif bi < bj:
                out[pres.tensor_index(bi + 1, bj + 1, s, t)] += cx * cy
            else:
                out[pres.tensor_index(bj + 1, bi + 1, t, s)] -= cx * cy
    return tuple(out)


def cup(x: Sequence, y: Sequence, pres: H2Presentation) -> H2Class:
    return pres.reduce(cup_vector(x, y, pres))


def image_rank(model: ConfSpaceModel, sign: str = "minus") -> int:
    """Dimension of the span of all cup products of degree-1 classes.

    Computed as the rank of the reduced products of basis pairs, so nothing
    about the relations is assumed beyond their construction.
    """
    pres = relations(model, sign)
    basis = [unit_vector(model.dim, m) for m in range(model.dim)]
    products = [cup(basis[u], basis[v], pres).coords for u, v in combinations(range(model.dim), 2)]
    return rank(RationalMatrix(products, ncols=pres.ambient_dim))


def closed_form_image_rank(genus: int, points: int) -> int:
    pairs = comb(points, 2)
    return pairs * (2 * genus) ** 2 + points - pairs


def is_crossing(x: Sequence, model: ConfSpaceModel) -> bool:
    return sum(1 for b in model.blocks(x) if any(b)) > 1


def cup_matrix(x: Sequence, pres: H2Presentation) -> RationalMatrix:
    """Matrix of y -> cup(x, y) into the reduced ambient coordinates."""
    model = pres.model
    cols = [cup(x, unit_vector(model.dim, m), pres).coords for m in range(model.dim)]
    return RationalMatrix.from_columns(cols, pres.ambient_dim)


def annihilator(x: Sequence, pres: H2Presentation) -> Subspace:
    """{y : cup(x, y) = 0}; the whole space when x = 0."""
    _check_same_model(x, pres)
    return kernel(cup_matrix(x, pres))


def block_permutation(model: ConfSpaceModel, perm: Sequence[int]) -> RationalMatrix:
    """Matrix sending block i to block perm[i] (0-based permutation)."""
    if sorted(perm) != list(range(model.points)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{model.points - 1}")
    d = model.block_dim
    entries = {}
    for i, pi in enumerate(perm):
        for s in range(d):
            entries[(pi * d + s, i * d + s)] = 1
    return RationalMatrix.from_entries(model.dim, model.dim, entries)


def adjacent_transpositions(model: ConfSpaceModel) -> list[RationalMatrix]:
    out = []
    for i in range(model.points - 1):
        perm = list(range(model.points))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        out.append(block_permutation(model, perm))
    return out


def diagonal_subspace(model: ConfSpaceModel) -> Subspace:
    return Subspace.span([model.diagonal(v) for v in model.space.basis()], model.dim)


def sym_invariants(model: ConfSpaceModel) -> Subspace:
    """Vectors fixed by every permutation of the blocks."""
    if model.points < 2:
        raise ValueError("the symmetric group action needs at least two points")
    return fixed_subspace(adjacent_transpositions(model))


def diagonal_action(m: RationalMatrix, model: ConfSpaceModel) -> RationalMatrix:
    """m acting on every block at once."""
    d = model.block_dim
    if m.shape != (d, d):
        raise ValueError(f"matrix of shape {m.shape} does not act on H^1(S_{model.genus})")
    entries = {}
    for (i, j), x in m.entries().items():
        for b in range(model.points):
            entries[(b * d + i, b * d + j)] = x
    return RationalMatrix.from_entries(model.dim, model.dim, entries)


@lru_cache(maxsize=64)
def _diagonal_transvections(model: ConfSpaceModel) -> tuple:
    return tuple(diagonal_action(t, model) for t in transvections(model.space))


def find_moving_transvection(s: Subspace, model: ConfSpaceModel) -> int | None:
    """Index (into ``transvections``) of the first one that moves s, else None."""
    if s.ambient_dim != model.dim:
        raise ValueError(f"subspace of Q^{s.ambient_dim} is not in H^1 of {model}")
    if s.dim == 0:
        raise ValueError("the zero subspace is fixed by everything")
    for k, t in enumerate(_diagonal_transvections(model)):
        if not is_invariant(s, t):
            return k
    return None


def transvection_label(model: ConfSpaceModel, index: int) -> str:
    return "T_" + transvection_vectors(model.space)[index][0]


def is_isotropic(s: Subspace, pres: H2Presentation) -> bool:
    basis = s.vectors()
    for u, v in combinations(basis, 2):
        if not cup(u, v, pres).is_zero():
            return False
    return True


def cover_genus(genus: int, sheets: int) -> int:
    """Genus r of a connected degree-``sheets`` cover: 2 - 2r = sheets (2 - 2g)."""
    if genus < 2:
        raise ValueError(f"genus must be at least 2, got {genus}")
    if sheets < 1:
        raise ValueError(f"number of sheets must be positive, got {sheets}")
    return sheets * (genus - 1) + 1
