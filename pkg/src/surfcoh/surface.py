"""The symplectic space H = H^1(S_g; Q) and its exterior powers.

Basis order is a_1..a_g, b_1..b_g, with <a_k, b_k> = 1.  Wedge powers use
the basis of strictly increasing index tuples in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .exactla import RationalMatrix, Vector, unit_vector, vector, zero_vector


def _check_len(v: Sequence, n: int) -> None:
    if len(v) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(v)}")


class SymplecticSpace:
    """H^1 of a closed genus-g surface with its intersection pairing."""

    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError(f"genus must be positive, got {genus}")
        self.genus = genus
        self.dim = 2 * genus

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticSpace) and other.genus == self.genus

    def __hash__(self) -> int:
        return hash(("SymplecticSpace", self.genus))

    def __repr__(self) -> str:
        return f"SymplecticSpace(genus={self.genus})"

    @cached_property
    def labels(self) -> tuple[str, ...]:
        g = self.genus
        return tuple(f"a{k}" for k in range(1, g + 1)) + tuple(f"b{k}" for k in range(1, g + 1))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def a(self, k: int) -> Vector:
        if not 1 <= k <= self.genus:
            raise ValueError(f"handle index {k} out of range 1..{self.genus}")
        return unit_vector(self.dim, k - 1)

    def b(self, k: int) -> Vector:
        if not 1 <= k <= self.genus:
            raise ValueError(f"handle index {k} out of range 1..{self.genus}")
        return unit_vector(self.dim, self.genus + k - 1)

    def basis_vector(self, label: str) -> Vector:
        return unit_vector(self.dim, self.index(label))

    def zero(self) -> Vector:
        return zero_vector(self.dim)

    def basis(self) -> list[Vector]:
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    @cached_property
    def J(self) -> RationalMatrix:
        g = self.genus
        entries = {}
        for k in range(g):
            entries[(k, g + k)] = 1
            entries[(g + k, k)] = -1
        return RationalMatrix.from_entries(self.dim, self.dim, entries)

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        _check_len(x, self.dim)
        _check_len(y, self.dim)
        g = self.genus
        s = Fraction(0)
        for k in range(g):
            s += x[k] * y[g + k] - x[g + k] * y[k]
        return s

    # -- exterior powers -------------------------------------------------

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(combinations(range(self.dim), 2))

    @cached_property
    def triples(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(combinations(range(self.dim), 3))

    @cached_property
    def pair_index(self) -> dict:
        return {p: i for i, p in enumerate(self.pairs)}

    @cached_property
    def triple_index(self) -> dict:
        return {t: i for i, t in enumerate(self.triples)}

    @cached_property
    def omega(self) -> "WedgeTwo":
        return sum_wedges(wedge2(self.a(k), self.b(k), self) for k in range(1, self.genus + 1))

    def symplectic_pair_indices(self) -> list[int]:
        """Coordinates of the a_k ^ b_k basis elements in WedgeTwo."""
        g = self.genus
        return [self.pair_index[(k, g + k)] for k in range(g)]


@dataclass(frozen=True)
class WedgeTwo:
    """An element of the second exterior power, coordinates over e_s ^ e_t, s < t."""

    space: SymplecticSpace
    coords: tuple

    def __post_init__(self):
        _check_len(self.coords, len(self.space.pairs))

    @classmethod
    def zero(cls, space: SymplecticSpace) -> "WedgeTwo":
        return cls(space, zero_vector(len(space.pairs)))

    @classmethod
    def basis(cls, space: SymplecticSpace, s: int, t: int) -> "WedgeTwo":
        """e_s ^ e_t for any s != t (0-based basis indices), sign-adjusted."""
        if s == t:
            return cls.zero(space)
        sign = 1
        if s > t:
            s, t, sign = t, s, -1
        c = [Fraction(0)] * len(space.pairs)
        c[space.pair_index[(s, t)]] = Fraction(sign)
        return cls(space, tuple(c))

    def __getitem__(self, st) -> Fraction:
        s, t = st
        if s == t:
            return Fraction(0)
        if s > t:
            return -self.coords[self.space.pair_index[(t, s)]]
        return self.coords[self.space.pair_index[(s, t)]]

    def _same(self, other: "WedgeTwo") -> None:
        if other.space != self.space:
            raise ValueError("wedges from different symplectic spaces")

    def __add__(self, other: "WedgeTwo") -> "WedgeTwo":
        self._same(other)
        return WedgeTwo(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "WedgeTwo") -> "WedgeTwo":
        self._same(other)
        return WedgeTwo(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "WedgeTwo":
        return WedgeTwo(self.space, tuple(-a for a in self.coords))

    def __mul__(self, c) -> "WedgeTwo":
        c = Fraction(c)
        return WedgeTwo(self.space, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        labels = self.space.labels
        terms = [f"{c}*{labels[s]}^{labels[t]}" for (s, t), c in zip(self.space.pairs, self.coords) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class WedgeThree:
    space: SymplecticSpace
    coords: tuple

    def __post_init__(self):
        _check_len(self.coords, len(self.space.triples))

    @classmethod
    def zero(cls, space: SymplecticSpace) -> "WedgeThree":
        return cls(space, zero_vector(len(space.triples)))

    @classmethod
    def basis(cls, space: SymplecticSpace, index: int) -> "WedgeThree":
        return cls(space, unit_vector(len(space.triples), index))

    def __add__(self, other: "WedgeThree") -> "WedgeThree":
        return WedgeThree(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "WedgeThree":
        return WedgeThree(self.space, tuple(-a for a in self.coords))

    def __mul__(self, c) -> "WedgeThree":
        c = Fraction(c)
        return WedgeThree(self.space, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def terms(self):
        """Yield ((s, t, u), coefficient) for the nonzero coordinates."""
        for idx, c in zip(self.space.triples, self.coords):
            if c:
                yield idx, c


def sum_wedges(items):
    items = list(items)
    total = items[0]
    for w in items[1:]:
        total = total + w
    return total


def pairing(x: Sequence, y: Sequence, space: SymplecticSpace | None = None) -> Fraction:
    if space is None:
        if len(x) % 2:
            raise ValueError("odd-length vector has no symplectic pairing")
        space = SymplecticSpace(len(x) // 2)
    return space.pairing(x, y)


def wedge2(x: Sequence, y: Sequence, space: SymplecticSpace) -> WedgeTwo:
    _check_len(x, space.dim)
    _check_len(y, space.dim)
    x, y = vector(x), vector(y)
    return WedgeTwo(space, tuple(x[s] * y[t] - x[t] * y[s] for s, t in space.pairs))


def wedge3(x: Sequence, y: Sequence, z: Sequence, space: SymplecticSpace) -> WedgeThree:
    for v in (x, y, z):
        _check_len(v, space.dim)
    x, y, z = vector(x), vector(y), vector(z)
    coords = []
    for s, t, u in space.triples:
        # 3x3 minor on rows (s, t, u)
        coords.append(
            x[s] * (y[t] * z[u] - y[u] * z[t])
            - x[t] * (y[s] * z[u] - y[u] * z[s])
            + x[u] * (y[s] * z[t] - y[t] * z[s])
        )
    return WedgeThree(space, tuple(coords))


def wedge_vector_two(h: Sequence, w: WedgeTwo) -> WedgeThree:
    """h ^ w for h in H and w in the second exterior power."""
    space = w.space
    _check_len(h, space.dim)
    coords = []
    for s, t, u in space.triples:
        coords.append(h[s] * w[(t, u)] - h[t] * w[(s, u)] + h[u] * w[(s, t)])
    return WedgeThree(space, tuple(coords))


def omega(space: SymplecticSpace) -> WedgeTwo:
    return space.omega


def mod_omega(w: WedgeTwo) -> WedgeTwo:
    """Representative of w in the quotient by the line through omega.

    The representative is the one whose a_k ^ b_k coefficients sum to zero,
    i.e. w - (sigma(w)/g) * omega.
    """
    space = w.space
    sigma = sum((w.coords[i] for i in space.symplectic_pair_indices()), Fraction(0))
    if not sigma:
        return w
    return w - space.omega * (sigma / space.genus)


def omega_quotient_coords(w: WedgeTwo) -> Vector:
    """Coordinates of the class of w in the quotient, of length C(2g,2) - 1.

    The a_g ^ b_g coordinate of the representative is dropped; it is
    recovered as minus the sum of the other a_k ^ b_k coordinates.
    """
    rep = mod_omega(w)
    drop = rep.space.symplectic_pair_indices()[-1]
    return rep.coords[:drop] + rep.coords[drop + 1:]


def from_omega_quotient_coords(space: SymplecticSpace, coords: Sequence) -> WedgeTwo:
    n = len(space.pairs) - 1
    _check_len(coords, n)
    idx = space.symplectic_pair_indices()
    drop = idx[-1]
    full = list(vector(coords[:drop])) + [Fraction(0)] + list(vector(coords[drop:]))
    full[drop] = -sum((full[i] for i in idx[:-1]), Fraction(0))
    return WedgeTwo(space, tuple(full))


def transvection(v: Sequence, space: SymplecticSpace) -> RationalMatrix:
    """Matrix of x -> x + <x, v> v."""
    _check_len(v, space.dim)
    v = vector(v)
    jv = space.J.apply(v)  # <x, v> = x . (J v)
    entries = {}
    for i in range(space.dim):
        entries[(i, i)] = 1
    for i, vi in enumerate(v):
        if not vi:
            continue
        for j, wj in enumerate(jv):
            if wj:
                entries[(i, j)] = entries.get((i, j), 0) + vi * wj
    return RationalMatrix.from_entries(space.dim, space.dim, entries)


def transvection_vectors(space: SymplecticSpace) -> list[tuple[str, Vector]]:
    """Labelled directions a_k, b_k, a_k+b_k, a_k+a_{k+1}, b_k+b_{k+1}."""
    g = space.genus
    out = []
    for k in range(1, g + 1):
        out.append((f"a{k}", space.a(k)))
    for k in range(1, g + 1):
        out.append((f"b{k}", space.b(k)))
    for k in range(1, g + 1):
        out.append((f"a{k}+b{k}", tuple(x + y for x, y in zip(space.a(k), space.b(k)))))
    for k in range(1, g):
        out.append((f"a{k}+a{k + 1}", tuple(x + y for x, y in zip(space.a(k), space.a(k + 1)))))
    for k in range(1, g):
        out.append((f"b{k}+b{k + 1}", tuple(x + y for x, y in zip(space.b(k), space.b(k + 1)))))
    return out


def transvections(space: SymplecticSpace) -> list[RationalMatrix]:
    return [transvection(v, space) for _, v in transvection_vectors(space)]


def is_symplectic(m: RationalMatrix, space: SymplecticSpace) -> bool:
    return m.transpose() @ space.J @ m == space.J


def wedge2_matrix(m: RationalMatrix, space: SymplecticSpace) -> RationalMatrix:
    """The induced action of m on the second exterior power (2x2 minors)."""
    pairs = space.pairs
    rows = []
    for s, t in pairs:
        row = []
        for p, q in pairs:
            row.append(m[s, p] * m[t, q] - m[s, q] * m[t, p])
        rows.append(row)
    return RationalMatrix(rows, ncols=len(pairs))


def act_on_wedge2(m: RationalMatrix, w: WedgeTwo) -> WedgeTwo:
    return WedgeTwo(w.space, wedge2_matrix(m, w.space).apply(w.coords))

