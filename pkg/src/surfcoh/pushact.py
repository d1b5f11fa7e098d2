"""Point-pushing action on the first homology of the punctured surface.

H_1(S_{g,n}; Q) has basis a_1..a_g, b_1..b_g, c_1..c_{n-1}, where c_i is a
small loop around the i-th puncture and c_n = -(c_1 + ... + c_{n-1}).
Pushing point i along a loop whose class is d acts by

    c -> c + <d, c> c_i

with the peripheral classes c_j pairing to zero against everything.
Functionals on H_1 (elements of H^1) are coordinate vectors in the dual
basis, and a matrix A acts on them contragrediently, by (A^-1)^T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import RationalMatrix, Subspace, Vector, fixed_subspace, unit_vector
from .surface import SymplecticSpace


@dataclass(frozen=True)
class PuncturedH1:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be positive, got {self.genus}")
        if self.punctures < 1:
            raise ValueError(f"need at least one puncture, got {self.punctures}")

    @property
    def space(self) -> SymplecticSpace:
        return SymplecticSpace(self.genus)

    @property
    def dim(self) -> int:
        return 2 * self.genus + self.punctures - 1

    def labels(self) -> list[str]:
        return list(self.space.labels) + [f"c{j}" for j in range(1, self.punctures)]

    def c(self, i: int) -> Vector:
        """Class of the loop around puncture i (1-based)."""
        n = self.punctures
        if not 1 <= i <= n:
            raise ValueError(f"puncture index {i} outside 1..{n}")
        base = 2 * self.genus
        if i < n:
            return unit_vector(self.dim, base + i - 1)
        v = [Fraction(0)] * self.dim
        for j in range(n - 1):
            v[base + j] = Fraction(-1)
        return tuple(v)

    def basis_vector(self, label: str) -> Vector:
        if label.startswith("c"):
            return self.c(int(label[1:]))
        return unit_vector(self.dim, self.space.index(label))

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        """Intersection pairing; the c_j lie in its radical."""
        g2 = 2 * self.genus
        return self.space.pairing(x[:g2], y[:g2])

    def c_span(self) -> Subspace:
        return Subspace.span([self.c(i) for i in range(1, self.punctures + 1)], self.dim)

    def closed_functionals(self) -> Subspace:
        """Functionals vanishing on every c_i: the image of H^1(S_g)."""
        return self.c_span().annihilator()


@dataclass(frozen=True)
class PushGenerator:
    point: int
    direction: str  # "a<k>", "b<k>" or "c<j>" with j != point

    def validate(self, space: PuncturedH1) -> None:
        if not 1 <= self.point <= space.punctures:
            raise ValueError(f"pushed point {self.point} outside 1..{space.punctures}")
        kind, num = self.direction[:1], self.direction[1:]
        if kind not in ("a", "b", "c") or not num.isdigit():
            raise ValueError(f"malformed push direction {self.direction!r}")
        k = int(num)
        if kind == "c":
            if not 1 <= k <= space.punctures or k == self.point:
                raise ValueError(f"cannot push point {self.point} around c{k}")
        elif not 1 <= k <= space.genus:
            raise ValueError(f"handle index {k} outside 1..{space.genus}")


def push_generators(space: PuncturedH1) -> list[PushGenerator]:
    out = []
    for i in range(1, space.punctures + 1):
        for label in space.space.labels:
            out.append(PushGenerator(i, label))
        for j in range(1, space.punctures + 1):
            if j != i:
                out.append(PushGenerator(i, f"c{j}"))
    return out


def push_action(gen: PushGenerator, space: PuncturedH1) -> RationalMatrix:
    """Matrix of c -> c + <d, c> c_i on H_1(S_{g,n})."""
    gen.validate(space)
    d = space.basis_vector(gen.direction)
    ci = space.c(gen.point)
    # row functional c -> <d, c>
    row = [space.pairing(d, unit_vector(space.dim, m)) for m in range(space.dim)]
    entries = {(m, m): 1 for m in range(space.dim)}
    for r, cr in enumerate(ci):
        if not cr:
            continue
        for m, x in enumerate(row):
            if x:
                entries[(r, m)] = entries.get((r, m), 0) + cr * x
    return RationalMatrix.from_entries(space.dim, space.dim, entries)


def contragredient(a: RationalMatrix) -> RationalMatrix:
    return a.inverse().transpose()


def dual_invariants(space: PuncturedH1, generators: Sequence[PushGenerator] | None = None) -> Subspace:
    """Functionals fixed by every push generator."""
    gens = push_generators(space) if generators is None else list(generators)
    ops = [contragredient(push_action(g, space)) for g in gens]
    return fixed_subspace(ops, space.dim)


def quotient_action_trivial(space: PuncturedH1) -> bool:
    """Whether every push acts trivially on H^1(S_{g,n}) / H^1(S_g).

    For each generator and each dual basis functional f this checks that
    f - g.f vanishes on all the c_i.
    """
    closed = space.closed_functionals()
    for gen in push_generators(space):
        dual = contragredient(push_action(gen, space))
        for m in range(space.dim):
            f = unit_vector(space.dim, m)
            moved = dual.apply(f)
            if not closed.contains(tuple(a - b for a, b in zip(f, moved))):
                return False
    return True


def fixes_puncture_loops(space: PuncturedH1) -> bool:
    """Direct form: f(g(c_i)) = f(c_i) for all functionals, i.e. g(c_i) = c_i."""
    for gen in push_generators(space):
        a = push_action(gen, space)
        for i in range(1, space.punctures + 1):
            ci = space.c(i)
            if a.apply(ci) != ci:
                return False
    return True


def moves_functional(f: Sequence, space: PuncturedH1) -> PushGenerator | None:
    """First push generator whose dual action moves f, if any."""
    for gen in push_generators(space):
        if contragredient(push_action(gen, space)).apply(f) != tuple(f):
            return gen
    return None


def c_dual_functional(space: PuncturedH1, j: int) -> Vector:
    """The dual basis functional of c_j (1 <= j < n)."""
    if not 1 <= j < space.punctures:
        raise ValueError(f"c{j} is not a basis element")
    return unit_vector(space.dim, 2 * space.genus + j - 1)

