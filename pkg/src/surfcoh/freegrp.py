"""Free group words and their classes in the 2-step nilpotent quotient.

A class in F_h / [[F_h, F_h], F_h] is stored as (abelianization, commutator
part).  The commutator part is the antisymmetrized degree-2 Magnus
coefficient, which gives the product rule

    (h1, c1) * (h2, c2) = (h1 + h2, c1 + c2 + 1/2 h1 ^ h2)

and makes the class of [u, v] = u v u^-1 v^-1 equal to (0, h(u) ^ h(v)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .surface import SymplecticSpace, WedgeTwo, mod_omega

Letter = tuple  # (generator index 1..h, exponent +1 or -1)


def _pairs(rank: int) -> tuple:
    return tuple(combinations(range(rank), 2))


def reduce(letters: Iterable[Sequence[int]], rank: int) -> "FreeWord":
    """Freely reduce a raw sequence of (generator, +-1) letters."""
    stack: list[Letter] = []
    for gen, e in letters:
        if not 1 <= gen <= rank:
            raise ValueError(f"generator index {gen} outside 1..{rank}")
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e}")
        if stack and stack[-1] == (gen, -e):
            stack.pop()
        else:
            stack.append((gen, e))
    return FreeWord(rank, tuple(stack))


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple = ()

    def __post_init__(self):
        for (g1, e1), (g2, e2) in zip(self.letters, self.letters[1:]):
            if g1 == g2 and e1 == -e2:
                raise ValueError("word is not freely reduced; build it with reduce()")

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, i: int, rank: int) -> "FreeWord":
        return reduce([(i, 1)], rank)

    @classmethod
    def from_ints(cls, rank: int, *syllables: int) -> "FreeWord":
        """Build a word from signed generator indices: ``from_ints(2, 1, -2)`` is x1 x2^-1."""
        letters = []
        for s in syllables:
            if s == 0:
                raise ValueError("0 is not a generator")
            letters.append((abs(s), 1 if s > 0 else -1))
        return reduce(letters, rank)

    def _same(self, other: "FreeWord") -> None:
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._same(other)
        return reduce(self.letters + other.letters, self.rank)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        out = FreeWord.identity(self.rank)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """[u, v] = u v u^-1 v^-1."""
    u._same(v)
    return reduce(u.letters + v.letters + u.inverse().letters + v.inverse().letters, u.rank)


def abelianize(w: FreeWord) -> tuple[int, ...]:
    h = [0] * w.rank
    for g, e in w.letters:
        h[g - 1] += e
    return tuple(h)


def abelian_wedge(h1: Sequence, h2: Sequence) -> tuple:
    """h1 ^ h2 over the basis x_s ^ x_t, s < t."""
    return tuple(Fraction(h1[s] * h2[t] - h1[t] * h2[s]) for s, t in _pairs(len(h1)))


@dataclass(frozen=True)
class NilClass2:
    rank: int
    abelian: tuple
    commutator: tuple

    @classmethod
    def identity(cls, rank: int) -> "NilClass2":
        return cls(rank, (0,) * rank, (Fraction(0),) * len(_pairs(rank)))

    def __mul__(self, other: "NilClass2") -> "NilClass2":
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        beta = abelian_wedge(self.abelian, other.abelian)
        return NilClass2(
            self.rank,
            tuple(a + b for a, b in zip(self.abelian, other.abelian)),
            tuple(c1 + c2 + b / 2 for c1, c2, b in zip(self.commutator, other.commutator, beta)),
        )

    def inverse(self) -> "NilClass2":
        return NilClass2(self.rank, tuple(-a for a in self.abelian), tuple(-c for c in self.commutator))

    def is_identity(self) -> bool:
        return not any(self.abelian) and not any(self.commutator)

    def commutator_dict(self) -> dict:
        """Nonzero commutator coordinates keyed by 1-based (s, t)."""
        return {(s + 1, t + 1): c for (s, t), c in zip(_pairs(self.rank), self.commutator) if c}


def nil2_class(w: FreeWord) -> NilClass2:
    """Class of w in the 2-step nilpotent quotient, via the Magnus expansion.

    x_i maps to 1 + X_i and x_i^-1 to 1 - X_i + X_i^2.  Only the linear part
    and the antisymmetric part of the quadratic part are tracked; the X_i^2
    terms are symmetric and drop out.
    """
    h = w.rank
    lin = [0] * h
    quad = [[0] * h for _ in range(h)]
    for g, e in w.letters:
        i = g - 1
        # (1 + L + Q)(1 + e X_i + ...) = 1 + (L + e X_i) + (Q + e L X_i + ...)
        for s in range(h):
            if lin[s]:
                quad[s][i] += lin[s] * e
        lin[i] += e
    comm = tuple(Fraction(quad[s][t] - quad[t][s], 2) for s, t in _pairs(h))
    return NilClass2(h, tuple(lin), comm)


def fh_obstruction(images: Sequence[FreeWord]) -> bool:
    """True iff [phi(a1), phi(a2)] survives in F_h^1 / F_h^2.

    ``images`` are the words assigned to a1 and a2 (a mapping with keys
    "a1", "a2" is accepted too).
    """
    if isinstance(images, dict):
        u, v = images["a1"], images["a2"]
    else:
        u, v = images
    if u.rank < 2:
        raise ValueError("the obstruction needs a free group of rank at least 2")
    return any(nil2_class(commutator(u, v)).commutator)


# -- surface groups -------------------------------------------------------
#
# A word in the generators a_1..a_g, b_1..b_g of pi_1(S_g) is a free word of
# rank 2g with x_k = a_k and x_{g+k} = b_k, matching the basis order of
# SymplecticSpace.

def surface_relator(genus: int) -> FreeWord:
    """[a_1, b_1] ... [a_g, b_g] as a word of rank 2g."""
    rank = 2 * genus
    out = FreeWord.identity(rank)
    for k in range(1, genus + 1):
        out = out * commutator(FreeWord.generator(k, rank), FreeWord.generator(genus + k, rank))
    return out


def surface_commutator_class(w: FreeWord, space: SymplecticSpace) -> WedgeTwo:
    """Class of a word with trivial abelianization in pi^1 / pi^2.

    This is its commutator part read in the second exterior power of H and
    reduced modulo omega.
    """
    if w.rank != space.dim:
        raise ValueError(f"word of rank {w.rank} in a surface group of rank {space.dim}")
    c = nil2_class(w)
    if any(c.abelian):
        raise ValueError("word does not lie in the commutator subgroup")
    return mod_omega(WedgeTwo(space, c.commutator))
