"""Seeded samplers for the property checks.

Entries are drawn from -3..3.  Crossing elements get two or three nonzero
blocks.  Every sampler takes an explicit ``random.Random`` so a seed fixes
all inputs.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .confcoh import ConfSpaceModel
from .exactla import RationalMatrix, Subspace, Vector, kernel

LOW, HIGH = -3, 3


def rng_for(seed: int, *context) -> random.Random:
    """Independent stream per (seed, context); string seeding is stable across runs."""
    return random.Random(":".join(str(c) for c in (seed, *context)))


def random_vector(rng: random.Random, n: int) -> Vector:
    return tuple(Fraction(rng.randint(LOW, HIGH)) for _ in range(n))


def random_nonzero_vector(rng: random.Random, n: int) -> Vector:
    while True:
        v = random_vector(rng, n)
        if any(v):
            return v


def random_class(rng: random.Random, model: ConfSpaceModel) -> Vector:
    return random_vector(rng, model.dim)


def random_crossing(rng: random.Random, model: ConfSpaceModel) -> Vector:
    if model.points < 2:
        raise ValueError("crossing elements need at least two points")
    k = rng.choice([2, 3]) if model.points >= 3 else 2
    chosen = set(rng.sample(range(model.points), k))
    blocks = []
    for i in range(model.points):
        if i in chosen:
            blocks.append(random_nonzero_vector(rng, model.block_dim))
        else:
            blocks.append(model.space.zero())
    return model.from_blocks(blocks)


def random_isotropic_in_h(rng: random.Random, model: ConfSpaceModel, dim: int) -> list[Vector]:
    """Basis of a random isotropic subspace of H^1(S_g) of the given dimension."""
    space = model.space
    if not 1 <= dim <= space.genus:
        raise ValueError(f"isotropic subspaces of H^1(S_{space.genus}) have dimension 1..{space.genus}")
    basis: list[Vector] = []
    while len(basis) < dim:
        if basis:
            # vectors pairing to zero with everything chosen so far
            rows = [space.J.transpose().apply(w) for w in basis]
            perp = kernel(RationalMatrix(rows, ncols=space.dim)).vectors()
        else:
            perp = space.basis()
        coeffs = [rng.randint(LOW, HIGH) for _ in perp]
        v = tuple(sum((c * p[m] for c, p in zip(coeffs, perp)), Fraction(0)) for m in range(space.dim))
        if any(v) and not (basis and Subspace.span(basis, space.dim).contains(v)):
            basis.append(v)
    return basis


def random_block_isotropic(rng: random.Random, model: ConfSpaceModel, dim: int) -> Subspace:
    block = rng.randint(1, model.points)
    vecs = [model.embed(v, block) for v in random_isotropic_in_h(rng, model, dim)]
    return Subspace.span(vecs, model.dim)


def isotropic_samples(rng: random.Random, model: ConfSpaceModel, count: int) -> list[tuple[str, Subspace]]:
    """Alternate crossing lines with within-block subspaces of dimension 1..g."""
    out = []
    dims = list(range(1, model.genus + 1))
    for k in range(count):
        if model.points >= 2 and k % 2 == 0:
            out.append(("crossing-line", Subspace.span([random_crossing(rng, model)], model.dim)))
        else:
            d = dims[(k // 2) % len(dims)]
            out.append((f"block-dim{d}", random_block_isotropic(rng, model, d)))
    return out
