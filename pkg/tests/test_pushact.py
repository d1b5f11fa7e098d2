import pytest
from hypothesis import given, strategies as st

from surfcoh.exactla import RationalMatrix, Subspace, kernel, unit_vector
from surfcoh.pushact import (
    PuncturedH1,
    PushGenerator,
    c_dual_functional,
    contragredient,
    dual_invariants,
    fixes_puncture_loops,
    moves_functional,
    push_action,
    push_generators,
    quotient_action_trivial,
)

GRID = [(g, n) for g in (2, 3, 4) for n in (1, 2, 3, 4)]


def fixed_functionals_oracle(space):
    """f is fixed by (A^-1)^T exactly when f A = f, i.e. (A^T - I) f = 0."""
    rows = []
    eye = RationalMatrix.identity(space.dim)
    for gen in push_generators(space):
        rows.extend((push_action(gen, space).transpose() - eye).rows())
    return kernel(RationalMatrix(rows, ncols=space.dim))


def test_push_examples():
    space = PuncturedH1(2, 2)
    b1, c1, c2 = space.basis_vector("b1"), space.c(1), space.c(2)
    # Push(b) with <b, c> = 1: take b = a1, c = b1
    a = push_action(PushGenerator(1, "a1"), space)
    assert a.apply(b1) == tuple(x + y for x, y in zip(b1, c1))
    assert push_action(PushGenerator(1, "c2"), space) == RationalMatrix.identity(space.dim)
    assert push_action(PushGenerator(2, "a1"), space).apply(b1) == tuple(x + y for x, y in zip(b1, c2))


def test_puncture_classes_sum_to_zero():
    space = PuncturedH1(3, 4)
    total = [sum(col) for col in zip(*(space.c(i) for i in range(1, 5)))]
    assert not any(total)


def test_bad_generators():
    space = PuncturedH1(2, 2)
    for gen in [PushGenerator(3, "a1"), PushGenerator(1, "c1"), PushGenerator(1, "a3"), PushGenerator(1, "z1")]:
        with pytest.raises(ValueError):
            gen.validate(space)
    with pytest.raises(ValueError):
        PuncturedH1(2, 0)


@pytest.mark.parametrize("g,n", GRID)
def test_dual_invariants(g, n):
    space = PuncturedH1(g, n)
    inv = dual_invariants(space)
    assert inv.dim == 2 * g
    assert inv == space.closed_functionals()
    assert inv == fixed_functionals_oracle(space)


@pytest.mark.parametrize("g,n", GRID)
def test_quotient_action_trivial(g, n):
    space = PuncturedH1(g, n)
    assert quotient_action_trivial(space)
    assert fixes_puncture_loops(space)


@pytest.mark.parametrize("g,n", [(2, 2), (3, 4)])
def test_direct_check_on_every_functional(g, n):
    space = PuncturedH1(g, n)
    for gen in push_generators(space):
        a = push_action(gen, space)
        for m in range(space.dim):
            f = unit_vector(space.dim, m)
            for i in range(1, n + 1):
                ci = space.c(i)
                assert sum(x * y for x, y in zip(f, a.apply(ci))) == sum(x * y for x, y in zip(f, ci))


def test_c_dual_functional_is_moved():
    space = PuncturedH1(2, 3)
    f = c_dual_functional(space, 1)
    gen = moves_functional(f, space)
    assert gen is not None
    assert contragredient(push_action(gen, space)).apply(f) != f
    with pytest.raises(ValueError):
        c_dual_functional(space, 3)


@given(st.sampled_from(GRID), st.data())
def test_contragredient_preserves_evaluation(gn, data):
    space = PuncturedH1(*gn)
    gens = push_generators(space)
    gen = gens[data.draw(st.integers(0, len(gens) - 1))]
    f = data.draw(st.lists(st.integers(-3, 3), min_size=space.dim, max_size=space.dim))
    v = data.draw(st.lists(st.integers(-3, 3), min_size=space.dim, max_size=space.dim))
    a = push_action(gen, space)
    lhs = sum(x * y for x, y in zip(contragredient(a).apply(f), a.apply(v)))
    assert lhs == sum(x * y for x, y in zip(f, v))
