import pytest

from surfcoh.confcoh import ConfSpaceModel, is_crossing, is_isotropic, relations
from surfcoh.sampling import (
    isotropic_samples,
    random_crossing,
    random_isotropic_in_h,
    rng_for,
    random_class,
)


def test_same_seed_same_stream():
    model = ConfSpaceModel(2, 3)
    a = [random_class(rng_for(5, "x", 2, 3), model) for _ in range(3)]
    b = [random_class(rng_for(5, "x", 2, 3), model) for _ in range(3)]
    assert a == b
    assert random_class(rng_for(6, "x", 2, 3), model) != a[0]


@pytest.mark.parametrize("g,n", [(2, 2), (2, 3), (3, 3)])
def test_crossings_are_crossing(g, n):
    model = ConfSpaceModel(g, n)
    rng = rng_for(0, "t", g, n)
    for _ in range(50):
        assert is_crossing(random_crossing(rng, model), model)


def test_crossing_needs_two_points():
    with pytest.raises(ValueError):
        random_crossing(rng_for(0), ConfSpaceModel(2, 1))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_isotropic_in_h(g):
    model = ConfSpaceModel(g, 1)
    rng = rng_for(1, "iso", g)
    for d in range(1, g + 1):
        basis = random_isotropic_in_h(rng, model, d)
        assert len(basis) == d
        for u in basis:
            for v in basis:
                assert model.space.pairing(u, v) == 0
    with pytest.raises(ValueError):
        random_isotropic_in_h(rng, model, g + 1)


@pytest.mark.parametrize("g,n", [(2, 2), (3, 3)])
def test_isotropic_samples_cover_both_kinds(g, n):
    model = ConfSpaceModel(g, n)
    pres = relations(model)
    samples = isotropic_samples(rng_for(2, "iso", g, n), model, 40)
    kinds = {k for k, _ in samples}
    assert "crossing-line" in kinds
    assert {f"block-dim{d}" for d in range(1, g + 1)} <= kinds
    for kind, s in samples:
        assert s.dim == (1 if kind == "crossing-line" else int(kind[-1]))
        assert is_isotropic(s, pres)
