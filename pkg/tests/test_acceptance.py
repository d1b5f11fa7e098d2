"""Acceptance gate.  Every criterion is checked exactly; conftest prints one
PASS/FAIL line per criterion at the end of the run."""

import subprocess
import sys
import time
from math import comb

import pytest

from surfcoh.confcoh import (
    ConfSpaceModel,
    annihilator,
    closed_form_image_rank,
    cover_genus,
    diagonal_subspace,
    find_moving_transvection,
    image_rank,
    is_isotropic,
    relations,
    sym_invariants,
)
from surfcoh.exactla import Subspace
from surfcoh.freegrp import FreeWord, commutator, nil2_class
from surfcoh.johnson import johnson_image, tau_hits
from surfcoh.pushact import (
    PuncturedH1,
    dual_invariants,
    fixes_puncture_loops,
    quotient_action_trivial,
)
from surfcoh.sampling import isotropic_samples, random_crossing, rng_for
from surfcoh.surface import SymplecticSpace, wedge2

from oracles import all_reduced_words, collector_class

RANK_GRID = [(g, n) for g in (2, 3) for n in (2, 3, 4)]
PUSH_GRID = [(g, n) for g in (2, 3, 4) for n in (1, 2, 3, 4)]
SMALL_GRID = [(g, n) for g in (2, 3) for n in (2, 3)]


def test_criterion_1_rank_identity():
    start = time.perf_counter()
    for g, n in RANK_GRID:
        assert image_rank(ConfSpaceModel(g, n)) == comb(n, 2) * (2 * g) ** 2 + n - comb(n, 2)
    assert (closed_form_image_rank(2, 2), closed_form_image_rank(2, 3), closed_form_image_rank(3, 2)) == (17, 48, 37)
    assert time.perf_counter() - start < 120


@pytest.mark.parametrize("sign", ["minus", "plus"])
def test_criterion_2_relation_independence(sign):
    for g, n in RANK_GRID:
        assert relations(ConfSpaceModel(g, n), sign).relation_rank == comb(n, 2)


def test_criterion_3_crossing_lemma():
    start = time.perf_counter()
    for g, n in SMALL_GRID:
        model = ConfSpaceModel(g, n)
        pres = relations(model)
        rng = rng_for(0, "acceptance-crossing", g, n)
        for _ in range(200):
            x = random_crossing(rng, model)
            ann = annihilator(x, pres)
            assert ann.dim == 1
            assert ann == Subspace.span([x], model.dim)
    assert time.perf_counter() - start < 300


@pytest.mark.parametrize("g,n", PUSH_GRID)
def test_criterion_4_point_push_invariants(g, n):
    space = PuncturedH1(g, n)
    inv = dual_invariants(space)
    assert inv.dim == 2 * g
    assert inv == space.closed_functionals()


@pytest.mark.parametrize("g,n", PUSH_GRID)
def test_criterion_5_trivial_quotient_action(g, n):
    space = PuncturedH1(g, n)
    assert quotient_action_trivial(space)
    assert fixes_puncture_loops(space)


@pytest.mark.parametrize("g,n", [(g, n) for g in (2, 3) for n in (2, 3, 4)])
def test_criterion_6_diagonal_invariants(g, n):
    model = ConfSpaceModel(g, n)
    inv = sym_invariants(model)
    assert inv == diagonal_subspace(model)
    assert inv.dim == 2 * g


@pytest.mark.parametrize("g,n", SMALL_GRID)
def test_criterion_7_isotropic_movers(g, n):
    model = ConfSpaceModel(g, n)
    pres = relations(model)
    samples = isotropic_samples(rng_for(0, "acceptance-isotropic", g, n), model, 100)
    kinds = {kind for kind, _ in samples}
    assert kinds == {"crossing-line"} | {f"block-dim{d}" for d in range(1, g + 1)}
    for kind, s in samples:
        assert s.dim > 0 and is_isotropic(s, pres), kind
        assert find_moving_transvection(s, model) is not None, kind


@pytest.mark.parametrize("genus", [3, 4])
def test_criterion_8_johnson_solvability(genus):
    s = SymplecticSpace(genus)
    assert johnson_image(genus).quotient_dim == comb(2 * genus, 3) - 2 * genus
    assert tau_hits(s.b(1), wedge2(s.a(1), s.a(2), s), genus)


def test_criterion_8_johnson_solvability_genus_two():
    assert johnson_image(2).quotient_dim == 0


def test_criterion_9_fh_obstruction():
    x1, x2 = FreeWord.generator(1, 3), FreeWord.generator(2, 3)
    c = nil2_class(commutator(x1, x2))
    assert c.abelian == (0, 0, 0)
    assert c.commutator_dict() == {(1, 2): 1}
    words = list(all_reduced_words(3, 4))
    assert len(words) == 937
    for w in words:
        assert nil2_class(w) == collector_class(w), str(w)


def test_criterion_10_cover_genus():
    for g in range(2, 6):
        for n in range(1, 7):
            r = cover_genus(g, n)
            assert r == n * (g - 1) + 1
            assert (r > g) == (n > 1)
            assert (r == g) == (n == 1)


def test_criterion_11_harness_determinism():
    cmd = [sys.executable, "-m", "surfcoh", "verify", "--suite", "all", "--seed", "1", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.stdout and first.stdout == second.stdout
    assert first.returncode == second.returncode
