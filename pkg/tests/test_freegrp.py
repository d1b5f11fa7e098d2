from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from surfcoh.freegrp import (
    FreeWord,
    abelianize,
    commutator,
    fh_obstruction,
    nil2_class,
    reduce,
    surface_commutator_class,
    surface_relator,
)
from surfcoh.surface import SymplecticSpace

from oracles import all_reduced_words, collector_class


def words(rank, max_len=20):
    letter = st.tuples(st.integers(1, rank), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: reduce(ls, rank))


x1, x2, x3 = (FreeWord.generator(i, 3) for i in (1, 2, 3))


def test_reduce_examples():
    assert reduce([(1, 1), (1, -1)], 2).is_identity()
    assert FreeWord.from_ints(2, 1, 2, -2, 1) == FreeWord.from_ints(2, 1, 1)
    assert str(x1 * x2 ** -1) == "x1x2^-1"


def test_bad_letters():
    with pytest.raises(ValueError):
        reduce([(3, 1)], 2)
    with pytest.raises(ValueError):
        reduce([(1, 2)], 2)
    with pytest.raises(ValueError):
        FreeWord(2, ((1, 1), (1, -1)))
    with pytest.raises(ValueError):
        x1 * FreeWord.generator(1, 2)


@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=20))
def test_reduce_is_idempotent_and_freely_reduced(raw):
    w = reduce(raw, 3)
    assert reduce(w.letters, 3) == w
    assert abelianize(w) == tuple(sum(e for g, e in raw if g == i) for i in (1, 2, 3))


@given(words(3))
def test_group_law(w):
    assert (w * w.inverse()).is_identity()
    assert (~w * w).is_identity()


def test_commutator_examples():
    assert commutator(x1, x1).is_identity()
    assert commutator(x1, x2) == FreeWord.from_ints(3, 1, 2, -1, -2)


@given(words(3), words(3))
def test_commutators_die_in_abelianization(u, v):
    assert abelianize(commutator(u, v)) == (0, 0, 0)


def test_nil2_examples():
    assert nil2_class(FreeWord.identity(3)).is_identity()
    c = nil2_class(commutator(x1, x2))
    assert c.abelian == (0, 0, 0)
    assert c.commutator_dict() == {(1, 2): 1}
    assert nil2_class(commutator(x1 * x2, x2)) == c


def test_nil2_matches_collector_on_all_short_words():
    count = 0
    for w in all_reduced_words(3, 4):
        assert nil2_class(w) == collector_class(w), str(w)
        count += 1
    # 1 + 6 + 6*5 + 6*25 + 6*125
    assert count == 937


@given(words(3), words(3))
def test_nil2_is_a_homomorphism(u, v):
    assert nil2_class(u * v) == nil2_class(u) * nil2_class(v)
    assert nil2_class(u.inverse()) == nil2_class(u).inverse()


@given(words(3, 8))
def test_nil2_matches_collector_on_longer_words(w):
    assert nil2_class(w) == collector_class(w)


@given(words(3, 8), words(3, 8))
def test_commutator_class_is_wedge_of_abelianizations(u, v):
    c = nil2_class(commutator(u, v))
    hu, hv = abelianize(u), abelianize(v)
    assert c.abelian == (0, 0, 0)
    assert c.commutator == tuple(hu[s] * hv[t] - hu[t] * hv[s] for s, t in combinations(range(3), 2))


@given(words(3, 6), words(3, 6), words(3, 6))
def test_double_commutators_vanish(u, v, w):
    assert nil2_class(commutator(commutator(u, v), w)).is_identity()


def test_fh_obstruction_examples():
    assert fh_obstruction((x1, x2))
    assert not fh_obstruction((x1, x1))
    assert fh_obstruction({"a1": x1 * x2, "a2": x2})
    with pytest.raises(ValueError):
        fh_obstruction((FreeWord.generator(1, 1), FreeWord.generator(1, 1)))


@pytest.mark.parametrize("genus", [2, 3])
def test_surface_relator_is_trivial_mod_omega(genus):
    s = SymplecticSpace(genus)
    rel = surface_relator(genus)
    assert len(rel) == 4 * genus
    assert surface_commutator_class(rel, s).is_zero()
    # before dividing by omega the class is exactly omega
    assert nil2_class(rel).commutator == s.omega.coords


def test_surface_class_of_handle_commutator():
    s = SymplecticSpace(2)
    a1, a2 = FreeWord.generator(1, 4), FreeWord.generator(2, 4)
    w = surface_commutator_class(commutator(a1, a2), s)
    assert str(w) == "1*a1^a2"
    with pytest.raises(ValueError):
        surface_commutator_class(a1, s)
