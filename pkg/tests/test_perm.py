import math
import random

from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from nutkit.perm import StabilizerChain, UnionFind, compose, identity, inverse, is_identity, orbit_partition


@st.composite
def generator_sets(draw, max_degree=9, max_gens=3):
    n = draw(st.integers(1, max_degree))
    k = draw(st.integers(0, max_gens))
    gens = [tuple(draw(st.permutations(list(range(n))))) for _ in range(k)]
    return n, gens


def sympy_order(n, gens):
    if not gens:
        return 1
    return PermutationGroup([Permutation(list(g)) for g in gens]).order()


def test_compose_applies_left_first():
    p = (1, 2, 0)
    q = (0, 2, 1)
    r = compose(p, q)
    assert all(r[x] == q[p[x]] for x in range(3))
    assert is_identity(compose(p, inverse(p)))
    assert identity(3) == (0, 1, 2)


def test_union_find_classes():
    uf = UnionFind(6)
    uf.union(4, 1)
    uf.union(5, 3)
    uf.union(3, 4)
    assert uf.classes() == [[0], [1, 3, 4, 5], [2]]
    assert uf.find(5) == 1


@given(generator_sets())
def test_order_matches_sympy(data):
    n, gens = data
    chain = StabilizerChain(n, gens)
    assert chain.order() == sympy_order(n, gens)


@given(generator_sets(max_degree=8), st.data())
def test_membership(data, draw):
    n, gens = data
    chain = StabilizerChain(n, gens)
    group = PermutationGroup([Permutation(list(g)) for g in gens]) if gens else None
    p = tuple(draw.draw(st.permutations(list(range(n)))))
    expected = is_identity(p) if group is None else group.contains(Permutation(list(p)))
    assert chain.contains(p) == expected
    for g in gens:
        assert chain.contains(g)


@given(generator_sets(max_degree=8), st.data())
def test_rebasing_gives_point_stabilizer(data, draw):
    n, gens = data
    v = draw.draw(st.integers(0, n - 1))
    chain = StabilizerChain(n, gens, base_prefix=[v])
    assert chain.base[0] == v
    assert chain.order() == sympy_order(n, gens)
    stab = chain.stabilizer_generators(1)
    assert all(s[v] == v for s in stab)
    orbit = len(chain.basic_orbit(0))
    assert sympy_order(n, stab) * orbit == chain.order()


def test_large_symmetric_group():
    n = 30
    chain = StabilizerChain(n, [tuple(list(range(1, n)) + [0]), (1, 0) + tuple(range(2, n))])
    assert chain.order() == math.factorial(n)


def test_transversal_elements_map_base_points():
    rng = random.Random(3)
    gens = [tuple(rng.sample(range(7), 7)) for _ in range(2)]
    chain = StabilizerChain(7, gens)
    for level, b in enumerate(chain.base):
        for x in chain.basic_orbit(level):
            assert chain.transversal_element(level, x)[b] == x


def test_orbit_partition():
    assert orbit_partition(5, [(1, 0, 2, 3, 4), (0, 1, 3, 4, 2)]) == [[0, 1], [2, 3, 4]]
    assert orbit_partition(3, []) == [[0], [1], [2]]
