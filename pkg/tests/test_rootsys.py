import pytest

from mongetools.rootsys import (AlgebraSpec, Root, RootSystem, build_root_system,
                                cartan_integer, simple_reflection, is_long, weyl_apply,
                                fundamental_pairings, semisimple_part, weyl_group_elements,
                                simple_algebras)
from mongetools.errors import DomainError

def rootsys(family, rank):
    return build_root_system(AlgebraSpec(family, rank))

POSITIVE_COUNTS = [
    ('A', 1, 1), ('A', 4, 10), ('B', 2, 4), ('B', 5, 25), ('C', 3, 9), ('C', 6, 36),
    ('D', 4, 12), ('D', 7, 42), ('G', 2, 6), ('F', 4, 24), ('E', 6, 36), ('E', 7, 63),
    ('E', 8, 120),
]

@pytest.mark.parametrize('family,rank,count', POSITIVE_COUNTS)
def test_positive_root_counts(family, rank, count):
    rs = rootsys(family, rank)
    assert len(rs.positive_roots) == count
    assert len(rs.roots) == 2 * count
    assert all(b.is_positive() for b in rs.positive_roots)

HIGHEST = [
    ('A', 3, (1, 1, 1)), ('B', 3, (1, 2, 2)), ('C', 3, (2, 2, 1)), ('D', 4, (1, 2, 1, 1)),
    ('G', 2, (3, 2)), ('F', 4, (2, 3, 4, 2)), ('E', 6, (1, 2, 2, 3, 2, 1)),
    ('E', 7, (2, 2, 3, 4, 3, 2, 1)), ('E', 8, (2, 3, 4, 6, 5, 4, 3, 2)),
]

@pytest.mark.parametrize('family,rank,highest', HIGHEST)
def test_highest_root(family, rank, highest):
    assert rootsys(family, rank).highest_root == Root(highest)

def test_highest_root_is_dominant():
    # The highest root is the highest weight of the adjoint representation
    assert fundamental_pairings(rootsys('G', 2), rootsys('G', 2).highest_root) == [ 0, 1 ]
    assert fundamental_pairings(rootsys('A', 4), rootsys('A', 4).highest_root) == [ 1, 0, 0, 1 ]
    assert fundamental_pairings(rootsys('B', 4), rootsys('B', 4).highest_root) == [ 0, 1, 0, 0 ]
    assert fundamental_pairings(rootsys('C', 4), rootsys('C', 4).highest_root) == [ 2, 0, 0, 0 ]

def test_cartan_matrix():
    assert rootsys('B', 2).cartan_matrix == [ [ 2, -1 ], [ -2, 2 ] ]
    assert rootsys('C', 2).cartan_matrix == [ [ 2, -2 ], [ -1, 2 ] ]
    assert rootsys('G', 2).cartan_matrix == [ [ 2, -3 ], [ -1, 2 ] ]
    A = rootsys('E', 6).cartan_matrix
    assert all(A[i][j] == A[j][i] for i in range(6) for j in range(6))

def test_root_arithmetic():
    a = Root((1, 0, 2))
    b = Root([0, 1, 1])
    assert a + b == Root((1, 1, 3))
    assert a - b == (1, -1, 1)
    assert -a == Root((-1, 0, -2))
    assert 2 * a == Root((2, 0, 4))
    assert a.height() == 3
    assert (-a).is_negative()
    assert not Root((1, -1, 0)).is_positive()
    assert str(Root((1, -2, 0))) == 'α1 - 2α2'
    assert str(Root((0, 0))) == '0'

def test_reflections():
    rs = rootsys('B', 2)
    a1, a2 = rs.simple_roots
    assert simple_reflection(rs, 0, a1) == -a1
    assert simple_reflection(rs, 1, a1) == a1 + a2 * 2
    assert cartan_integer(rs, a1, 1) == -2
    assert weyl_apply(rs, (0, 1), a2) == simple_reflection(rs, 0, simple_reflection(rs, 1, a2))
    with pytest.raises(DomainError):
        simple_reflection(rs, 0, Root((2, 0)))
    with pytest.raises(DomainError):
        cartan_integer(rs, a1, 2)

def test_long_and_short():
    rs = rootsys('B', 3)
    assert is_long(rs, rs.highest_root)
    assert not is_long(rs, rs.simple_roots[2])
    rs = rootsys('C', 3)
    assert is_long(rs, rs.simple_roots[2])
    assert not is_long(rs, rs.highest_root - rs.simple_roots[0])

@pytest.mark.parametrize('family,rank,order', [ ('A', 2, 6), ('B', 2, 8), ('G', 2, 12), ('A', 3, 24), ('B', 3, 48) ])
def test_weyl_group_order(family, rank, order):
    elements = weyl_group_elements(rootsys(family, rank))
    assert len(elements) == order
    assert elements[0] == ()

@pytest.mark.parametrize('spec', list(simple_algebras(8)), ids=str)
def test_reflections_permute_roots(spec):
    rs = build_root_system(spec)
    for i, alpha in enumerate(rs.simple_roots):
        assert simple_reflection(rs, i, alpha) == -alpha
        others = set(rs.positive_roots) - { alpha }
        assert { simple_reflection(rs, i, b) for b in others } == others

def test_simple_algebras():
    assert [ str(s) for s in simple_algebras(2) ] == [ 'A1', 'A2', 'B2', 'C2', 'G2' ]
    assert [ str(s) for s in simple_algebras(4, include_c2=False) ] == [
        'A1', 'A2', 'A3', 'A4', 'B2', 'B3', 'B4', 'C3', 'C4', 'D4', 'F4', 'G2' ]
    assert len(list(simple_algebras(8))) == 8 + 7 + 7 + 5 + 3 + 1 + 1

def test_components():
    rs = rootsys('A', 5)
    assert rs.components([ 4, 0, 1, 3 ]) == [ (0, 1), (3, 4) ]
    assert rs.components([ ]) == [ ]
    rs = rootsys('D', 5)
    assert rs.components([ 2, 3, 4 ]) == [ (2, 3, 4) ]
    assert rs.neighbors(2) == [ 1, 3, 4 ]

SEMISIMPLE = [
    (('B', 3), [ 0 ], [ ('B', 2) ]),
    (('C', 4), [ 0 ], [ ('C', 3) ]),
    (('D', 5), [ 0 ], [ ('D', 4) ]),
    (('D', 4), [ 1 ], [ ('A', 1), ('A', 1), ('A', 1) ]),
    (('E', 7), [ 6 ], [ ('E', 6) ]),
    (('E', 8), [ 7 ], [ ('E', 7) ]),
    (('F', 4), [ 3 ], [ ('B', 3) ]),
    (('F', 4), [ 0 ], [ ('C', 3) ]),
    (('A', 5), [ 2 ], [ ('A', 2), ('A', 2) ]),
    (('G', 2), [ 0, 1 ], [ ]),
]

@pytest.mark.parametrize('algebra,sigma,factors', SEMISIMPLE)
def test_semisimple_part(algebra, sigma, factors):
    parts = semisimple_part(rootsys(*algebra), sigma)
    assert [ (family, rank) for family, rank, nodes in parts ] == factors

def test_bad_algebras():
    for family, rank in [ ('B', 1), ('C', 1), ('D', 2), ('E', 5), ('E', 9), ('F', 3), ('G', 3), ('H', 2), ('AB', 2) ]:
        with pytest.raises(DomainError):
            AlgebraSpec(family, rank)
    with pytest.raises(DomainError):
        AlgebraSpec('A', 2.0)

def test_reducible_gram_is_refused():
    with pytest.raises(DomainError):
        RootSystem([ [ 2, 0 ], [ 0, 2 ] ])
