import pytest
from itertools import combinations

from mongetools.grading import (Sigma, height, grading_components, depth,
                                grading_element_eigenvalue, roots_of_degree, is_generated)
from mongetools.rootsys import AlgebraSpec, Root, build_root_system, simple_algebras
from mongetools.errors import DomainError

def test_sigma():
    sigma = Sigma((2, 0, 2))
    assert sigma == (0, 2)
    assert str(sigma) == '{1,3}'
    assert sigma.labels() == [ 1, 3 ]
    assert Sigma.from_labels([ 3, 1 ]) == sigma
    assert repr(sigma) == 'Sigma((0, 2))'

def test_bad_sigma():
    with pytest.raises(DomainError):
        Sigma(())
    with pytest.raises(DomainError):
        Sigma((-1, 0))
    rs = build_root_system(AlgebraSpec('A', 2))
    with pytest.raises(DomainError):
        Sigma((0, 2)).check(rs)

def test_height():
    sigma = Sigma((0, 1))
    beta = Root((1, 2, 2))
    assert height(beta, sigma) == 3
    assert grading_element_eigenvalue(-beta, sigma) == -3

def test_grading_b3():
    rs = build_root_system(AlgebraSpec('B', 3))
    info = grading_components(rs, Sigma((0, 1)))
    assert info.depth == 3
    assert info.dims == { -3: 1, -2: 3, -1: 4, 0: 5, 1: 4, 2: 3, 3: 1 }
    assert sum(info.dims.values()) == 21
    assert info.dimension(4) == 0
    assert set(info.components[0]) == { Root((0, 0, 1)), Root((0, 0, -1)) }

@pytest.mark.parametrize('family,rank,labels,depth_', [
    ('A', 3, (1, 2, 3), 3),
    ('C', 3, (2, 3), 3),
    ('G', 2, (1,), 3),
    ('G', 2, (1, 2), 5),
    ('E', 8, (8,), 2),
    ('D', 5, (1,), 1),
])
def test_depth(family, rank, labels, depth_):
    rs = build_root_system(AlgebraSpec(family, rank))
    assert depth(rs, Sigma.from_labels(labels)) == depth_

def test_grading_is_symmetric():
    rs = build_root_system(AlgebraSpec('F', 4))
    info = grading_components(rs, Sigma((0, 3)))
    for j in range(1, info.depth + 1):
        assert info.dims[j] == info.dims[-j]
    assert sum(info.dims.values()) == 52

def test_roots_of_degree():
    rs = build_root_system(AlgebraSpec('A', 3))
    assert set(roots_of_degree(rs, Sigma((1,)), -1)) == {
        Root((0, -1, 0)), Root((-1, -1, 0)), Root((0, -1, -1)), Root((-1, -1, -1)) }

@pytest.mark.parametrize('spec', list(simple_algebras(8)), ids=str)
def test_every_grading(spec):
    rs = build_root_system(spec)
    for size in range(1, rs.rank + 1):
        for nodes in combinations(range(rs.rank), size):
            sigma = Sigma(nodes)
            info = grading_components(rs, sigma)
            assert info.depth == max(height(b, sigma) for b in rs.positive_roots)
            assert sum(len(c) for c in info.components.values()) == len(rs.roots)
            assert all(info.dims[j] == info.dims[-j] for j in range(1, info.depth + 1))
            assert is_generated(rs, sigma), sigma
