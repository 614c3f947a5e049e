import pytest

from mongetools.cohomology import (WeylElement, enumerate_w1, enumerate_w2, homogeneity_weight,
                                   is_rigid, torsion_or_curvature, lowest_weight, h1_classes,
                                   cohomology_classes, has_h1_nonnegative, format_highest_weight,
                                   canonical_form, case_label, non_rigid_gradings, NON_RIGID_CASES)
from mongetools.grading import Sigma
from mongetools.rootsys import AlgebraSpec, build_root_system
from mongetools.errors import DomainError

def rootsys(family, rank):
    return build_root_system(AlgebraSpec(family, rank))

W2 = [
    ('A', 2, (1, 2), '[σ12, σ21]', [ 4, 4 ]),
    ('A', 3, (1, 2, 3), '[σ12, σ13, σ21, σ23, σ32]', [ 1, 1, 2, 2, 1 ]),
    ('A', 6, (1, 2, 3), '[σ12, σ13, σ21, σ23, σ32, σ34]', [ 1, 0, 2, 0, 0, -1 ]),
    ('B', 2, (1, 2), '[σ12, σ21]', [ 4, 3 ]),
    ('B', 3, (1, 2, 3), '[σ12, σ13, σ21, σ23, σ32]', [ 0, -3, -1, -1, 2 ]),
    ('B', 4, (3, 4), '[σ32, σ34, σ43]', [ -1, -1, 0 ]),
    ('C', 3, (2, 3), '[σ21, σ23, σ32]', [ 1, 1, 0 ]),
    ('D', 4, (1, 2), '[σ12, σ21, σ23, σ24]', [ 2, 1, 0, 0 ]),
    ('G', 2, (1, 2), '[σ12, σ21]', [ 4, -1 ]),
    ('F', 4, (1, 2), '[σ12, σ21, σ23]', [ -1, 0, -3 ]),
    ('E', 6, (5, 6), '[σ54, σ56, σ65]', [ -1, 0, 0 ]),
    ('E', 8, (7, 8), '[σ76, σ78, σ87]', [ -3, 0, -1 ]),
]

@pytest.mark.parametrize('family,rank,labels,names,weights', W2)
def test_w2_weights(family, rank, labels, names, weights):
    rs = rootsys(family, rank)
    sigma = Sigma.from_labels(labels)
    elements = enumerate_w2(rs, sigma)
    assert '[' + ', '.join(w.label() for w in elements) + ']' == names
    assert [ homogeneity_weight(rs, sigma, w) for w in elements ] == weights

def test_w1():
    rs = rootsys('B', 3)
    elements = enumerate_w1(rs, Sigma((0, 1)))
    assert [ str(w) for w in elements ] == [ 's1', 's2' ]
    assert [ homogeneity_weight(rs, Sigma((0, 1)), w) for w in elements ] == [ -2, -1 ]

def test_labels():
    w = WeylElement((3, 4), ())
    assert w.label() == 'σ45'
    assert w.label(lambda i: 'ℓ' if i == 4 else 'ℓ-1') == 'σ(ℓ-1,ℓ)'
    assert WeylElement((9, 10), ()).label() == 'σ(10,11)'
    assert WeylElement((0,), ()).length == 1

def test_long_elements_are_refused():
    rs = rootsys('A', 3)
    with pytest.raises(DomainError):
        homogeneity_weight(rs, Sigma((0,)), WeylElement((0, 1, 2), ()))

@pytest.mark.parametrize('family,rank,labels,rigid', [
    ('A', 3, (1, 2, 3), False),
    ('A', 5, (1, 2), False),
    ('B', 4, (3, 4), True),
    ('F', 4, (1, 2), True),
    ('E', 7, (6, 7), True),
    ('G', 2, (1,), False),
])
def test_rigidity(family, rank, labels, rigid):
    assert is_rigid(rootsys(family, rank), Sigma.from_labels(labels)) == rigid

def test_torsion_and_curvature():
    rs = rootsys('G', 2)
    sigma = Sigma((0,))
    w, = enumerate_w2(rs, sigma)
    assert torsion_or_curvature(rs, sigma, w) == (0, False)
    rs = rootsys('A', 3)
    sigma = Sigma((0, 1, 2))
    w = enumerate_w2(rs, sigma)[0]
    assert torsion_or_curvature(rs, sigma, w) == (-2, True)

def test_lowest_weight_is_lowest():
    rs = rootsys('B', 5)
    sigma = Sigma((0, 1))
    for w in enumerate_w2(rs, sigma):
        low = lowest_weight(rs, sigma, w)
        assert all(rs.pairing(low, k) <= 0 for k in range(2, 5))

def test_highest_weights():
    rs = rootsys('C', 3)
    sigma = Sigma((1, 2))
    classes = { c.sigma.label(): c for c in cohomology_classes(rs, sigma) }
    assert format_highest_weight(rs, sigma, classes['σ23'].highest_weight_pairings) == '5ω1'
    assert classes['σ23'].minus_sigma_theta_weight == -3
    rs = rootsys('D', 4)
    sigma = Sigma((0, 1))
    classes = { c.sigma.label(): c for c in cohomology_classes(rs, sigma) }
    assert format_highest_weight(rs, sigma, classes['σ21'].highest_weight_pairings) == '[3ω1, 3ω1]'
    rs = rootsys('A', 3)
    assert format_highest_weight(rs, Sigma((0, 1, 2)), { }) == '0'

def test_relative_weight_labels():
    rs = rootsys('C', 6)
    sigma = Sigma((4, 5))
    c = [ c for c in cohomology_classes(rs, sigma) if c.homogeneity_weight > 0 ]
    assert len(c) == 1
    label = lambda m, size: f'ℓ-{6 - size}' if m == size else str(m)
    assert format_highest_weight(rs, sigma, c[0].highest_weight_pairings, label) == '3ω1 + 2ω(ℓ-2)'

def test_h1():
    assert sorted(c.homogeneity_weight for c in h1_classes(rootsys('B', 3), Sigma((0, 1)))) == [ -2, -1 ]
    assert has_h1_nonnegative(rootsys('A', 2), Sigma((0, 1)))
    assert has_h1_nonnegative(rootsys('B', 2), Sigma((1,)))
    assert has_h1_nonnegative(rootsys('B', 2), Sigma((0, 1)))
    assert not has_h1_nonnegative(rootsys('B', 3), Sigma((0, 1)))
    assert not has_h1_nonnegative(rootsys('A', 3), Sigma((0, 1, 2)))

def test_canonical_form():
    assert canonical_form(AlgebraSpec('A', 4), Sigma((2, 3))) == (AlgebraSpec('A', 4), Sigma((0, 1)))
    assert canonical_form(AlgebraSpec('C', 2), Sigma((0,))) == (AlgebraSpec('B', 2), Sigma((1,)))
    assert canonical_form(AlgebraSpec('D', 4), Sigma((1, 3))) == (AlgebraSpec('D', 4), Sigma((0, 1)))

@pytest.mark.parametrize('family,rank,labels,case', [
    ('A', 5, (3, 4, 5), 'Ia'),
    ('A', 2, (1, 2), 'Ib'),
    ('D', 3, (1, 2, 3), 'Ia'),
    ('C', 5, (4, 5), 'IIa'),
    ('C', 3, (1, 2, 3), 'IIb'),
    ('B', 6, (1, 2), 'IIIa'),
    ('C', 2, (1, 2), 'IIIa'),
    ('C', 2, (1,), 'IIIb'),
    ('B', 3, (2, 3), 'IIIc'),
    ('B', 3, (1, 2, 3), 'IIId'),
    ('D', 4, (2, 4), 'IVa'),
    ('G', 2, (1,), 'Va'),
    ('G', 2, (1, 2), 'Vb'),
    ('F', 4, (1, 2), None),
    ('B', 4, (3, 4), None),
])
def test_case_label(family, rank, labels, case):
    assert case_label(AlgebraSpec(family, rank), Sigma.from_labels(labels)) == case

def expected_non_rigid(max_rank):
    expected = { ('IIb', 'C', 3), ('IIIb', 'B', 2), ('IIIc', 'B', 3), ('IIId', 'B', 3),
                 ('Va', 'G', 2), ('Vb', 'G', 2) }
    for n in range(2, max_rank + 1):
        expected |= { ('Ib', 'A', n), ('IIIa', 'B', n) }
        if n >= 3:
            expected |= { ('Ia', 'A', n), ('IIa', 'C', n) }
        if n >= 4:
            expected.add(('IVa', 'D', n))
    return expected

def test_non_rigid_gradings():
    found = non_rigid_gradings(8)
    assert { (label, spec.family, spec.rank) for label, spec, sigma in found } == expected_non_rigid(8)
    assert { label for label, spec, sigma in found } == set(NON_RIGID_CASES)

def test_h1_exceptions():
    nonnegative = { (label, str(spec)) for label, spec, sigma in non_rigid_gradings(8)
                    if has_h1_nonnegative(build_root_system(spec), sigma) }
    assert nonnegative == { ('Ib', f'A{n}') for n in range(2, 9) } | { ('IIIb', 'B2'), ('IIIa', 'B2') }
