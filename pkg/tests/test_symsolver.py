import pytest

from mongetools.symsolver import (MongeSpec, MongeSolver, monge_spec, build_determining,
                                  solve_symmetries, grade_decomposition, pfaffian_symmetries,
                                  point_symmetry_check, kernel_growth, killing_signature,
                                  contains_field, monge_pfaffian, case_system)
from mongetools.mcforms import restricted_iiic_system
from mongetools.symalg import PolyVectorField
from mongetools.nilrealize import case_spec
from mongetools.grading import grading_components
from mongetools.rootsys import build_root_system
from mongetools.errors import DomainError, InvariantError

def test_monge_spec():
    ms = monge_spec('Ia', 3)
    assert ms.coordinates == [ 'x', 'y0', 'y1', 'z1' ]
    assert ms.jet_names == [ 'ẏ0', 'ẏ1' ]
    assert str(ms.quadratic(0, ms.jet_space())) == 'ẏ0*ẏ1'
    assert ms.weights() == { 'x': 1, 'y0': 2, 'y1': 2, 'z1': 3, 'ẏ0': 1, 'ẏ1': 1 }
    assert ms.weights('uniform')['ẏ0'] == 0
    with pytest.raises(DomainError):
        ms.weights('weird')

def test_signatures():
    ms = monge_spec('IIIa', 3, (2, 1))
    assert [ ms.F[0][i][i] for i in range(3) ] == [ 0.5, 0.5, -0.5 ]
    assert monge_spec('IIIa', 3).F[0][0][2] == 0.5
    for signature in [ (2, 2), (-1, 4) ]:
        with pytest.raises(DomainError):
            monge_spec('IIIa', 3, signature)

def test_bad_monge_specs():
    with pytest.raises(DomainError):
        monge_spec('Va', None)
    with pytest.raises(DomainError):
        MongeSpec([ 'y1', 'y2' ], [ 'z' ], [ [ [ 1, 1 ], [ 0, 1 ] ] ])
    with pytest.raises(DomainError):
        MongeSpec([ 'y1' ], [ 'z1', 'z2' ], [ [ [ 1 ] ] ])
    with pytest.raises(DomainError):
        MongeSpec([ 'y1', 'y2' ], [ 'z' ], [ [ [ 1 ] ] ])

def test_determining_system():
    ms = monge_spec('Ia', 3)
    system = build_determining(ms)
    assert len(system.unknowns) == 60
    assert system.kernel().dimension == 15

@pytest.mark.parametrize('case_id,ell,signature,dim', [
    ('Ia', 3, None, 15),
    ('Ia', 4, None, 24),
    ('IIa', 3, None, 21),
    ('IIIa', 3, None, 21),
    ('IIIa', 3, (2, 1), 21),
    ('IIIa', 3, (3, 0), 21),
    ('IVa', 4, (2, 2), 28),
    pytest.param('Ia', 5, None, 35, marks=pytest.mark.slow),
    pytest.param('IIa', 4, None, 36, marks=pytest.mark.slow),
    pytest.param('IIIa', 4, None, 36, marks=pytest.mark.slow),
    pytest.param('IVa', 5, None, 45, marks=pytest.mark.slow),
])
def test_monge_symmetry_dimension(case_id, ell, signature, dim):
    sa = solve_symmetries(monge_spec(case_id, ell, signature))
    assert sa.dimension == dim
    assert sa.prolonged
    assert point_symmetry_check(sa)

@pytest.mark.parametrize('case_id,signature,grades', [
    ('Ia', None, { -1: 4, 0: 7, 1: 4 }),
    ('IIa', None, { -1: 6, 0: 9, 1: 6 }),
    ('IIIa', (2, 1), { -1: 5, 0: 11, 1: 5 }),
])
def test_uniform_grades(case_id, signature, grades):
    ms = monge_spec(case_id, 3, signature)
    sa = solve_symmetries(ms)
    assert grade_decomposition(sa, ms.weights('uniform')) == grades

def root_dims(case_id, ell=None):
    spec, sigma = case_spec(case_id, ell)
    return grading_components(build_root_system(spec), sigma).dims

@pytest.mark.parametrize('case_id,ell,signature', [
    ('Ia', 3, None), ('Ia', 4, None), ('IIa', 3, None), ('IIIa', 3, None),
    ('IIIa', 3, (2, 1)), ('IVa', 4, (2, 2)),
])
def test_monge_grades_match_roots(case_id, ell, signature):
    ms = monge_spec(case_id, ell, signature)
    sa = solve_symmetries(ms)
    assert grade_decomposition(sa, ms.weights()) == root_dims(case_id, ell)

@pytest.mark.slow
@pytest.mark.parametrize('case_id,ell', [ ('Ia', 3), ('IIa', 3), ('IIIa', 3) ])
def test_quadratic_ansatz_is_enough(case_id, ell):
    ms = monge_spec(case_id, ell)
    assert solve_symmetries(ms, 3).dimension == solve_symmetries(ms, 2).dimension

def test_killing_form_of_sl4():
    sa = solve_symmetries(monge_spec('Ia', 3))
    assert killing_signature(sa) == (9, 6, 0)

def test_bracket_closure():
    sa = solve_symmetries(monge_spec('Ia', 3))
    n = sa.dimension
    for a in range(n):
        assert sa.bracket(a, a) == { }
        for b in range(a + 1, n):
            assert sa.bracket(b, a) == { c: -v for c, v in sa.bracket(a, b).items() }
            image = sa.fields[a].bracket(sa.fields[b])
            total = PolyVectorField(sa.space)
            for c, v in sa.bracket(a, b).items():
                total = total + sa.fields[c] * v
            assert image == total

def test_contains_field():
    ms = monge_spec('IIIa', 3)
    sa = solve_symmetries(ms)
    base = ms.base_space()
    assert contains_field(sa, PolyVectorField(base, { 'x': base.one() }))
    assert contains_field(sa, PolyVectorField(base, { 'x': base.variable('x'), 'y1': base.variable('y1'),
                                                      'y2': base.variable('y2'), 'y3': base.variable('y3'),
                                                      'z': base.variable('z') }))
    assert not contains_field(sa, PolyVectorField(base, { 'z': base.variable('x') }))
    assert len(sa.base_fields()) == 21

def test_check_symmetry_rejects():
    ms = monge_spec('Ia', 3)
    jet = ms.jet_space()
    with pytest.raises(InvariantError):
        MongeSolver(ms).check_symmetry(PolyVectorField(jet, { 'z1': jet.variable('x') }))
    MongeSolver(ms).check_symmetry(PolyVectorField(jet, { 'x': jet.one() }))

def test_monge_pfaffian():
    ps = monge_pfaffian(monge_spec('Ia', 3))
    assert ps.space.names == ('x', 'y0', 'y1', 'z1', 'p0', 'p1')
    assert ps.weights == (1, 2, 2, 3, 1, 1)
    assert ps.jet_coordinates == ('p0', 'p1')
    assert [ label for label, text in ps.describe() ] == [ 'theta_y0', 'theta_y1', 'theta_z1' ]

def test_kernel_growth_of_contact_system():
    growth = kernel_growth(case_system('IIIb'), bounds=(1, 2, 3))
    assert growth[0] < growth[1] < growth[2]

def test_pfaffian_weights_checked():
    with pytest.raises(DomainError):
        pfaffian_symmetries(case_system('IIIb'), weights=(1, 0, 2))

@pytest.mark.slow
def test_pfaffian_matches_monge_solver():
    ms = monge_spec('Ia', 3)
    sa = pfaffian_symmetries(monge_pfaffian(ms))
    assert sa.dimension == 15
    assert point_symmetry_check(sa)
    assert killing_signature(sa) == (9, 6, 0)

@pytest.mark.slow
@pytest.mark.parametrize('case_id,dim', [ ('IIb', 21), ('IIId', 21), ('IIIc', 21), ('Va', 14), ('Vb', 14) ])
def test_case_symmetry_dimension(case_id, dim):
    ps = case_system(case_id)
    sa = pfaffian_symmetries(ps)
    assert sa.dimension == dim
    assert grade_decomposition(sa, ps.weights) == root_dims(case_id)

@pytest.mark.slow
def test_hilbert_cartan_symmetries():
    ps = case_system('Va')
    sa = pfaffian_symmetries(ps)
    assert killing_signature(sa) == (8, 6, 0)
    assert grade_decomposition(sa, ps.weights) == { -3: 2, -2: 1, -1: 2, 0: 4, 1: 2, 2: 1, 3: 2 } == root_dims('Va')

@pytest.mark.slow
def test_split_so7_from_iiid():
    sa = pfaffian_symmetries(case_system('IIId'))
    assert killing_signature(sa) == (12, 9, 0)
    assert point_symmetry_check(sa)

@pytest.mark.slow
def test_restricted_iiic():
    sa = pfaffian_symmetries(restricted_iiic_system())
    assert sa.dimension == 16
