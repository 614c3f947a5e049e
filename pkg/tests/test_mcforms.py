import pytest

from mongetools.mcforms import (compute_mc_forms, frame, coframe_structure, published_forms,
                                verify_paper_forms, PfaffianSystem, standard_pfaffian,
                                restricted_iiic_system, monge_normal_form, default_ordering,
                                structure_mismatches, ERRATA)
from mongetools.nilrealize import case_basis, bracket_mismatches
from mongetools.parsing import parse_form
from mongetools.symalg import Space
from mongetools.errors import DomainError

# Cases whose computed coframe is printed verbatim
PRINTED = [ ('Ia', 3), ('IIa', 3), ('IIIa', 3), ('IVa', 4), ('Va', None), ('Vb', None) ]

@pytest.mark.parametrize('case_id,ell', PRINTED)
def test_computed_forms_match_published(case_id, ell):
    g = case_basis(case_id, ell)
    cf = compute_mc_forms(g)
    texts = published_forms(case_id, ell)
    for label in g.labels:
        assert cf[label] == parse_form(texts[label], cf.space), label

def test_default_ordering_puts_leader_first():
    g = case_basis('Va')
    order = default_ordering(g)
    assert g.labels[order[0]] == 'X'
    assert [ g.degrees[n] for n in order[1:] ] == [ -3, -3, -2, -1 ]

def test_bad_ordering():
    g = case_basis('Va')
    with pytest.raises(DomainError):
        compute_mc_forms(g, ordering=[ 'X', 'Q', 'P' ])

def test_any_ordering_gives_a_coframe():
    g = case_basis('Va')
    cf = compute_mc_forms(g, ordering=[ 'Q', 'X', 'P', 'Y', 'Z' ])
    assert structure_mismatches(g, cf.forms) == [ ]

def test_coframe_basics():
    cf = compute_mc_forms(case_basis('Va'))
    assert cf.coordinates == ('q', 'x', 'p', 'y', 'z')
    assert cf.weights() == (1, 1, 2, 3, 3)
    assert len(list(cf)) == 5
    assert dict(cf.describe())['Y'] == str(cf['Y'])
    assert not cf.matrix().is_constant()

VERIFIED = [ ('Ia', 3), ('Ia', 5), ('Ib', 3), ('IIa', 3), ('IIa', 4), ('IIb', None),
             ('IIIa', 3), ('IIIa', 4), ('IIIb', None), ('IIId', None), ('IVa', 4),
             ('Va', None), ('Vb', None) ]

@pytest.mark.parametrize('case_id,ell', VERIFIED)
def test_published_forms_are_coframes(case_id, ell):
    check = verify_paper_forms(case_id, ell)
    assert check.ok, str(check)

def test_misprinted_iiic():
    check = verify_paper_forms('IIIc')
    assert not check
    assert 'p2' in [ name for name, why in check.failures ]
    assert 'theta_p2' in str(check)
    fixed = verify_paper_forms('IIIc', errata=True)
    assert fixed.ok
    assert str(fixed) == 'IIIc: all forms satisfy the structure equations'
    assert published_forms('IIIc', errata=True)['P2'] == ERRATA['IIIc']['P2']

@pytest.mark.parametrize('case_id,ell', [ ('Ia', 3), ('IIIc', None), ('IIId', None), ('Vb', None) ])
def test_structure_recovered_from_forms(case_id, ell):
    g = case_basis(case_id, ell)
    cf = compute_mc_forms(g)
    assert bracket_mismatches(coframe_structure(cf), g.bracket_table()) == [ ]

def test_frame_is_dual():
    cf = compute_mc_forms(case_basis('IIIb'))
    fields = frame(cf)
    for a, label in enumerate(cf.labels):
        for b in range(len(fields)):
            value = cf[label](fields[b])
            if a == b:
                assert value == cf.space.one()
            else:
                assert not value

def test_standard_pfaffian():
    cf = compute_mc_forms(case_basis('Va'))
    ps = standard_pfaffian(cf)
    assert len(ps) == 3
    assert [ name for name, text in ps.describe() ] == [ 'theta_p', 'theta_y', 'theta_z' ]
    fields = frame(cf)
    for a, d in enumerate(cf.degrees):
        if d == -1:
            assert ps.annihilates(fields[a])
    assert not ps.annihilates(fields[cf.labels.index('P')])
    assert ps.coframe_matrix()[(0, 1)] == -cf.space.variable('q')

def test_pfaffian_system_errors():
    space = Space(('x', 'y', 'p'))
    theta = parse_form('dy - p*dx', space)
    with pytest.raises(DomainError):
        PfaffianSystem(space, [ theta ], (1, 0, 1))
    with pytest.raises(DomainError):
        PfaffianSystem(space, [ theta ], (1, 2))
    with pytest.raises(DomainError):
        PfaffianSystem(space, [ theta, theta * 2 ], (1, 2, 1))
    ps = PfaffianSystem(space, [ theta ], (1, 2, 1))
    assert ps.labels == [ 'theta1' ]
    assert len(ps.complement) == 2
    assert ps.coframe_matrix()[(0, 1)] == space.one()

def test_restricted_iiic():
    ps = restricted_iiic_system()
    assert ps.space.names == ('x', 'y1', 'y2', 'p1', 'p2', 'q1', 'z')
    assert ps.weights == (1, 3, 3, 2, 2, 1, 4)
    assert len(ps) == 4
    assert len(ps.complement) == 3
    assert repr(ps) == 'PfaffianSystem(IIIc restricted)'

@pytest.mark.parametrize('case_id,ell,text', [
    ('Va', None, 'ż = ÿ^2'),
    ('IIIa', 3, 'ż = ẏ1*ẏ3 + 1/2*ẏ2^2'),
    ('IIIc', None, 'ż = ÿ1*ẏ2'),
    ('Ia', 4, 'ż1 = ẏ0*ẏ1\nż2 = ẏ0*ẏ2'),
    ('IIa', 3, 'ż11 = ẏ1^2\nż12 = ẏ1*ẏ2\nż22 = ẏ2^2'),
    ('Ib', None, 'J1(R, R^1)'),
    ('IIIb', None, 'J1(R, R)'),
])
def test_monge_normal_form(case_id, ell, text):
    assert str(monge_normal_form(case_id, ell)) == text

def test_normal_form_identification():
    system = monge_normal_form('IIIc')
    assert system.identification['p1'] == 'ẏ1'
    assert system.identification['q2'] == 'ÿ2'
    assert system.identification['x'] == 'x'
    assert monge_normal_form('Vb').identification['r'] == 'y⃛'
