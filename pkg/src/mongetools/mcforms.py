# -----------------------------------------------------------------------------
# mongetools: mcforms.py
#
# Maurer-Cartan forms on the nilpotent group N = exp(g_-) in exponential
# coordinates of the second kind
#
#     g = exp(t_1 M_1) exp(t_2 M_2) ... exp(t_n M_n)
#
# where the first factor is the leader X and the remaining factors run
# from the most negative degree up to degree -1.  With this order the
# coframes of the Ia, IIa, IIIa, IVa, Va and Vb bases come out exactly as
# they are usually printed.  The left invariant forms are read off from
#
#     g^-1 dg = sum_c Ad(exp(-t_n M_n) ... exp(-t_{c+1} M_{c+1})) M_c dt_c
#
# either by conjugating matrices or, when there is no matrix realization,
# by exponentiating the adjoint action.
# -----------------------------------------------------------------------------

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, InvariantError
from .nilrealize import GradedNilpotent, case_basis, case_spec, dual_structure_equations
from .parsing import parse_form
from .symalg import (Space, PolyForm, PolyMatrix, PolyVectorField, MatrixSpan,
                     polynomial_inverse, rank_of_rows)

__all__ = [ 'Coframe', 'PfaffianSystem', 'FormCheck', 'MongeSystem',
            'default_ordering', 'compute_mc_forms', 'structure_mismatches',
            'published_forms', 'verify_paper_forms', 'standard_pfaffian', 'frame',
            'coframe_structure', 'monge_normal_form', 'restricted_iiic_system',
            'ERRATA' ]

class Coframe:
    '''
    Left invariant coframe theta^a, one 1-form per basis element of g_-.
    Coordinate number a of space is dual to basis element a.
    '''
    def __init__(self, space, labels, degrees, forms, name=None):
        self.space = space
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.forms = dict(forms)
        self.name = name
        if len(self.labels) != len(space):
            raise DomainError('a coframe needs one coordinate per basis element')

    def __getitem__(self, label):
        return self.forms[label]

    def __iter__(self):
        return (self.forms[label] for label in self.labels)

    def __repr__(self):
        return f'Coframe({self.name or self.labels})'

    @property
    def coordinates(self):
        return self.space.names

    def weights(self):
        return tuple(-d for d in self.degrees)

    def matrix(self):
        '''
        Coefficient matrix: row a holds the components of theta^a.
        '''
        n = len(self.labels)
        entries = { }
        for a, label in enumerate(self.labels):
            for (c,), f in self.forms[label].components.items():
                entries[(a, c)] = f
        return PolyMatrix(n, n, self.space, entries)

    def describe(self):
        return [ (label, str(self.forms[label])) for label in self.labels ]

def default_ordering(g):
    rest = sorted((n for n in range(len(g)) if g.labels[n] != g.leader),
                  key=lambda n: (g.degrees[n], n))
    return ([ g.index(g.leader) ] if g.leader is not None else [ ]) + rest

def structure_mismatches(g, forms):
    '''
    Labels whose forms do not satisfy
    d theta^c = - sum over a < b of c^c_ab theta^a ^ theta^b.
    '''
    bad = [ ]
    for label, terms in dual_structure_equations(g):
        theta = forms[label]
        expected = PolyForm.zero(theta.space, 2)
        for (a, b), k in terms.items():
            expected = expected + (forms[g.labels[a]] & forms[g.labels[b]]) * k
        if theta.d() != expected:
            bad.append(label)
    return bad

def _matrix_columns(g, space, order):
    t = space.variables()
    mats = [ m.to_space(space) for m in g.matrices ]
    span = MatrixSpan(mats)
    forward = { k: mats[k].exp_nilpotent(t[k]) for k in order }
    backward = { k: mats[k].exp_nilpotent(-t[k]) for k in order }
    columns = { }
    for pos, c in enumerate(order):
        conj = mats[c]
        for k in order[pos + 1:]:
            conj = backward[k] @ conj @ forward[k]
        columns[c] = span.expand(conj)
    return columns

def _ad_exp(g, k, tk, vector):
    # exp(-t ad M_k) applied to a vector with polynomial coefficients
    result = dict(vector)
    term = dict(vector)
    n = 0
    while term:
        n += 1
        image = { }
        for b, coeff in term.items():
            for c, s in g.bracket(k, b).items():
                value = coeff * tk * Fraction(-s, n)
                image[c] = image[c] + value if c in image else value
        term = { c: v for c, v in image.items() if v }
        for c, v in term.items():
            result[c] = result[c] + v if c in result else v
    return { c: v for c, v in result.items() if v }

def _adjoint_columns(g, space, order):
    t = space.variables()
    columns = { }
    for pos, c in enumerate(order):
        vector = { c: space.one() }
        for k in order[pos + 1:]:
            vector = _ad_exp(g, k, t[k], vector)
        columns[c] = [ vector.get(a, space.zero()) for a in range(len(g)) ]
    return columns

def compute_mc_forms(g, ordering=None):
    '''
    Maurer-Cartan coframe of g_-.  ordering lists the factors of the
    group element (labels or indices); the default puts the leader first
    and then runs from the most negative degree to degree -1.
    '''
    order = [ g.index(x) for x in ordering ] if ordering is not None else default_ordering(g)
    if sorted(order) != list(range(len(g))):
        raise DomainError('ordering must list every basis element exactly once')
    space = Space(g.coordinates)
    if g.matrices:
        columns = _matrix_columns(g, space, order)
    else:
        columns = _adjoint_columns(g, space, order)
    forms = { }
    for a, label in enumerate(g.labels):
        forms[label] = PolyForm(space, 1, { (c,): columns[c][a] for c in range(len(g)) })
    cf = Coframe(space, g.labels, g.degrees, forms, name=g.name)
    for a, label in enumerate(g.labels):
        if forms[label].constant_part() != space.differential(a):
            raise InvariantError(f'theta_{g.coordinates[a]} is not d{g.coordinates[a]} at the origin')
    bad = structure_mismatches(g, forms)
    if bad:
        raise InvariantError(f'computed forms {bad} violate the structure equations of {g.name}')
    return cf

def frame(cf):
    '''
    Dual frame e_a with theta^b(e_a) = delta^b_a.
    '''
    inverse = polynomial_inverse(cf.matrix())
    n = len(cf.labels)
    return [ PolyVectorField(cf.space, { c: inverse[(c, a)] for c in range(n) }) for a in range(n) ]

def coframe_structure(cf):
    '''
    Structure constants recovered from the exterior derivatives of a
    coframe: c^c_ab = -d theta^c(e_a, e_b).  Raises DomainError if they
    are not constant.
    '''
    fields = frame(cf)
    n = len(cf.labels)
    brackets = { }
    for c, label in enumerate(cf.labels):
        dtheta = cf.forms[label].d()
        for a in range(n):
            for b in range(a + 1, n):
                value = dtheta(fields[a], fields[b])
                if not value.is_constant():
                    raise DomainError(f'd theta_{cf.coordinates[c]} has non-constant coefficients')
                k = value.constant_term()
                if k:
                    brackets.setdefault((a, b), { })[c] = -k
    return GradedNilpotent(cf.labels, cf.degrees, brackets, coordinates=cf.coordinates, name=cf.name)

# -----------------------------------------------------------------------------
# Published coframes
# -----------------------------------------------------------------------------

def _kappa_pairs(m):
    return [ (i, m + 1 - i) for i in range(1, m + 1) ]

def published_forms(case_id, ell=None, errata=False):
    '''
    The closed form Maurer-Cartan forms of a case as text, keyed by basis
    label.  With errata=True the corrections in ERRATA are applied.
    '''
    spec, sigma = case_spec(case_id, ell)
    l = spec.rank
    forms = { }
    if case_id in ('Ia', 'Ib', 'IIa', 'IIIa', 'IVa'):
        forms['X'] = 'dx'
    if case_id == 'Ia':
        forms['P0'] = 'dp0'
        forms['Y0'] = 'dy0 - p0*dx'
        for i in range(1, l - 1):
            forms[f'P{i}'] = f'dp{i}'
            forms[f'Y{i}'] = f'dy{i} - p{i}*dx'
            forms[f'Z{i}'] = f'dz{i} - p0*dy{i} - p{i}*dy0 + p0*p{i}*dx'
    elif case_id in ('Ib', 'IIa'):
        for i in range(1, l):
            forms[f'P{i}'] = f'dp{i}'
            forms[f'Y{i}'] = f'dy{i} - p{i}*dx'
        if case_id == 'IIa':
            for i in range(1, l):
                for j in range(i, l):
                    forms[f'Z{i}{j}'] = f'dz{i}{j} - p{i}*dy{j} - p{j}*dy{i} + p{i}*p{j}*dx'
    elif case_id in ('IIIa', 'IVa'):
        m = (2 * l + 1 if spec.family == 'B' else 2 * l) - 4
        for i in range(1, m + 1):
            forms[f'P{i}'] = f'dp{i}'
            forms[f'Y{i}'] = f'dy{i} - p{i}*dx'
        text = 'dz'
        for i, j in _kappa_pairs(m):
            text += f' - p{i}*dy{j}'
        for i, j in _kappa_pairs(m):
            text += f' + 1/2*p{i}*p{j}*dx'
        forms['Z'] = text
    elif case_id == 'IIb':
        forms.update({
            'P1': 'dp1', 'P2': 'dp2', 'X': 'dx',
            'Y1': 'dy1 - p1*dx', 'Y2': 'dy2 - p2*dx',
            'Z1': 'dz1 - p2*dy1 - p1*dy2 + p1*p2*dx',
            'Z2': 'dz2 - x*dy2',
            'Z3': 'dz3 - x*dz1 - 2*p1*dz2 + (2*x*p1 - y1)*dy2',
            'Z4': 'dz4 + (x*p1 - y1)*dz1 + p1^2*dz2 - p1*dz3 - p1*(x*p1 - y1)*dy2',
        })
    elif case_id == 'IIIb':
        forms.update({ 'P': 'dp', 'X': 'dx', 'Y': 'dy - p*dx' })
    elif case_id == 'IIIc':
        forms.update({
            'Q1': 'dq1', 'Q2': 'dq2', 'X': 'dx',
            'P1': 'dp1 - q1*dx', 'P2': 'dy2 - q2*dx',
            'Y1': 'dy1 - p1*dx', 'Y2': 'dy2 - p2*dx',
            'Z': 'dz - p2*dp1 + q2*dy1 - q1*dy2 + (p2*q1 - p1*q2)*dx',
        })
    elif case_id == 'IIId':
        forms.update({
            'P1': 'dp1', 'P2': 'dp2', 'X': 'dx',
            'Y1': 'dy1 - p1*dx', 'Y2': 'dy2 - p2*dx',
            'Z1': 'dz1 - p2*dy1 - p1*dy2 + p1*p2*dx',
            'Z2': 'dz2 - p2*dy2 + 1/2*p2^2*dx',
            'Z3': 'dz3 + 1/2*p2^2*dy1 + p1*p2*dy2 - p2*dz1 - p1*dz2 - 1/2*p1*p2^2*dx',
            'Z4': 'dz4 + y2*dz1 + y1*dz2 - x*dz3',
        })
    elif case_id == 'Va':
        forms.update({
            'Q': 'dq', 'X': 'dx', 'P': 'dp - q*dx', 'Y': 'dy - p*dx',
            'Z': 'dz - q*dp + 1/2*q^2*dx',
        })
    else:
        forms.update({
            'R': 'dr', 'X': 'dx', 'Q': 'dq - r*dx', 'P': 'dp - q*dx', 'Y': 'dy - p*dx',
            'Z': 'dz + r*dy - q*dp + (1/2*q^2 - p*r)*dx',
        })
    if errata:
        forms.update(ERRATA.get(case_id, { }))
    return forms

# Corrections to misprinted forms, by case
ERRATA = {
    'IIIc': { 'P2': 'dp2 - q2*dx' },
}

@dataclass
class FormCheck:
    case_id: str
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f'{self.case_id}: all forms satisfy the structure equations'
        return f'{self.case_id}: ' + '; '.join(f'theta_{name}: {why}' for name, why in self.failures)

def verify_paper_forms(case_id, ell=None, errata=False):
    '''
    Check that the published forms of a case are a coframe satisfying the
    structure equations of its bracket table.
    '''
    g = case_basis(case_id, ell)
    space = Space(g.coordinates)
    texts = published_forms(case_id, ell, errata)
    forms = { label: parse_form(texts[label], space) for label in g.labels }
    check = FormCheck(case_id)
    for a, label in enumerate(g.labels):
        if forms[label].constant_part() != space.differential(a):
            check.failures.append((g.coordinates[a], f'is not d{g.coordinates[a]} at the origin'))
    for label in structure_mismatches(g, forms):
        check.failures.append((g.coordinates[g.index(label)], 'violates its structure equation'))
    return check

# -----------------------------------------------------------------------------
# Pfaffian systems
# -----------------------------------------------------------------------------

class PfaffianSystem:
    '''
    Span of 1-forms on a weighted coordinate space.  complement, when
    given, completes the generators to a coframe; otherwise coordinate
    differentials are used.  jet_coordinates name the coordinates that
    play the role of derivatives in point symmetry checks.
    '''
    def __init__(self, space, generators, weights, labels=None, complement=None,
                 jet_coordinates=(), name=None):
        self.space = space
        self.generators = list(generators)
        self.weights = tuple(weights)
        self.labels = list(labels or [ f'theta{n + 1}' for n in range(len(self.generators)) ])
        self.jet_coordinates = tuple(jet_coordinates)
        self.name = name
        if len(self.weights) != len(space) or min(self.weights, default=1) < 1:
            raise DomainError('every coordinate needs a positive weight')
        rows = [ { i: f.constant_term() for (i,), f in form.components.items() } for form in self.generators ]
        if rank_of_rows(rows, len(space)) != len(self.generators):
            raise DomainError('generators are not pointwise linearly independent')
        self.complement = list(complement) if complement is not None else self._coordinate_complement(rows)

    def _coordinate_complement(self, rows):
        n = len(self.space)
        chosen = [ ]
        for i in range(n):
            trial = rows + [ { j: 1 } for j in chosen + [ i ] ]
            if rank_of_rows(trial, n) == len(trial):
                chosen.append(i)
        return [ self.space.differential(i) for i in chosen ]

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f'PfaffianSystem({self.name or len(self.generators)})'

    def coframe_matrix(self):
        forms = self.generators + self.complement
        n = len(self.space)
        if len(forms) != n:
            raise DomainError('generators and complement do not form a coframe')
        entries = { }
        for a, form in enumerate(forms):
            for (c,), f in form.components.items():
                entries[(a, c)] = f
        return PolyMatrix(n, n, self.space, entries)

    def annihilates(self, vf):
        return all(not theta(vf) for theta in self.generators)

    def describe(self):
        return [ (label, str(form)) for label, form in zip(self.labels, self.generators) ]

def standard_pfaffian(cf, jet_coordinates=()):
    '''
    The forms dual to the basis elements of degree at most -2.
    '''
    gens = [ (label, cf.forms[label]) for label, d in zip(cf.labels, cf.degrees) if d <= -2 ]
    rest = [ cf.forms[label] for label, d in zip(cf.labels, cf.degrees) if d > -2 ]
    names = [ f'theta_{cf.coordinates[cf.labels.index(label)]}' for label, _ in gens ]
    return PfaffianSystem(cf.space, [ f for _, f in gens ], cf.weights(), labels=names,
                          complement=rest, jet_coordinates=jet_coordinates, name=cf.name)

def restricted_iiic_system():
    '''
    The ODE z' = y1'' y2' encoded on the seven coordinates x, y1, y2, p1,
    p2, q1, z, without the second derivative of y2.
    '''
    space = Space(('x', 'y1', 'y2', 'p1', 'p2', 'q1', 'z'))
    texts = [ ('theta_y1', 'dy1 - p1*dx'), ('theta_y2', 'dy2 - p2*dx'),
              ('theta_p1', 'dp1 - q1*dx'), ('theta_z', 'dz - p2*q1*dx') ]
    return PfaffianSystem(space, [ parse_form(t, space) for _, t in texts ], (1, 3, 3, 2, 2, 1, 4),
                          labels=[ name for name, _ in texts ], name='IIIc restricted')

# -----------------------------------------------------------------------------
# Monge normal forms
# -----------------------------------------------------------------------------

@dataclass
class MongeSystem:
    case_id: str
    equations: tuple
    identification: dict
    model: str = ''

    def __str__(self):
        return '\n'.join(self.equations) if self.equations else self.model

def _jet_name(coordinate):
    head, tail = coordinate[0], coordinate[1:]
    return { 'p': 'ẏ', 'q': 'ÿ', 'r': 'y⃛' }.get(head, head) + tail

def monge_normal_form(case_id, ell=None):
    '''
    The under-determined ODE whose canonical Pfaffian system is the
    standard system of a case, with the dictionary identifying coframe
    coordinates and jet variables.
    '''
    spec, sigma = case_spec(case_id, ell)
    l = spec.rank
    g = case_basis(case_id, ell)
    identification = { c: _jet_name(c) for c in g.coordinates }
    model = ''
    if case_id == 'Ia':
        equations = [ f'ż{i} = ẏ0*ẏ{i}' for i in range(1, l - 1) ]
    elif case_id == 'IIa':
        equations = [ f'ż{i}{j} = ' + (f'ẏ{i}^2' if i == j else f'ẏ{i}*ẏ{j}')
                      for i in range(1, l) for j in range(i, l) ]
    elif case_id in ('IIIa', 'IVa'):
        m = (2 * l + 1 if spec.family == 'B' else 2 * l) - 4
        jets = Space([ f'ẏ{i}' for i in range(1, m + 1) ])
        F = jets.zero()
        for i, j in _kappa_pairs(m):
            F = F + jets.variable(i - 1) * jets.variable(j - 1) * Fraction(1, 2)
        equations = [ f'ż = {F}' ]
    elif case_id == 'Ib':
        equations = [ ]
        model = f'J1(R, R^{l - 1})'
    elif case_id == 'IIIb':
        equations = [ ]
        model = 'J1(R, R)'
    elif case_id == 'IIb':
        equations = [ 'ż1 = ẏ1*ẏ2', 'ż2 = x*ẏ2', 'ż3 = (y1 + x*ẏ1)*ẏ2', 'ż4 = y1*ẏ1*ẏ2' ]
    elif case_id == 'IIIc':
        equations = [ 'ż = ÿ1*ẏ2' ]
    elif case_id == 'IIId':
        equations = [ 'ż1 = ẏ1*ẏ2', 'ż2 = 1/2*ẏ2^2', 'ż3 = 1/2*ẏ1*ẏ2^2',
                      'ż4 = 1/2*ẏ2*(x*ẏ1*ẏ2 - y1*ẏ2 - 2*ẏ1*y2)' ]
    elif case_id == 'Va':
        equations = [ 'ż = ÿ^2' ]
    else:
        equations = [ 'ż = ÿ^2' ]
        model = 'partial prolongation of the Hilbert-Cartan equation'
    return MongeSystem(case_id, tuple(equations), identification, model)
