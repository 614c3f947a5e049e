# -----------------------------------------------------------------------------
# mongetools: symsolver.py
#
# Infinitesimal symmetries of Pfaffian systems.
#
# Two solvers are provided.  MongeSolver handles the first order quadratic
# Monge systems  z'^a = F^a_ij y'^i y'^j  with constant F.  Its unknowns
# are the coefficients A, B^i, C^a of a point field as polynomials of
# bounded degree in (x, y, z), and its equations are the determining
# equations
#
#     dA/dz^b = 0,  dC^a/dx = 0
#     2 F^a_li dB^l/dx = dC^a/dy^i
#     F^a_li dB^l/dy^j + F^a_lj dB^l/dy^i = F^a_ij dA/dx + F^b_ij dC^a/dz^b
#     2 F^a_l(i F^b_jk) dB^l/dz^b = F^a_(ij dA/dy^k)
#
# Every solution is prolonged with D^i = D_x B^i - y'^i D_x A and checked
# against the full symmetry condition.
#
# PfaffianSolver handles any weighted homogeneous Pfaffian system I.  A
# field X is a symmetry when (L_X theta)(e_b) = 0 for every generator
# theta and every frame field e_b dual to a complement of I, which needs
# no multipliers.  The equations preserve weighted degree, so the system
# is solved one grade at a time.
# -----------------------------------------------------------------------------

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .config import log as default_log, ANSATZ_DEGREE
from .errors import DomainError, InvariantError
from .mcforms import PfaffianSystem, compute_mc_forms, standard_pfaffian
from .monge import is_monge, y_is_invariant
from .nilrealize import case_basis, case_spec
from .rootsys import build_root_system
from .symalg import (Space, Polynomial, PolyVectorField, LinearSystem,
                     weighted_monomials, polynomial_inverse, rank_of_rows, charpoly)

__all__ = [ 'MongeSpec', 'SymmetryAlgebra', 'MongeSolver', 'PfaffianSolver',
            'monge_spec', 'build_determining', 'solve_symmetries',
            'grade_decomposition', 'pfaffian_symmetries', 'point_symmetry_check',
            'kernel_growth', 'killing_signature', 'contains_field',
            'monge_pfaffian', 'case_system' ]

# -----------------------------------------------------------------------------
# Quadratic Monge systems
# -----------------------------------------------------------------------------

class MongeSpec:
    '''
    z'^a = F^a_ij y'^i y'^j with F[a] a symmetric matrix of Rationals.
    '''
    def __init__(self, y_names, z_names, F, case_id=None):
        self.y_names = list(y_names)
        self.z_names = list(z_names)
        self.F = [ [ [ Fraction(v) for v in row ] for row in mat ] for mat in F ]
        self.case_id = case_id
        m = len(self.y_names)
        if len(self.F) != len(self.z_names):
            raise DomainError('one quadratic form is needed for every z')
        for mat in self.F:
            if len(mat) != m or any(len(row) != m for row in mat):
                raise DomainError(f'quadratic forms must be {m}x{m}')
            if any(mat[i][j] != mat[j][i] for i in range(m) for j in range(m)):
                raise DomainError('quadratic forms must be symmetric')

    def __repr__(self):
        return f'MongeSpec({self.case_id or self.z_names})'

    @property
    def coordinates(self):
        return [ 'x' ] + self.y_names + self.z_names

    @property
    def jet_names(self):
        return [ f'ẏ{name[1:]}' for name in self.y_names ]

    def base_space(self):
        return Space(self.coordinates)

    def jet_space(self):
        return Space(self.coordinates + self.jet_names)

    def weights(self, kind='graded'):
        '''
        Coordinate weights by name.  'graded' gives x, y, z the weights
        1, 2, 3 of the parabolic grading; 'uniform' gives every coordinate
        weight 1.  Derivatives get weight(y) - weight(x).
        '''
        if kind == 'uniform':
            base = { name: 1 for name in self.coordinates }
        elif kind == 'graded':
            base = { 'x': 1, **{ y: 2 for y in self.y_names }, **{ z: 3 for z in self.z_names } }
        else:
            raise DomainError(f'unknown weight scheme {kind!r}')
        for y, jet in zip(self.y_names, self.jet_names):
            base[jet] = base[y] - base['x']
        return base

    def quadratic(self, a, space):
        '''
        F^a as a polynomial in the derivatives over space.
        '''
        jets = [ space.variable(name) for name in self.jet_names ]
        total = space.zero()
        for i, row in enumerate(self.F[a]):
            for j, v in enumerate(row):
                if v:
                    total = total + jets[i] * jets[j] * v
        return total

def _zeros(m):
    return [ [ Fraction(0) ] * m for _ in range(m) ]

def monge_spec(case_id, ell, signature=None):
    '''
    The Monge system of a first order quadratic case.  signature=(r, s)
    selects kappa = diag(1,...,1,-1,...,-1) for IIIa and IVa; without it
    kappa is the anti-diagonal matrix of the matrix realization.
    '''
    spec, sigma = case_spec(case_id, ell)
    l = spec.rank
    if case_id == 'Ia':
        ys = [ f'y{i}' for i in range(l - 1) ]
        zs = [ f'z{i}' for i in range(1, l - 1) ]
        F = [ ]
        for i in range(1, l - 1):
            mat = _zeros(len(ys))
            mat[0][i] = mat[i][0] = Fraction(1, 2)
            F.append(mat)
        return MongeSpec(ys, zs, F, case_id)
    if case_id == 'IIa':
        ys = [ f'y{i}' for i in range(1, l) ]
        zs, F = [ ], [ ]
        for i in range(1, l):
            for j in range(i, l):
                zs.append(f'z{i}{j}')
                mat = _zeros(len(ys))
                if i == j:
                    mat[i - 1][i - 1] = Fraction(1)
                else:
                    mat[i - 1][j - 1] = mat[j - 1][i - 1] = Fraction(1, 2)
                F.append(mat)
        return MongeSpec(ys, zs, F, case_id)
    if case_id in ('IIIa', 'IVa'):
        m = 2 * l - 3 if spec.family == 'B' else 2 * l - 4
        ys = [ f'y{i}' for i in range(1, m + 1) ]
        mat = _zeros(m)
        if signature is None:
            for i in range(m):
                mat[i][m - 1 - i] = Fraction(1, 2)
        else:
            r, s = signature
            if r < 0 or s < 0 or r + s != m:
                raise DomainError(f'signature ({r}, {s}) of {case_id} at rank {l} must satisfy r + s = {m}')
            for i in range(m):
                mat[i][i] = Fraction(1, 2) if i < r else Fraction(-1, 2)
        return MongeSpec(ys, [ 'z' ], [ mat ], case_id)
    raise DomainError(f'case {case_id} is not a first order quadratic Monge system')

class SymmetryAlgebra:
    '''
    Finite dimensional algebra of vector fields with its structure
    constants: brackets maps (a, b), a < b, to {c: coefficient}.
    prolonged algebras carry derivative components along jet_coordinates.
    '''
    def __init__(self, space, fields, brackets, grades=None, jet_coordinates=(),
                 prolonged=False, name=None):
        self.space = space
        self.fields = list(fields)
        self.brackets = dict(brackets)
        self.grades = list(grades) if grades is not None else None
        self.jet_coordinates = tuple(jet_coordinates)
        self.prolonged = prolonged
        self.name = name

    def __len__(self):
        return len(self.fields)

    @property
    def dimension(self):
        return len(self.fields)

    def __repr__(self):
        return f'SymmetryAlgebra({self.name}, dim={self.dimension})'

    def bracket(self, a, b):
        if a < b:
            return dict(self.brackets.get((a, b), { }))
        if a > b:
            return { c: -v for c, v in self.brackets.get((b, a), { }).items() }
        return { }

    def base_fields(self):
        '''
        The fields with their derivative components dropped when the
        algebra is prolonged.
        '''
        if not self.prolonged:
            return list(self.fields)
        jets = set(self.jet_coordinates)
        return [ PolyVectorField(f.space, { self.space.names[i]: v for i, v in f.components.items()
                                            if self.space.names[i] not in jets })
                 for f in self.fields ]

def _field_vector(vf):
    # Coordinate free key: (direction, monomial as sorted (name, power) pairs)
    vector = { }
    names = vf.space.names
    for i, poly in vf.components.items():
        for exps, c in poly.terms.items():
            mono = tuple((names[k], e) for k, e in enumerate(exps) if e)
            vector[(names[i], mono)] = c
    return vector

# -----------------------------------------------------------------------------
# Solver for quadratic Monge systems
# -----------------------------------------------------------------------------

class MongeSolver:
    log = default_log

    def __init__(self, ms, degree=ANSATZ_DEGREE):
        self.ms = ms
        self.degree = degree
        self.base = ms.base_space()
        n = len(self.base)
        monomials = [ ]
        for d in range(degree + 1):
            monomials.extend(weighted_monomials((1,) * n, d))
        self.unknowns = [ (c, exps) for c in self.base.names for exps in monomials ]
        self._index = { key: k for k, key in enumerate(self.unknowns) }
        self.by_function = { }
        for k, (c, exps) in enumerate(self.unknowns):
            self.by_function.setdefault(c, [ ]).append((k, exps))

    def _equation(self, rows, key, terms):
        # terms are (scalar, function, variable) standing for scalar * d(function)/d(variable)
        for s, function, var in terms:
            if not s:
                continue
            v = self.base.index(var)
            for k, exps in self.by_function[function]:
                if exps[v]:
                    lowered = exps[:v] + (exps[v] - 1,) + exps[v+1:]
                    row = rows.setdefault((key, lowered), { })
                    row[k] = row.get(k, 0) + s * exps[v]

    def determining(self):
        ms = self.ms
        F = ms.F
        ys, zs = ms.y_names, ms.z_names
        m, q = len(ys), len(zs)
        rows = { }
        for b in range(q):
            self._equation(rows, ('Az', b), [ (1, 'x', zs[b]) ])
        for a in range(q):
            self._equation(rows, ('Cx', a), [ (1, zs[a], 'x') ])
            for i in range(m):
                terms = [ (2 * F[a][l][i], ys[l], 'x') for l in range(m) ]
                terms.append((-1, zs[a], ys[i]))
                self._equation(rows, ('a', a, i), terms)
            for i, j in combinations_with_replacement(range(m), 2):
                terms = [ ]
                for l in range(m):
                    terms.append((F[a][l][i], ys[l], ys[j]))
                    terms.append((F[a][l][j], ys[l], ys[i]))
                terms.append((-F[a][i][j], 'x', 'x'))
                terms.extend((-F[b][i][j], zs[a], zs[b]) for b in range(q))
                self._equation(rows, ('b', a, i, j), terms)
            for i, j, k in combinations_with_replacement(range(m), 3):
                terms = [ ]
                for l in range(m):
                    for b in range(q):
                        s = F[a][l][i] * F[b][j][k] + F[a][l][j] * F[b][i][k] + F[a][l][k] * F[b][i][j]
                        terms.append((2 * s, ys[l], zs[b]))
                terms.extend([ (-F[a][i][j], 'x', ys[k]), (-F[a][i][k], 'x', ys[j]), (-F[a][j][k], 'x', ys[i]) ])
                self._equation(rows, ('c', a, i, j, k), terms)
        system = LinearSystem(self.unknowns)
        for key in sorted(rows, key=repr):
            system.add_row(rows[key])
        self.log.debug('%s: %d unknowns, %d equations', ms, len(self.unknowns), len(system))
        return system

    def prolong(self, vector):
        '''
        Prolonged field on the jet space from a solution vector.
        '''
        ms = self.ms
        jet = ms.jet_space()
        comps = { c: jet.zero() for c in self.base.names }
        for k, v in vector.items():
            c, exps = self.unknowns[k]
            comps[c] = comps[c] + _monomial(jet, exps) * v
        DA = self.total_derivative(comps['x'])
        for y, name in zip(ms.y_names, ms.jet_names):
            comps[name] = self.total_derivative(comps[y]) - jet.variable(name) * DA
        return PolyVectorField(jet, comps)

    def total_derivative(self, f):
        ms = self.ms
        jet = f.space
        result = f.diff('x')
        for y, name in zip(ms.y_names, ms.jet_names):
            result = result + jet.variable(name) * f.diff(y)
        for a, z in enumerate(ms.z_names):
            result = result + ms.quadratic(a, jet) * f.diff(z)
        return result

    def check_symmetry(self, vf):
        '''
        D_x C^a - X(F^a) - F^a D_x A = 0 for every a.
        '''
        ms = self.ms
        jet = vf.space
        DA = self.total_derivative(vf.component('x'))
        for a, z in enumerate(ms.z_names):
            F = ms.quadratic(a, jet)
            residual = self.total_derivative(vf.component(z)) - vf(F) - F * DA
            if residual:
                raise InvariantError(f'field {vf} does not preserve z{a}: residual {residual}')

    def solve(self):
        system = self.determining()
        kernel = system.kernel()
        self.log.debug('%s: kernel dimension %d', self.ms, kernel.dimension)
        fields = [ ]
        for vector in kernel.basis:
            vf = self.prolong(vector)
            self.check_symmetry(vf)
            fields.append(vf)
        brackets = { }
        n = len(fields)
        for a, b in combinations(range(n), 2):
            image = fields[a].bracket(fields[b])
            coords = kernel.coordinates(self._unknown_vector(image))
            entry = { c: v for c, v in enumerate(coords) if v }
            if entry:
                brackets[(a, b)] = entry
        self.log.debug('%s: closure verified for %d brackets', self.ms, n * (n - 1) // 2)
        return SymmetryAlgebra(self.ms.jet_space(), fields, brackets,
                               jet_coordinates=self.ms.jet_names, prolonged=True,
                               name=self.ms.case_id)

    def _unknown_vector(self, vf):
        nbase = len(self.base)
        vector = { }
        for c in self.base.names:
            for exps, coeff in vf.component(c).terms.items():
                if any(exps[nbase:]):
                    raise InvariantError(f'bracket component along {c} depends on derivatives')
                key = (c, exps[:nbase])
                if key not in self._index:
                    raise InvariantError(f'bracket leaves the degree {self.degree} ansatz')
                vector[self._index[key]] = coeff
        return vector

def _monomial(space, exps):
    # Monomial over space from exponents of a prefix of its coordinates
    exps = tuple(exps) + (0,) * (len(space) - len(exps))
    return Polynomial(space, { exps: Fraction(1) })

def build_determining(ms, degree=ANSATZ_DEGREE):
    return MongeSolver(ms, degree).determining()

def solve_symmetries(ms, degree=ANSATZ_DEGREE):
    return MongeSolver(ms, degree).solve()

# -----------------------------------------------------------------------------
# Solver for weighted homogeneous Pfaffian systems
# -----------------------------------------------------------------------------

class PfaffianSolver:
    log = default_log

    def __init__(self, ps, weights=None, bound=None):
        self.ps = ps
        self.space = ps.space
        self.weights = tuple(weights) if weights is not None else ps.weights
        if len(self.weights) != len(self.space) or min(self.weights) < 1:
            raise DomainError('every coordinate needs a positive weight')
        self.bound = bound if bound is not None else max(self.weights)
        n = len(self.space)
        self.matrix = ps.coframe_matrix()
        inverse = polynomial_inverse(self.matrix)
        ngen = len(ps.generators)
        self.frame = [ PolyVectorField(self.space, { c: inverse[(c, b)] for c in range(n) })
                       for b in range(ngen, n) ]
        # (d theta^a)(d/dx_c, e_b) for every generator a, direction c and frame field b
        self.contraction = { }
        for a, theta in enumerate(ps.generators):
            dtheta = theta.d()
            for c in range(n):
                for b, e in enumerate(self.frame):
                    total = self.space.zero()
                    for k, f in e.components.items():
                        total = total + dtheta.component(c, k) * f
                    self.contraction[(a, c, b)] = total
        self.kernels = { }

    def grade_unknowns(self, j):
        unknowns = [ ]
        for c, w in enumerate(self.weights):
            for exps in weighted_monomials(self.weights, w + j):
                unknowns.append((c, exps))
        return unknowns

    def grade_system(self, j):
        unknowns = self.grade_unknowns(j)
        rows = { }
        for k, (c, exps) in enumerate(unknowns):
            mono = _monomial(self.space, exps)
            for a in range(len(self.ps.generators)):
                coefficient = self.matrix[(a, c)] * mono
                for b, e in enumerate(self.frame):
                    value = e(coefficient) + mono * self.contraction[(a, c, b)]
                    for out, v in value.terms.items():
                        row = rows.setdefault((a, b, out), { })
                        row[k] = row.get(k, 0) + v
        system = LinearSystem(unknowns)
        for key in sorted(rows):
            system.add_row(rows[key])
        return system

    def solve_grade(self, j):
        if j not in self.kernels:
            system = self.grade_system(j)
            kernel = system.kernel()
            self.log.debug('%s grade %d: %d unknowns, %d equations, kernel %d',
                           self.ps, j, len(system.unknowns), len(system), kernel.dimension)
            self.kernels[j] = kernel
        return self.kernels[j]

    def grades(self, bound=None):
        bound = self.bound if bound is None else bound
        return range(-max(self.weights), bound + 1)

    def _field(self, kernel, vector):
        comps = { }
        for k, v in vector.items():
            c, exps = kernel.unknowns[k]
            term = _monomial(self.space, exps) * v
            comps[c] = comps[c] + term if c in comps else term
        return PolyVectorField(self.space, comps)

    def solve(self):
        fields, grades, offsets = [ ], [ ], { }
        for j in self.grades():
            kernel = self.solve_grade(j)
            offsets[j] = len(fields)
            for vector in kernel.basis:
                fields.append(self._field(kernel, vector))
                grades.append(j)
        brackets = { }
        for a, b in combinations(range(len(fields)), 2):
            image = fields[a].bracket(fields[b])
            if not image:
                continue
            j = grades[a] + grades[b]
            if j not in offsets:
                raise InvariantError(f'bracket of grade {j} outside the solved range is not zero')
            kernel = self.kernels[j]
            index = { key: k for k, key in enumerate(kernel.unknowns) }
            vector = { }
            for c, poly in image.components.items():
                for exps, coeff in poly.terms.items():
                    if (c, exps) not in index:
                        raise InvariantError('bracket is not weighted homogeneous')
                    vector[index[(c, exps)]] = coeff
            coords = kernel.coordinates(vector)
            entry = { offsets[j] + n: v for n, v in enumerate(coords) if v }
            if entry:
                brackets[(a, b)] = entry
        self.log.debug('%s: closure verified, dimension %d', self.ps, len(fields))
        return SymmetryAlgebra(self.space, fields, brackets, grades=grades,
                               jet_coordinates=self.ps.jet_coordinates, name=self.ps.name)

def pfaffian_symmetries(ps, weights=None, bound=None):
    '''
    Symmetries of a Pfaffian system whose coefficients have weighted
    degree at most weight + bound.  bound defaults to the largest weight.
    '''
    return PfaffianSolver(ps, weights, bound).solve()

def kernel_growth(ps, weights=None, bounds=(1, 2, 3)):
    '''
    Number of symmetries found for each bound, without a closure check.
    '''
    solver = PfaffianSolver(ps, weights)
    result = [ ]
    for bound in bounds:
        result.append(sum(solver.solve_grade(j).dimension for j in solver.grades(bound)))
    return result

def monge_pfaffian(ms):
    '''
    The Pfaffian system dy^i - p^i dx, dz^a - F^a(p) dx on the space of x,
    y, z and the derivatives p, weighted 1, 2, 3 and 1.
    '''
    ps_names = [ f'p{name[1:]}' for name in ms.y_names ]
    space = Space(ms.coordinates + ps_names)
    weights = ms.weights('graded')
    dx = space.differential('x')
    generators, labels = [ ], [ ]
    for y, p in zip(ms.y_names, ps_names):
        generators.append(space.differential(y) - dx * space.variable(p))
        labels.append(f'theta_{y}')
    for a, z in enumerate(ms.z_names):
        F = space.zero()
        for i, row in enumerate(ms.F[a]):
            for j, v in enumerate(row):
                if v:
                    F = F + space.variable(ps_names[i]) * space.variable(ps_names[j]) * v
        generators.append(space.differential(z) - dx * F)
        labels.append(f'theta_{z}')
    weight_list = [ weights[name] for name in ms.coordinates ] + [ weights[j] for j in ms.jet_names ]
    return PfaffianSystem(space, generators, weight_list, labels=labels,
                          jet_coordinates=ps_names, name=f'{ms.case_id} Monge system')

def case_system(case_id, ell=None):
    '''
    Standard Pfaffian system of a named case from its computed coframe.
    The degree -1 coordinates other than the leader's are treated as jet
    coordinates when y is invariant under g_0.
    '''
    spec, sigma = case_spec(case_id, ell)
    g = case_basis(case_id, ell)
    cf = compute_mc_forms(g)
    rs = build_root_system(spec)
    jets = ()
    if y_is_invariant(rs, sigma, is_monge(rs, sigma)):
        jets = tuple(c for c, d, label in zip(g.coordinates, g.degrees, g.labels)
                     if d == -1 and label != g.leader)
    return standard_pfaffian(cf, jets)

# -----------------------------------------------------------------------------
# Properties of solved algebras
# -----------------------------------------------------------------------------

def _grade_of(key, weights):
    direction, mono = key
    return sum(weights[name] * e for name, e in mono) - weights[direction]

def grade_decomposition(sa, weights):
    '''
    Dimensions of the homogeneous parts of the algebra, as {grade: dim}.
    weights maps coordinate names to weights; prolonged algebras are
    graded through their point components.
    '''
    if not isinstance(weights, dict):
        weights = dict(zip(sa.space.names, weights))
    parts = { }
    columns = { }
    for vf in sa.base_fields():
        split = { }
        for key, c in _field_vector(vf).items():
            column = columns.setdefault(key, len(columns))
            split.setdefault(_grade_of(key, weights), { })[column] = c
        for j, row in split.items():
            parts.setdefault(j, [ ]).append(row)
    dims = { j: rank_of_rows(rows, len(columns)) for j, rows in parts.items() }
    return { j: d for j, d in sorted(dims.items()) if d }

def point_symmetry_check(sa):
    '''
    True if no component along a non-jet coordinate depends on a jet
    coordinate.
    '''
    jets = [ sa.space.index(name) for name in sa.jet_coordinates ]
    if not jets:
        return True
    for vf in sa.fields:
        for i, poly in vf.components.items():
            if i in jets:
                continue
            if any(exps[k] for exps in poly.terms for k in jets):
                return False
    return True

def killing_signature(sa):
    '''
    (positive, negative, zero) eigenvalue counts of the Killing form
    B(X, Y) = tr(ad X ad Y).  Counted with Descartes' rule of signs, which
    is exact because a symmetric matrix has only real eigenvalues.
    '''
    n = sa.dimension
    ad = [ [ [ Fraction(0) ] * n for _ in range(n) ] for _ in range(n) ]
    for a in range(n):
        for b in range(n):
            for c, v in sa.bracket(a, b).items():
                ad[a][c][b] = v
    form = [ [ sum(ad[a][c][d] * ad[b][d][c] for c in range(n) for d in range(n)) for b in range(n) ]
             for a in range(n) ]
    coeffs = charpoly(form)
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1
    degree = len(coeffs) - 1
    positive = _sign_changes(coeffs)
    negative = _sign_changes([ c * (-1) ** (degree - k) for k, c in enumerate(coeffs) ])
    return positive, negative, zero

def _sign_changes(coeffs):
    signs = [ c > 0 for c in coeffs if c ]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

def contains_field(sa, vf):
    '''
    True if vf lies in the span of the algebra.  Prolonged algebras are
    compared through their point components.
    '''
    rows = [ _field_vector(f) for f in sa.base_fields() ]
    target = _field_vector(vf)
    if sa.prolonged:
        jets = set(sa.jet_coordinates)
        target = { key: c for key, c in target.items() if key[0] not in jets }
    columns = { }
    dense = [ ]
    for row in rows + [ target ]:
        dense.append({ columns.setdefault(key, len(columns)): c for key, c in row.items() })
    return rank_of_rows(dense[:-1], len(columns)) == rank_of_rows(dense, len(columns))
