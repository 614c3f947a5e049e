# -----------------------------------------------------------------------------
# mongetools: nilrealize.py
#
# Concrete graded nilpotent Lie algebras g_-.  The classical algebras are
# realized with the split forms
#
#     sl(n)     trace free n x n matrices
#     sp(l)     M^t J + J M = 0,  J = [[0, K_l], [-K_l, 0]]
#     so(n)     M^t K + K M = 0,  K the n x n anti-diagonal matrix
#
# with Cartan subalgebra spanned by H_i = E_ii - E_{i+1,i+1} (type A) or
# H_i = E_ii - E_{n+1-i,n+1-i} (types B, C, D).  Root vectors are read off
# from the weights of the matrix units E_ab.  G2 comes from a Chevalley
# basis table instead.
#
# Indices of E_ab are 1-based as in print; everything else is 0-based.
# -----------------------------------------------------------------------------

from fractions import Fraction
from itertools import combinations

from .errors import DomainError, UnsupportedError, InvariantError
from .grading import Sigma, height
from .rootsys import AlgebraSpec, Root
from .symalg import Space, PolyMatrix, MatrixSpan, LinearSystem

__all__ = [ 'MatrixAlgebra', 'GradedNilpotent', 'build_matrix_algebra',
            'root_space', 'realize_negative_part', 'g2_chevalley',
            'g2_negative_part',
            'dual_structure_equations', 'format_structure_form',
            'case_spec', 'case_basis', 'published_brackets', 'check_jacobi',
            'check_graded', 'bracket_mismatches', 'CASES' ]

# Constant matrices live over the space with no coordinates
CONSTANTS = Space(())

def E(n, i, j, value=1):
    return PolyMatrix.unit(n, CONSTANTS, i, j, value)

def _antidiagonal(n):
    return PolyMatrix(n, n, CONSTANTS, { (i, n - 1 - i): 1 for i in range(n) })

class MatrixAlgebra:
    '''
    Split real form of a classical simple Lie algebra as a matrix algebra.
    '''
    def __init__(self, spec):
        if spec.family not in 'ABCD':
            raise UnsupportedError(f'no matrix realization for {spec}')
        self.spec = spec
        l = self.rank = spec.rank
        family = spec.family
        if family == 'A':
            self.n = l + 1
            self.form = None
            self.cartan_basis = [ E(self.n, i, i) - E(self.n, i + 1, i + 1) for i in range(1, l + 1) ]
        else:
            self.n = { 'B': 2 * l + 1, 'C': 2 * l, 'D': 2 * l }[family]
            if family == 'C':
                K = _antidiagonal(l)
                entries = { }
                for (i, j), v in K.entries.items():
                    entries[(i, l + j)] = v
                    entries[(l + i, j)] = -v
                self.form = PolyMatrix(self.n, self.n, CONSTANTS, entries)
            else:
                self.form = _antidiagonal(self.n)
            self.cartan_basis = [ E(self.n, i, i) - E(self.n, self.n + 1 - i, self.n + 1 - i)
                                  for i in range(1, l + 1) ]
        self.simple_roots = [ self._simple_root(i) for i in range(l) ]

    def __repr__(self):
        return f'MatrixAlgebra({self.spec})'

    @property
    def width(self):
        return self.n if self.spec.family == 'A' else self.rank

    def _unit(self, k):
        return tuple(1 if m == k else 0 for m in range(self.width))

    def _simple_root(self, i):
        l, family = self.rank, self.spec.family
        if family == 'A' or i < l - 1:
            return tuple(a - b for a, b in zip(self._unit(i), self._unit(i + 1)))
        if family == 'B':
            return self._unit(l - 1)
        if family == 'C':
            return tuple(2 * a for a in self._unit(l - 1))
        return tuple(a + b for a, b in zip(self._unit(l - 2), self._unit(l - 1)))

    def row_weight(self, a):
        '''
        Weight of the 1-based row index a, in the coordinates L_k.
        '''
        if self.spec.family == 'A':
            return self._unit(a - 1)
        if a <= self.rank:
            return self._unit(a - 1)
        if a >= self.n + 1 - self.rank:
            return tuple(-c for c in self._unit(self.n - a))
        return (0,) * self.rank

    def unit_weight(self, a, b):
        return tuple(x - y for x, y in zip(self.row_weight(a), self.row_weight(b)))

    def root_weight(self, beta):
        weight = [0] * self.width
        for c, alpha in zip(beta, self.simple_roots):
            for k, v in enumerate(alpha):
                weight[k] += c * v
        return tuple(weight)

    def contains(self, m):
        if self.form is None:
            return not m.trace()
        return not (m.transpose() @ self.form + self.form @ m)

def build_matrix_algebra(spec):
    return MatrixAlgebra(spec)

def root_space(ma, beta):
    '''
    The root vector of beta, normalized so that its first nonzero entry in
    row-major order is 1.
    '''
    beta = Root(beta)
    target = ma.root_weight(beta)
    n = ma.n
    candidates = [ (a, b) for a in range(1, n + 1) for b in range(1, n + 1)
                   if a != b and ma.unit_weight(a, b) == target ]
    if not candidates or not any(beta):
        raise DomainError(f'{beta} is not a root of {ma.spec}')
    system = LinearSystem(candidates)
    if ma.form is not None:
        rows = { }
        for k, (a, b) in enumerate(candidates):
            # Entries of M^t G + G M for M = E_ab
            for (i, j), v in ma.form.entries.items():
                if i == a - 1:
                    _accumulate(rows, (b - 1, j), k, v.constant_term())
                if j == a - 1:
                    _accumulate(rows, (i, b - 1), k, v.constant_term())
        for key in sorted(rows):
            system.add_row(rows[key])
    kernel = system.kernel()
    if kernel.dimension != 1:
        raise InvariantError(f'root space of {beta} in {ma.spec} has dimension {kernel.dimension}')
    vector = kernel.dense()[0]
    lead = next(v for v in vector if v)
    matrix = PolyMatrix(n, n, CONSTANTS, { (a - 1, b - 1): c / lead for (a, b), c in zip(candidates, vector) if c })
    if not ma.contains(matrix):
        raise InvariantError(f'root vector of {beta} is not in {ma.spec}')
    a, b = candidates[0]
    for i, H in enumerate(ma.cartan_basis):
        value = H[(a - 1, a - 1)].constant_term() - H[(b - 1, b - 1)].constant_term()
        if H.commutator(matrix) != matrix * value:
            raise InvariantError(f'root vector of {beta} is not an eigenvector of H{i + 1}')
    return matrix

def _accumulate(rows, key, column, value):
    row = rows.setdefault(key, { })
    row[column] = row.get(column, 0) + value

# -----------------------------------------------------------------------------
# Graded nilpotent Lie algebras
# -----------------------------------------------------------------------------

class GradedNilpotent:
    '''
    Negatively graded nilpotent Lie algebra given by a labeled basis and
    structure constants.  brackets maps index pairs (a, b) with a < b to
    {c: coefficient}; matrices, when present, realize the basis.
    '''
    def __init__(self, labels, degrees, brackets=None, matrices=None,
                 coordinates=None, leader=None, name=None):
        self.labels = list(labels)
        self.degrees = list(degrees)
        if len(self.labels) != len(self.degrees):
            raise DomainError('every basis element needs a degree')
        self._index = { label: n for n, label in enumerate(self.labels) }
        if len(self._index) != len(self.labels):
            raise DomainError('repeated basis label')
        self.brackets = { }
        for (a, b), vector in (brackets or { }).items():
            self._add(self.index(a), self.index(b), vector)
        self.matrices = matrices
        self.coordinates = list(coordinates or [ label.lower() for label in self.labels ])
        self.leader = leader
        self.name = name

    def _add(self, a, b, vector):
        vector = { self.index(c): Fraction(v) for c, v in vector.items() if v }
        if a == b:
            if vector:
                raise DomainError('the bracket of an element with itself is zero')
            return
        if a > b:
            a, b = b, a
            vector = { c: -v for c, v in vector.items() }
        merged = self.brackets.setdefault((a, b), { })
        for c, v in vector.items():
            merged[c] = merged.get(c, 0) + v
            if not merged[c]:
                del merged[c]
        if not merged:
            del self.brackets[(a, b)]

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f'GradedNilpotent({self.name or self.labels})'

    def index(self, label):
        if isinstance(label, int):
            if not 0 <= label < len(self.labels):
                raise DomainError(f'basis index {label} out of range')
            return label
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f'unknown basis element {label!r}') from None

    @property
    def depth(self):
        return -min(self.degrees)

    def dimension(self, j):
        return sum(1 for d in self.degrees if d == j)

    def labels_of_degree(self, j):
        return [ label for label, d in zip(self.labels, self.degrees) if d == j ]

    def bracket(self, a, b):
        a, b = self.index(a), self.index(b)
        if a < b:
            return dict(self.brackets.get((a, b), { }))
        if a > b:
            return { c: -v for c, v in self.brackets.get((b, a), { }).items() }
        return { }

    def bracket_vectors(self, u, v):
        result = { }
        for a, x in u.items():
            for b, y in v.items():
                for c, k in self.bracket(a, b).items():
                    result[c] = result.get(c, 0) + x * y * k
        return { c: k for c, k in result.items() if k }

    def ad_matrix(self, a):
        '''
        Matrix of ad(e_a) on the basis: column b holds [e_a, e_b].
        '''
        n = len(self.labels)
        matrix = [ [ Fraction(0) ] * n for _ in range(n) ]
        for b in range(n):
            for c, k in self.bracket(a, b).items():
                matrix[c][b] = k
        return matrix

    def bracket_table(self):
        return { (self.labels[a], self.labels[b]): { self.labels[c]: k for c, k in vec.items() }
                 for (a, b), vec in sorted(self.brackets.items()) }

    @classmethod
    def from_matrices(cls, labels, degrees, matrices, **kwargs):
        '''
        Structure constants from matrix commutators, re-expanded over the
        basis.  Raises InvariantError if a commutator leaves the span.
        '''
        span = MatrixSpan(matrices)
        brackets = { }
        for a, b in combinations(range(len(matrices)), 2):
            commutator = matrices[a].commutator(matrices[b])
            if commutator:
                coeffs = span.expand(commutator)
                brackets[(a, b)] = { c: k.constant_term() for c, k in enumerate(coeffs) if k }
        return cls(labels, degrees, brackets, matrices=list(matrices), **kwargs)

    def change_basis(self, labels, degrees, vectors, **kwargs):
        '''
        The subalgebra spanned by vectors (maps old label -> coefficient)
        with the new labels.
        '''
        n = len(self.labels)
        vectors = [ { self.index(k): Fraction(v) for k, v in vec.items() } for vec in vectors ]
        rows = [ PolyMatrix(1, n, CONSTANTS, { (0, k): v for k, v in vec.items() }) for vec in vectors ]
        span = MatrixSpan(rows)
        brackets = { }
        for a, b in combinations(range(len(vectors)), 2):
            image = self.bracket_vectors(vectors[a], vectors[b])
            if image:
                coeffs = span.expand(PolyMatrix(1, n, CONSTANTS, { (0, k): v for k, v in image.items() }))
                brackets[(a, b)] = { c: k.constant_term() for c, k in enumerate(coeffs) if k }
        return GradedNilpotent(labels, degrees, brackets, **kwargs)

def check_jacobi(g):
    '''
    First basis triple (as labels) violating the Jacobi identity, or None.
    '''
    n = len(g)
    for a, b, c in combinations(range(n), 3):
        total = { }
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for k, v in g.bracket_vectors({ x: 1 }, g.bracket(y, z)).items():
                total[k] = total.get(k, 0) + v
        if any(total.values()):
            return (g.labels[a], g.labels[b], g.labels[c])
    return None

def check_graded(g):
    '''
    First basis pair whose bracket has a component of the wrong degree,
    or None.
    '''
    for (a, b), vector in sorted(g.brackets.items()):
        if any(g.degrees[c] != g.degrees[a] + g.degrees[b] for c in vector):
            return (g.labels[a], g.labels[b])
    return None

def bracket_mismatches(g, table):
    '''
    Label pairs on which g disagrees with a bracket table given as
    {(A, B): {C: coefficient}}; pairs missing from the table are zero.
    '''
    expected = GradedNilpotent(g.labels, g.degrees, table)
    keys = set(expected.brackets) | set(g.brackets)
    return sorted((g.labels[a], g.labels[b]) for a, b in keys
                  if expected.brackets.get((a, b)) != g.brackets.get((a, b)))

def realize_negative_part(ma, rs, sigma):
    '''
    g_- spanned by root vectors of the negative roots of positive height,
    degree -1 first.  Labels are Y followed by the coefficients of the
    positive root, e.g. Y011.
    '''
    sigma = Sigma(sigma).check(rs)
    if rs.spec != ma.spec:
        raise DomainError(f'root system {rs.spec} does not match {ma.spec}')
    labels, degrees, matrices = [ ], [ ], [ ]
    depth = height(rs.highest_root, sigma)
    for j in range(1, depth + 1):
        for beta in rs.positive_roots:
            if height(beta, sigma) == j:
                labels.append('Y' + ''.join(str(c) for c in beta))
                degrees.append(-j)
                matrices.append(root_space(ma, -beta))
    return GradedNilpotent.from_matrices(labels, degrees, matrices, name=f'{ma.spec}{sigma}')

def dual_structure_equations(g):
    '''
    d theta^c = - sum over a < b of c^c_ab theta^a ^ theta^b, one entry
    (label, {(a, b): coefficient}) per basis element in basis order.
    '''
    result = [ ]
    for c, label in enumerate(g.labels):
        terms = { }
        for (a, b), vector in sorted(g.brackets.items()):
            if c in vector:
                terms[(a, b)] = -vector[c]
        result.append((label, terms))
    return result

def format_structure_form(g, terms):
    if not terms:
        return '0'
    parts = [ ]
    for (a, b), k in sorted(terms.items()):
        if k < 0:
            a, b, k = b, a, -k
        coeff = '' if k == 1 else (str(k) if k.denominator == 1 else f'({k})')
        parts.append(f'{coeff}θ{g.coordinates[a]}∧θ{g.coordinates[b]}')
    return ' + '.join(parts)

# -----------------------------------------------------------------------------
# G2 in a Chevalley basis
# -----------------------------------------------------------------------------

# Negative root vectors Y1..Y6 for the roots below (coefficients of the
# positive root) and their nonzero brackets
G2_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
G2_BRACKETS = {
    ('Y1', 'Y2'): { 'Y3': -1 },
    ('Y1', 'Y3'): { 'Y4': -2 },
    ('Y1', 'Y4'): { 'Y5': 3 },
    ('Y2', 'Y5'): { 'Y6': 1 },
    ('Y3', 'Y4'): { 'Y6': 3 },
}

def g2_negative_part():
    labels = [ f'Y{k}' for k in range(1, 7) ]
    return GradedNilpotent(labels, [ -sum(r) for r in G2_ROOTS ], G2_BRACKETS, name='G2')

def g2_chevalley(sigma):
    sigma = Sigma(sigma)
    if sigma == (0,):
        return case_basis('Va')
    if sigma == (0, 1):
        return case_basis('Vb')
    raise UnsupportedError(f'G2{sigma} is not a Monge grading with a built in basis')

# -----------------------------------------------------------------------------
# Named bases for the non-rigid Monge gradings
# -----------------------------------------------------------------------------

# case id -> (family, first rank, last rank or None, Sigma as a function of l)
CASES = {
    'Ia':   ('A', 3, None, lambda l: (1, 2, 3)),
    'Ib':   ('A', 2, None, lambda l: (1, 2)),
    'IIa':  ('C', 3, None, lambda l: (l - 1, l)),
    'IIb':  ('C', 3, 3, lambda l: (1, 2, 3)),
    'IIIa': ('B', 2, None, lambda l: (1, 2)),
    'IIIb': ('B', 2, 2, lambda l: (2,)),
    'IIIc': ('B', 3, 3, lambda l: (2, 3)),
    'IIId': ('B', 3, 3, lambda l: (1, 2, 3)),
    'IVa':  ('D', 4, None, lambda l: (1, 2)),
    'Va':   ('G', 2, 2, lambda l: (1,)),
    'Vb':   ('G', 2, 2, lambda l: (1, 2)),
}

def case_spec(case_id, ell=None):
    '''
    (AlgebraSpec, Sigma) of a named case.  ell defaults to the smallest
    rank for which the case exists.
    '''
    try:
        family, first, last, sigma = CASES[case_id]
    except KeyError:
        raise DomainError(f'unknown case {case_id!r}') from None
    ell = first if ell is None else ell
    if ell < first or (last is not None and ell > last):
        raise DomainError(f'case {case_id} does not exist for rank {ell}')
    return AlgebraSpec(family, ell), Sigma.from_labels(sigma(ell))

def _from_generators(name, generators, derived, order, degrees):
    '''
    Build a basis from degree -1 matrices and a list of derived elements
    (label, (A, B), scale) meaning label = scale * [A, B].
    '''
    elements = dict(generators)
    for label, (a, b), scale in derived:
        elements[label] = elements[a].commutator(elements[b]) * Fraction(scale)
    return GradedNilpotent.from_matrices(order, [ degrees[label] for label in order ],
                                         [ elements[label] for label in order ],
                                         leader='X', name=name)

def _case_ia(l):
    n = l + 1
    m = l - 2
    gens = [ ('X', E(n, 3, 2)), ('P0', E(n, 2, 1)) ] + [ (f'P{i}', E(n, i + 3, 3)) for i in range(1, m + 1) ]
    derived = [ ('Y0', ('P0', 'X'), 1) ] + [ (f'Y{i}', (f'P{i}', 'X'), 1) for i in range(1, m + 1) ]
    derived += [ (f'Z{i}', ('P0', f'Y{i}'), 1) for i in range(1, m + 1) ]
    order = [ 'P0' ] + [ f'P{i}' for i in range(1, m + 1) ] + [ 'X', 'Y0' ] + \
            [ f'Y{i}' for i in range(1, m + 1) ] + [ f'Z{i}' for i in range(1, m + 1) ]
    degrees = { label: -{ 'P': 1, 'X': 1, 'Y': 2, 'Z': 3 }[label[0]] for label in order }
    return _from_generators(f'Ia A{l}', gens, derived, order, degrees)

def _case_ib(l):
    n = l + 1
    gens = [ ('X', E(n, 2, 1)) ] + [ (f'P{i}', E(n, i + 2, 2)) for i in range(1, l) ]
    derived = [ (f'Y{i}', (f'P{i}', 'X'), 1) for i in range(1, l) ]
    order = [ f'P{i}' for i in range(1, l) ] + [ 'X' ] + [ f'Y{i}' for i in range(1, l) ]
    degrees = { label: -1 if label[0] in 'PX' else -2 for label in order }
    return _from_generators(f'Ib A{l}', gens, derived, order, degrees)

def _case_iia(l):
    n = 2 * l
    gens = [ ('X', E(n, l + 1, l)) ] + [ (f'P{i}', E(n, l, i) - E(n, 2 * l + 1 - i, l + 1)) for i in range(1, l) ]
    derived = [ (f'Y{i}', (f'P{i}', 'X'), 1) for i in range(1, l) ]
    zs = [ ]
    for i in range(1, l):
        for j in range(i, l):
            derived.append((f'Z{i}{j}', (f'P{i}', f'Y{j}'), Fraction(1, 2) if i == j else 1))
            zs.append(f'Z{i}{j}')
    order = [ f'P{i}' for i in range(1, l) ] + [ 'X' ] + [ f'Y{i}' for i in range(1, l) ] + zs
    degrees = { label: -{ 'P': 1, 'X': 1, 'Y': 2, 'Z': 3 }[label[0]] for label in order }
    return _from_generators(f'IIa C{l}', gens, derived, order, degrees)

def _case_orthogonal(l, family):
    n = 2 * l + 1 if family == 'B' else 2 * l
    m = n - 4
    gens = [ ('X', E(n, 2, 1) - E(n, n, n - 1)), ('Z', E(n, n, 2) - E(n, n - 1, 1)) ]
    gens += [ (f'P{i}', E(n, i + 2, 2) - E(n, n - 1, n - i - 1)) for i in range(1, m + 1) ]
    derived = [ (f'Y{i}', (f'P{i}', 'X'), 1) for i in range(1, m + 1) ]
    order = [ f'P{i}' for i in range(1, m + 1) ] + [ 'X' ] + [ f'Y{i}' for i in range(1, m + 1) ] + [ 'Z' ]
    degrees = { label: -{ 'P': 1, 'X': 1, 'Y': 2, 'Z': 3 }[label[0]] for label in order }
    case = 'IIIa' if family == 'B' else 'IVa'
    return _from_generators(f'{case} {family}{l}', gens, derived, order, degrees)

def _case_iib():
    n = 6
    gens = [ ('X', E(n, 3, 2) - E(n, 5, 4)), ('P1', E(n, 2, 1) - E(n, 6, 5)), ('P2', E(n, 4, 3)) ]
    derived = [ ('Y1', ('P1', 'X'), 1), ('Y2', ('P2', 'X'), 1), ('Z1', ('P1', 'Y2'), 1),
                ('Z2', ('X', 'Y2'), 1), ('Z3', ('X', 'Z1'), 1), ('Z4', ('P1', 'Z3'), 1) ]
    order = [ 'P1', 'P2', 'X', 'Y1', 'Y2', 'Z1', 'Z2', 'Z3', 'Z4' ]
    degrees = dict(P1=-1, P2=-1, X=-1, Y1=-2, Y2=-2, Z1=-3, Z2=-3, Z3=-4, Z4=-5)
    return _from_generators('IIb C3', gens, derived, order, degrees)

def _case_iiib():
    ma = MatrixAlgebra(AlgebraSpec('B', 2))
    gens = [ ('X', root_space(ma, (0, -1))), ('P', root_space(ma, (-1, -1))) ]
    derived = [ ('Y', ('P', 'X'), 1) ]
    return _from_generators('IIIb B2', gens, derived, [ 'P', 'X', 'Y' ], dict(P=-1, X=-1, Y=-2))

def _case_iiic():
    n = 7
    gens = [ ('X', E(n, 4, 3) - E(n, 5, 4)), ('Q1', E(n, 3, 2) - E(n, 6, 5)), ('Q2', E(n, 3, 1) - E(n, 7, 5)) ]
    derived = [ ('P1', ('Q1', 'X'), 1), ('P2', ('Q2', 'X'), 1), ('Y1', ('P1', 'X'), 1),
                ('Y2', ('P2', 'X'), 1), ('Z', ('Q1', 'Y2'), 1) ]
    order = [ 'Q1', 'Q2', 'X', 'P1', 'P2', 'Y1', 'Y2', 'Z' ]
    degrees = dict(Q1=-1, Q2=-1, X=-1, P1=-2, P2=-2, Y1=-3, Y2=-3, Z=-4)
    return _from_generators('IIIc B3', gens, derived, order, degrees)

def _case_iiid():
    n = 7
    gens = [ ('X', E(n, 3, 2) - E(n, 6, 5)), ('P1', E(n, 2, 1) - E(n, 7, 6)), ('P2', E(n, 4, 3) - E(n, 5, 4)) ]
    derived = [ ('Y1', ('P1', 'X'), 1), ('Y2', ('P2', 'X'), 1), ('Z1', ('P1', 'Y2'), 1),
                ('Z2', ('P2', 'Y2'), 1), ('Z3', ('P1', 'Z2'), 1), ('Z4', ('X', 'Z3'), 1) ]
    order = [ 'P1', 'P2', 'X', 'Y1', 'Y2', 'Z1', 'Z2', 'Z3', 'Z4' ]
    degrees = dict(P1=-1, P2=-1, X=-1, Y1=-2, Y2=-2, Z1=-3, Z2=-3, Z3=-4, Z4=-5)
    return _from_generators('IIId B3', gens, derived, order, degrees)

def _case_g2(case_id):
    g2 = g2_negative_part()
    if case_id == 'Va':
        labels = [ 'Q', 'X', 'P', 'Y', 'Z' ]
        degrees = [ -1, -1, -2, -3, -3 ]
        vectors = [ { 'Y3': 1 }, { 'Y1': 1 }, { 'Y4': 2 }, { 'Y5': -6 }, { 'Y6': 6 } ]
    else:
        labels = [ 'R', 'X', 'Q', 'P', 'Y', 'Z' ]
        degrees = [ -1, -1, -2, -3, -4, -5 ]
        vectors = [ { 'Y2': 1 }, { 'Y1': 1 }, { 'Y3': 1 }, { 'Y4': 2 }, { 'Y5': -6 }, { 'Y6': 6 } ]
    return g2.change_basis(labels, degrees, vectors, leader='X', name=f'{case_id} G2')

def case_basis(case_id, ell=None):
    '''
    g_- of a named case in the basis X, P, Q, R, Y, Z used for its
    structure equations.
    '''
    spec, sigma = case_spec(case_id, ell)
    l = spec.rank
    if case_id == 'Ia':
        return _case_ia(l)
    if case_id == 'Ib':
        return _case_ib(l)
    if case_id == 'IIa':
        return _case_iia(l)
    if case_id in ('IIIa', 'IVa'):
        return _case_orthogonal(l, spec.family)
    if case_id == 'IIb':
        return _case_iib()
    if case_id == 'IIIb':
        return _case_iiib()
    if case_id == 'IIIc':
        return _case_iiic()
    if case_id == 'IIId':
        return _case_iiid()
    return _case_g2(case_id)

def published_brackets(case_id, ell=None):
    '''
    The published bracket table of a case as {(A, B): {C: coefficient}}.
    '''
    spec, sigma = case_spec(case_id, ell)
    l = spec.rank
    table = { }
    if case_id == 'Ia':
        m = l - 2
        table[('P0', 'X')] = { 'Y0': 1 }
        for i in range(1, m + 1):
            table[(f'P{i}', 'X')] = { f'Y{i}': 1 }
            table[('P0', f'Y{i}')] = { f'Z{i}': 1 }
            table[(f'P{i}', 'Y0')] = { f'Z{i}': 1 }
    elif case_id == 'Ib':
        for i in range(1, l):
            table[(f'P{i}', 'X')] = { f'Y{i}': 1 }
    elif case_id == 'IIa':
        for h in range(1, l):
            table[(f'P{h}', 'X')] = { f'Y{h}': 1 }
            for i in range(1, l):
                z = f'Z{min(h, i)}{max(h, i)}'
                table[(f'P{h}', f'Y{i}')] = { z: 2 if h == i else 1 }
    elif case_id in ('IIIa', 'IVa'):
        m = (2 * l + 1 if spec.family == 'B' else 2 * l) - 4
        for h in range(1, m + 1):
            table[(f'P{h}', 'X')] = { f'Y{h}': 1 }
            table[(f'P{h}', f'Y{m + 1 - h}')] = { 'Z': 1 }
    elif case_id == 'IIb':
        table.update({
            ('P1', 'X'): { 'Y1': 1 }, ('P1', 'Y2'): { 'Z1': 1 }, ('P1', 'Z2'): { 'Z3': 2 },
            ('P1', 'Z3'): { 'Z4': 1 }, ('P2', 'X'): { 'Y2': 1 }, ('P2', 'Y1'): { 'Z1': 1 },
            ('X', 'Y2'): { 'Z2': 1 }, ('X', 'Z1'): { 'Z3': 1 }, ('Y1', 'Y2'): { 'Z3': 1 },
            ('Y1', 'Z1'): { 'Z4': 1 },
        })
    elif case_id == 'IIIb':
        table[('P', 'X')] = { 'Y': 1 }
    elif case_id == 'IIIc':
        table.update({
            ('Q1', 'X'): { 'P1': 1 }, ('Q1', 'Y2'): { 'Z': 1 }, ('Q2', 'X'): { 'P2': 1 },
            ('Q2', 'Y1'): { 'Z': -1 }, ('X', 'P1'): { 'Y1': -1 }, ('X', 'P2'): { 'Y2': -1 },
            ('P1', 'P2'): { 'Z': -1 },
        })
    elif case_id == 'IIId':
        table.update({
            ('P1', 'X'): { 'Y1': 1 }, ('P1', 'Y2'): { 'Z1': 1 }, ('P1', 'Z2'): { 'Z3': 1 },
            ('P2', 'X'): { 'Y2': 1 }, ('P2', 'Y1'): { 'Z1': 1 }, ('P2', 'Y2'): { 'Z2': 1 },
            ('P2', 'Z1'): { 'Z3': 1 }, ('X', 'Z3'): { 'Z4': 1 }, ('Y1', 'Z2'): { 'Z4': -1 },
            ('Y2', 'Z1'): { 'Z4': -1 },
        })
    elif case_id == 'Va':
        table.update({ ('Q', 'X'): { 'P': 1 }, ('P', 'X'): { 'Y': 1 }, ('Q', 'P'): { 'Z': 1 } })
    else:
        table.update({
            ('R', 'X'): { 'Q': 1 }, ('Q', 'X'): { 'P': 1 }, ('P', 'X'): { 'Y': 1 },
            ('Y', 'R'): { 'Z': 1 }, ('Q', 'P'): { 'Z': 1 },
        })
    return table
