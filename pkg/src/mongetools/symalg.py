# -----------------------------------------------------------------------------
# mongetools: symalg.py
#
# Exact symbolic kernel.  Multivariate polynomials with rational
# coefficients over a named coordinate space, differential forms of degree
# at most two, polynomial vector fields and matrices, and sparse linear
# systems whose kernels are computed exactly with sympy's DomainMatrix over
# QQ.  Nothing in here ever touches floating point.
# -----------------------------------------------------------------------------

from fractions import Fraction
from functools import lru_cache
from itertools import product

from sympy import QQ, symbols
from sympy.polys.monomials import itermonomials
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.sdm import SDM

from .errors import DomainError, SpaceMismatchError, UnsupportedError, InvariantError

__all__ = [ 'Rational', 'Space', 'Polynomial', 'PolyForm', 'PolyVectorField',
            'PolyMatrix', 'MatrixSpan', 'LinearSystem', 'Kernel',
            'nullspace', 'wedge', 'exterior_derivative', 'weighted_monomials',
            'rank_of_rows', 'charpoly', 'invert', 'polynomial_inverse' ]

Rational = Fraction

def _is_scalar(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

def _format_scalar(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'

# -----------------------------------------------------------------------------
# Coordinate spaces
# -----------------------------------------------------------------------------

class Space:
    '''
    An ordered tuple of coordinate names.  Two spaces are the same space
    exactly when their names agree, so spaces may be rebuilt freely.
    '''
    __slots__ = ('names', '_index')

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise DomainError(f'repeated coordinate name in {names}')
        self.names = names
        self._index = { name: n for n, name in enumerate(names) }

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Space) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f'Space({self.names!r})'

    def index(self, name):
        if isinstance(name, int):
            if not 0 <= name < len(self.names):
                raise DomainError(f'coordinate index {name} out of range')
            return name
        try:
            return self._index[name]
        except KeyError:
            raise DomainError(f'unknown coordinate {name!r}') from None

    def zero(self):
        return Polynomial(self)

    def constant(self, value):
        return Polynomial(self, { (0,) * len(self.names): Fraction(value) })

    def one(self):
        return self.constant(1)

    def variable(self, name):
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return Polynomial(self, { tuple(exps): Fraction(1) })

    def variables(self):
        return [ self.variable(name) for name in self.names ]

    def differential(self, name):
        return PolyForm(self, 1, { (self.index(name),): self.one() })

# -----------------------------------------------------------------------------
# Polynomials
# -----------------------------------------------------------------------------

class Polynomial:
    '''
    Polynomial with Rational coefficients.  terms maps exponent tuples
    (one entry per coordinate of the space) to nonzero coefficients.
    '''
    __slots__ = ('space', 'terms')

    def __init__(self, space, terms=None):
        self.space = space
        self.terms = { exps: Fraction(c) for exps, c in (terms or { }).items() if c }

    # Coercion of numbers and checking of spaces
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.space != self.space:
                raise SpaceMismatchError(f'cannot combine polynomials over {self.space.names} and {other.space.names}')
            return other
        if _is_scalar(other):
            return self.space.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Polynomial(self.space, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.space, { exps: -c for exps, c in self.terms.items() })

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return Polynomial(self.space, { exps: c * other for exps, c in self.terms.items() })
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = { }
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return Polynomial(self.space, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other) or other == 0:
            raise DomainError('polynomials may only be divided by nonzero rationals')
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError('polynomial powers must be non-negative integers')
        result = self.space.one()
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if _is_scalar(other):
            other = self.space.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def diff(self, name):
        '''
        Partial derivative with respect to a coordinate (name or index).
        '''
        k = self.space.index(name)
        terms = { }
        for exps, c in self.terms.items():
            if exps[k]:
                lowered = exps[:k] + (exps[k] - 1,) + exps[k+1:]
                terms[lowered] = c * exps[k]
        return Polynomial(self.space, terms)

    def degree(self):
        return max((sum(exps) for exps in self.terms), default=-1)

    def weighted_degrees(self, weights):
        '''
        Set of weighted degrees of the terms; weights is a sequence with
        one integer per coordinate.
        '''
        return { sum(w * e for w, e in zip(weights, exps)) for exps in self.terms }

    def is_constant(self):
        return all(not any(exps) for exps in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.space), Fraction(0))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def monomials(self):
        return sorted(self.terms, reverse=True)

    def depends_on(self, name):
        k = self.space.index(name)
        return any(exps[k] for exps in self.terms)

    def to_space(self, space):
        '''
        Re-express this polynomial over a space containing all of the
        coordinates it actually uses.
        '''
        if space == self.space:
            return self
        positions = [ ]
        for n, name in enumerate(self.space.names):
            positions.append(space.index(name) if name in space else None)
        terms = { }
        for exps, c in self.terms.items():
            new = [0] * len(space)
            for n, e in enumerate(exps):
                if e:
                    if positions[n] is None:
                        raise SpaceMismatchError(f'coordinate {self.space.names[n]!r} missing from {space.names}')
                    new[positions[n]] = e
            terms[tuple(new)] = c
        return Polynomial(space, terms)

    def _monomial_str(self, exps):
        parts = [ ]
        for name, e in zip(self.space.names, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f'{name}^{e}')
        return '*'.join(parts)

    def __str__(self):
        if not self.terms:
            return '0'
        out = ''
        for exps in self.monomials():
            c = self.terms[exps]
            mono = self._monomial_str(exps)
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if not mono:
                body = _format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f'{_format_scalar(mag)}*{mono}'
            if not out:
                out = body if sign == '+' else '-' + body
            else:
                out += f' {sign} {body}'
        return out

    def __repr__(self):
        return f'Polynomial({self})'

@lru_cache(maxsize=None)
def _homogeneous(count, degree):
    if count == 0:
        return ((),) if degree == 0 else ()
    gens = symbols(f'u:{count}')
    result = [ ]
    for mono in itermonomials(gens, degree, degree):
        powers = mono.as_powers_dict()
        result.append(tuple(int(powers.get(g, 0)) for g in gens))
    return tuple(result)

def weighted_monomials(weights, degree):
    '''
    All exponent tuples whose weighted degree equals degree, in descending
    lexicographic order.  Variables of equal weight are enumerated
    together by sympy.
    '''
    weights = tuple(weights)
    if any(w < 1 for w in weights):
        raise DomainError(f'monomial weights must be positive, got {weights}')
    classes = sorted(set(weights))
    slots = { w: [ k for k, v in enumerate(weights) if v == w ] for w in classes }
    result = [ ]
    def extend(c, remaining, exps):
        if c == len(classes):
            if remaining == 0:
                result.append(tuple(exps))
            return
        w = classes[c]
        for e in range(remaining // w + 1):
            for part in _homogeneous(len(slots[w]), e):
                for k, p in zip(slots[w], part):
                    exps[k] = p
                extend(c + 1, remaining - e * w, exps)
    if degree >= 0:
        extend(0, degree, [ 0 ] * len(weights))
    return sorted(result, reverse=True)

# -----------------------------------------------------------------------------
# Differential forms of degree 0, 1 and 2
# -----------------------------------------------------------------------------

class PolyForm:
    '''
    Differential form with polynomial coefficients.  Components are keyed
    by () for functions, (i,) for 1-forms and (i, j) with i < j for
    2-forms; the (j, i) component of a 2-form is minus the (i, j) one.
    '''
    __slots__ = ('space', 'degree', 'components')

    def __init__(self, space, degree, components=None):
        if degree not in (0, 1, 2):
            raise UnsupportedError(f'forms of degree {degree} are not supported')
        self.space = space
        self.degree = degree
        comps = { }
        for key, value in (components or { }).items():
            key = tuple(key)
            if len(key) != degree:
                raise DomainError(f'component {key} does not fit a {degree}-form')
            if degree == 2:
                i, j = key
                if i == j:
                    continue
                if i > j:
                    key, value = (j, i), -value
            if not isinstance(value, Polynomial):
                value = space.constant(value)
            elif value.space != space:
                raise SpaceMismatchError('form component over the wrong space')
            if key in comps:
                value = comps[key] + value
            comps[key] = value
        self.components = { k: v for k, v in comps.items() if v }

    @classmethod
    def function(cls, poly):
        return cls(poly.space, 0, { (): poly })

    @classmethod
    def zero(cls, space, degree):
        return cls(space, degree)

    def _check(self, other):
        if not isinstance(other, PolyForm):
            raise DomainError('expected a differential form')
        if other.space != self.space:
            raise SpaceMismatchError('cannot combine forms over different spaces')
        if other.degree != self.degree:
            raise DomainError(f'cannot add a {self.degree}-form and a {other.degree}-form')

    def __add__(self, other):
        if _is_scalar(other) or isinstance(other, Polynomial):
            other = PolyForm.function(other if isinstance(other, Polynomial) else self.space.constant(other))
        self._check(other)
        comps = dict(self.components)
        for key, value in other.components.items():
            comps[key] = comps[key] + value if key in comps else value
        return PolyForm(self.space, self.degree, comps)

    __radd__ = __add__

    def __neg__(self):
        return PolyForm(self.space, self.degree, { k: -v for k, v in self.components.items() })

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PolyForm):
            return wedge(self, other)
        if isinstance(other, Polynomial) and other.space != self.space:
            raise SpaceMismatchError('cannot scale a form by a polynomial over another space')
        if not (_is_scalar(other) or isinstance(other, Polynomial)):
            return NotImplemented
        return PolyForm(self.space, self.degree, { k: v * other for k, v in self.components.items() })

    __rmul__ = __mul__

    def __and__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.components
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.space == other.space and self.degree == other.degree
                and self.components == other.components)

    def __hash__(self):
        return hash((self.space, self.degree, frozenset(self.components.items())))

    def __bool__(self):
        return bool(self.components)

    def component(self, *key):
        key = tuple(self.space.index(k) for k in key)
        if self.degree == 2:
            i, j = key
            if i == j:
                return self.space.zero()
            if i > j:
                return -self.components.get((j, i), self.space.zero())
        return self.components.get(key, self.space.zero())

    def d(self):
        return exterior_derivative(self)

    def __call__(self, *fields):
        '''
        Evaluate the form on vector fields: theta(X) for 1-forms and
        omega(X, Y) for 2-forms.
        '''
        if len(fields) != self.degree:
            raise DomainError(f'a {self.degree}-form takes {self.degree} vector fields')
        result = self.space.zero()
        if self.degree == 0:
            return self.components.get((), result)
        if self.degree == 1:
            X, = fields
            for (i,), f in self.components.items():
                result = result + f * X.component(i)
            return result
        X, Y = fields
        for (i, j), f in self.components.items():
            result = result + f * (X.component(i) * Y.component(j) - X.component(j) * Y.component(i))
        return result

    def constant_part(self):
        return PolyForm(self.space, self.degree,
                        { k: self.space.constant(v.constant_term()) for k, v in self.components.items() })

    def is_homogeneous(self, weights, weight):
        '''
        True if every term has weighted degree equal to weight, counting
        dx_i as weights[i].
        '''
        for key, f in self.components.items():
            shift = sum(weights[i] for i in key)
            if any(w + shift != weight for w in f.weighted_degrees(weights)):
                return False
        return True

    def _basis_str(self, key):
        if not key:
            return ''
        return '∧'.join('d' + self.space.names[i] for i in key)

    def __str__(self):
        if self.degree == 0:
            return str(self.components.get((), self.space.zero()))
        if not self.components:
            return '0'
        out = ''
        for key in sorted(self.components):
            f = self.components[key]
            basis = self._basis_str(key)
            if len(f.terms) == 1:
                (exps, c), = f.terms.items()
                sign = '-' if c < 0 else '+'
                text = str(-f if c < 0 else f)
                body = basis if text == '1' else f'{text}*{basis}'
            else:
                sign = '+'
                body = f'({f})*{basis}'
            if not out:
                out = body if sign == '+' else '-' + body
            else:
                out += f' {sign} {body}'
        return out

    def __repr__(self):
        return f'PolyForm({self})'

def wedge(a, b):
    '''
    Exterior product of two forms whose degrees add up to at most 2.
    '''
    if a.space != b.space:
        raise SpaceMismatchError('cannot wedge forms over different spaces')
    degree = a.degree + b.degree
    if degree > 2:
        raise UnsupportedError('wedge product would have degree greater than 2')
    if a.degree == 0:
        return b * a.components.get((), a.space.zero())
    if b.degree == 0:
        return a * b.components.get((), b.space.zero())
    comps = { }
    for (i,), f in a.components.items():
        for (j,), g in b.components.items():
            if i == j:
                continue
            key, value = ((i, j), f * g) if i < j else ((j, i), -(f * g))
            comps[key] = comps[key] + value if key in comps else value
    return PolyForm(a.space, 2, comps)

def exterior_derivative(form):
    '''
    Exterior derivative of a 0-form or 1-form.
    '''
    space = form.space
    if form.degree == 0:
        f = form.components.get((), space.zero())
        return PolyForm(space, 1, { (i,): f.diff(i) for i in range(len(space)) })
    if form.degree == 1:
        comps = { }
        for (j,), f in form.components.items():
            for i in range(len(space)):
                if i == j:
                    continue
                df = f.diff(i)
                if not df:
                    continue
                key, value = ((i, j), df) if i < j else ((j, i), -df)
                comps[key] = comps[key] + value if key in comps else value
        return PolyForm(space, 2, comps)
    raise UnsupportedError('the exterior derivative of a 2-form would have degree 3')

# -----------------------------------------------------------------------------
# Vector fields
# -----------------------------------------------------------------------------

class PolyVectorField:
    '''
    Vector field sum_i X^i d/dx_i with polynomial coefficients.
    '''
    __slots__ = ('space', 'components')

    def __init__(self, space, components=None):
        self.space = space
        comps = { }
        for key, value in (components or { }).items():
            i = space.index(key)
            if not isinstance(value, Polynomial):
                value = space.constant(value)
            elif value.space != space:
                raise SpaceMismatchError('vector field coefficient over the wrong space')
            if value:
                comps[i] = value
        self.components = comps

    def component(self, name):
        return self.components.get(self.space.index(name), self.space.zero())

    def __call__(self, f):
        '''
        Apply the field to a polynomial as a derivation.
        '''
        result = self.space.zero()
        for i, a in self.components.items():
            result = result + a * f.diff(i)
        return result

    def __add__(self, other):
        if other.space != self.space:
            raise SpaceMismatchError('cannot add vector fields over different spaces')
        comps = dict(self.components)
        for i, a in other.components.items():
            comps[i] = comps[i] + a if i in comps else a
        return PolyVectorField(self.space, comps)

    def __neg__(self):
        return PolyVectorField(self.space, { i: -a for i, a in self.components.items() })

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not (_is_scalar(other) or isinstance(other, Polynomial)):
            return NotImplemented
        return PolyVectorField(self.space, { i: a * other for i, a in self.components.items() })

    __rmul__ = __mul__

    def bracket(self, other):
        '''
        Lie bracket [X, Y]^i = X(Y^i) - Y(X^i).
        '''
        if other.space != self.space:
            raise SpaceMismatchError('cannot bracket vector fields over different spaces')
        comps = { }
        for i in set(self.components) | set(other.components):
            value = self(other.component(i)) - other(self.component(i))
            if value:
                comps[i] = value
        return PolyVectorField(self.space, comps)

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.space == other.space and self.components == other.components

    def __hash__(self):
        return hash((self.space, frozenset(self.components.items())))

    def __bool__(self):
        return bool(self.components)

    def to_space(self, space):
        return PolyVectorField(space, { self.space.names[i]: a.to_space(space)
                                        for i, a in self.components.items() })

    def __str__(self):
        if not self.components:
            return '0'
        parts = [ ]
        for i in sorted(self.components):
            a = self.components[i]
            name = self.space.names[i]
            text = str(a)
            if text == '1':
                parts.append(f'D{name}')
            elif len(a.terms) == 1:
                parts.append(f'{text}*D{name}')
            else:
                parts.append(f'({text})*D{name}')
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return f'PolyVectorField({self})'

# -----------------------------------------------------------------------------
# Polynomial matrices
# -----------------------------------------------------------------------------

class PolyMatrix:
    '''
    Sparse rectangular matrix of polynomials over a single space.
    Indices are 0-based; entries maps (i, j) to a nonzero Polynomial.
    '''
    __slots__ = ('rows', 'cols', 'space', 'entries')

    def __init__(self, rows, cols, space, entries=None):
        self.rows = rows
        self.cols = cols
        self.space = space
        ents = { }
        for (i, j), value in (entries or { }).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DomainError(f'entry ({i}, {j}) outside a {rows}x{cols} matrix')
            if not isinstance(value, Polynomial):
                value = space.constant(value)
            elif value.space != space:
                raise SpaceMismatchError('matrix entry over the wrong space')
            if value:
                ents[(i, j)] = value
        self.entries = ents

    @classmethod
    def identity(cls, n, space):
        return cls(n, n, space, { (i, i): 1 for i in range(n) })

    @classmethod
    def unit(cls, n, space, i, j, value=1):
        '''
        The matrix value*E_{ij}, with 1-based indices as in E_{ij}.
        '''
        return cls(n, n, space, { (i - 1, j - 1): value })

    def __getitem__(self, key):
        return self.entries.get(key, self.space.zero())

    def _check(self, other):
        if other.space != self.space:
            raise SpaceMismatchError('cannot combine matrices over different spaces')
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DomainError('matrix shapes differ')

    def __add__(self, other):
        self._check(other)
        ents = dict(self.entries)
        for key, value in other.entries.items():
            ents[key] = ents[key] + value if key in ents else value
        return PolyMatrix(self.rows, self.cols, self.space, ents)

    def __neg__(self):
        return PolyMatrix(self.rows, self.cols, self.space, { k: -v for k, v in self.entries.items() })

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not (_is_scalar(other) or isinstance(other, Polynomial)):
            return NotImplemented
        return PolyMatrix(self.rows, self.cols, self.space, { k: v * other for k, v in self.entries.items() })

    __rmul__ = __mul__

    def __matmul__(self, other):
        if other.space != self.space:
            raise SpaceMismatchError('cannot multiply matrices over different spaces')
        if self.cols != other.rows:
            raise DomainError('matrix shapes do not match for multiplication')
        by_row = { }
        for (k, j), value in other.entries.items():
            by_row.setdefault(k, [ ]).append((j, value))
        ents = { }
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                ents[(i, j)] = ents[(i, j)] + a * b if (i, j) in ents else a * b
        return PolyMatrix(self.rows, other.cols, self.space, ents)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.space == other.space and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.space, frozenset(self.entries.items())))

    def __bool__(self):
        return bool(self.entries)

    def transpose(self):
        return PolyMatrix(self.cols, self.rows, self.space, { (j, i): v for (i, j), v in self.entries.items() })

    def diff(self, name):
        return PolyMatrix(self.rows, self.cols, self.space, { k: v.diff(name) for k, v in self.entries.items() })

    def trace(self):
        result = self.space.zero()
        for i in range(min(self.rows, self.cols)):
            result = result + self[(i, i)]
        return result

    def is_constant(self):
        return all(v.is_constant() for v in self.entries.values())

    def to_space(self, space):
        return PolyMatrix(self.rows, self.cols, space, { k: v.to_space(space) for k, v in self.entries.items() })

    def commutator(self, other):
        return self @ other - other @ self

    def exp_nilpotent(self, t=None):
        '''
        exp(t*M) for a nilpotent M (t a polynomial, default 1).  The
        series terminates; a matrix that is not nilpotent is refused.
        '''
        if self.rows != self.cols:
            raise DomainError('only square matrices have exponentials')
        scaled = self if t is None else self * t
        result = PolyMatrix.identity(self.rows, self.space)
        power = PolyMatrix.identity(self.rows, self.space)
        for k in range(1, self.rows + 1):
            power = (power @ scaled) * Fraction(1, k)
            if not power:
                return result
            result = result + power
        raise DomainError('matrix exponential requested for a matrix that is not nilpotent')

    def __str__(self):
        rows = [ ]
        for i in range(self.rows):
            rows.append('[' + ', '.join(str(self[(i, j)]) for j in range(self.cols)) + ']')
        return '[' + ', '.join(rows) + ']'

    def __repr__(self):
        return f'PolyMatrix({self})'

# -----------------------------------------------------------------------------
# Exact linear algebra
# -----------------------------------------------------------------------------

def _qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)

def _fraction(value):
    return Fraction(int(value.numerator), int(value.denominator))

def _domain_matrix(rows, ncols):
    rep = { }
    for i, row in enumerate(rows):
        entries = { j: _qq(c) for j, c in row.items() if c }
        if entries:
            rep[i] = entries
    return DomainMatrix.from_rep(SDM(rep, (len(rows), ncols), QQ))

def _rref(rows, ncols):
    '''
    Reduced row echelon form of sparse rows.  Returns the nonzero rows
    as dicts of Fractions together with their pivot columns.
    '''
    if not rows or ncols == 0:
        return [ ], ()
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    rep = reduced.to_sparse().rep
    out = [ ]
    for r in range(len(pivots)):
        out.append({ j: _fraction(v) for j, v in rep.get(r, { }).items() })
    return out, tuple(pivots)

def rank_of_rows(rows, ncols):
    '''
    Rank of a list of sparse rows (dicts column -> Rational).
    '''
    rows = [ row for row in rows if any(row.values()) ]
    if not rows:
        return 0
    return _domain_matrix(rows, ncols).rank()

def charpoly(matrix):
    '''
    Characteristic polynomial coefficients, highest degree first, of a
    square matrix given as a list of lists of Rationals.
    '''
    n = len(matrix)
    rows = [ { j: c for j, c in enumerate(row) if c } for row in matrix ]
    return [ _fraction(c) for c in _domain_matrix(rows, n).to_dense().charpoly() ]

class LinearSystem:
    '''
    Homogeneous sparse linear system.  Each row maps unknown indices to
    Rational coefficients; unknowns are declared up front by label.
    '''
    def __init__(self, unknowns):
        self.unknowns = list(unknowns)
        self._index = { label: n for n, label in enumerate(self.unknowns) }
        self.rows = [ ]

    def __len__(self):
        return len(self.rows)

    def index(self, label):
        return self._index[label]

    def add_row(self, row):
        '''
        Add a row given as a mapping unknown-index -> coefficient.  Zero
        rows are dropped silently.
        '''
        clean = { }
        for j, c in row.items():
            if not 0 <= j < len(self.unknowns):
                raise DomainError(f'row references undeclared unknown {j}')
            if c:
                clean[j] = Fraction(c)
        if clean:
            self.rows.append(clean)

    def rank(self):
        return rank_of_rows(self.rows, len(self.unknowns))

    def kernel(self):
        reduced, pivots = _rref(self.rows, len(self.unknowns))
        pivot_set = set(pivots)
        free = [ j for j in range(len(self.unknowns)) if j not in pivot_set ]
        basis = { f: { f: Fraction(1) } for f in free }
        for row, p in zip(reduced, pivots):
            for j, v in row.items():
                if j != p and v:
                    basis[j][p] = -v
        return Kernel(self.unknowns, [ basis[f] for f in free ], free, pivots)

def nullspace(system):
    '''
    Basis of the exact kernel as dense lists of Rationals.  Pivots are
    taken in declared unknown order, so the result is deterministic.
    '''
    return system.kernel().dense()

class Kernel:
    '''
    Kernel of a LinearSystem.  Basis vector k is the unique kernel vector
    with a 1 in free column free_columns[k] and 0 in the other free
    columns, so the coordinates of any kernel vector are its entries in
    the free columns.
    '''
    def __init__(self, unknowns, basis, free_columns, pivot_columns):
        self.unknowns = unknowns
        self.basis = basis
        self.free_columns = list(free_columns)
        self.pivot_columns = tuple(pivot_columns)

    def __len__(self):
        return len(self.basis)

    @property
    def dimension(self):
        return len(self.basis)

    def dense(self):
        n = len(self.unknowns)
        return [ [ vec.get(j, Fraction(0)) for j in range(n) ] for vec in self.basis ]

    def coordinates(self, vector):
        '''
        Coordinates of a sparse vector in this basis.  Raises
        InvariantError if the vector is not in the kernel.
        '''
        coords = [ Fraction(vector.get(f, 0)) for f in self.free_columns ]
        residual = dict((j, Fraction(c)) for j, c in vector.items() if c)
        for c, vec in zip(coords, self.basis):
            if c:
                for j, v in vec.items():
                    residual[j] = residual.get(j, 0) - c * v
        if any(residual.values()):
            raise InvariantError('vector does not lie in the span of the kernel basis')
        return coords

    def contains(self, vector):
        try:
            self.coordinates(vector)
        except InvariantError:
            return False
        return True

class MatrixSpan:
    '''
    Coordinates with respect to a linearly independent list of constant
    matrices.  Pivot positions are chosen so that the corresponding
    square block is invertible; expand() reads off coefficients at those
    positions and checks that nothing is left over.
    '''
    def __init__(self, basis):
        if not basis:
            raise DomainError('empty matrix basis')
        self.basis = list(basis)
        positions = sorted({ key for m in self.basis for key in m.entries })
        self.positions = positions
        column = { key: n for n, key in enumerate(positions) }
        rows = [ { column[key]: v.constant_term() for key, v in m.entries.items() } for m in self.basis ]
        reduced, pivots = _rref(rows, len(positions))
        if len(pivots) != len(self.basis):
            raise DomainError('matrix basis is not linearly independent')
        self.pivots = [ positions[p] for p in pivots ]
        block = [ { b: row.get(p, 0) for b, p in enumerate(pivots) } for row in rows ]
        inverse = _domain_matrix(block, len(pivots)).to_dense().inv().to_sparse().rep
        self.inverse = [ [ _fraction(inverse.get(a, { }).get(b, QQ(0))) for b in range(len(pivots)) ]
                         for a in range(len(pivots)) ]

    def expand(self, matrix):
        '''
        Coefficients of matrix in the basis.  Entries may be polynomials,
        in which case the coefficients are polynomials too.
        '''
        m = len(self.basis)
        values = [ matrix[key] for key in self.pivots ]
        coeffs = [ ]
        for a in range(m):
            total = matrix.space.zero()
            for b in range(m):
                if self.inverse[b][a] and values[b]:
                    total = total + values[b] * self.inverse[b][a]
            coeffs.append(total)
        residual = matrix
        for c, basis in zip(coeffs, self.basis):
            if c:
                residual = residual - basis.to_space(matrix.space) * c
        if residual:
            raise InvariantError('matrix does not lie in the span of the basis')
        return coeffs

def invert(matrix):
    '''
    Exact inverse of a square matrix of Rationals given as a list of lists.
    '''
    n = len(matrix)
    rows = [ { j: c for j, c in enumerate(row) if c } for row in matrix ]
    if rank_of_rows(rows, n) != n:
        raise DomainError('matrix is singular')
    inverse = _domain_matrix(rows, n).to_dense().inv().to_sparse().rep
    return [ [ _fraction(inverse.get(i, { }).get(j, QQ(0))) for j in range(n) ] for i in range(n) ]

def polynomial_inverse(matrix):
    '''
    Inverse of a square polynomial matrix A = C + N whose constant part C
    is invertible and for which C^-1 N is nilpotent.  This covers the
    coefficient matrices of weighted homogeneous coframes.
    '''
    n = matrix.rows
    space = matrix.space
    C = [ [ matrix[(i, j)].constant_term() for j in range(n) ] for i in range(n) ]
    Cinv = PolyMatrix(n, n, space, { (i, j): v for i, row in enumerate(invert(C)) for j, v in enumerate(row) if v })
    N = matrix - PolyMatrix(n, n, space, { (i, j): v for i, row in enumerate(C) for j, v in enumerate(row) if v })
    step = -(Cinv @ N)
    total = PolyMatrix.identity(n, space)
    power = PolyMatrix.identity(n, space)
    for _ in range(n + 1):
        power = power @ step
        if not power:
            return total @ Cinv
        total = total + power
    raise DomainError('coefficient matrix is not unipotent over its constant part')
