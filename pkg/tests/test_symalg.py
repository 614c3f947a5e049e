import pytest
import random
from fractions import Fraction
from itertools import product

from mongetools.symalg import (Space, Polynomial, PolyForm, PolyVectorField, PolyMatrix,
                               LinearSystem, MatrixSpan, weighted_monomials, rank_of_rows,
                               charpoly, invert, polynomial_inverse, nullspace)
from mongetools.errors import DomainError, SpaceMismatchError, UnsupportedError, InvariantError

@pytest.fixture
def space():
    return Space(('x', 'y', 'z'))

def test_space(space):
    assert len(space) == 3
    assert space.index('y') == 1
    assert space.index(2) == 2
    assert 'z' in space and 'w' not in space
    assert Space(['x', 'y', 'z']) == space
    with pytest.raises(DomainError):
        space.index('w')
    with pytest.raises(DomainError):
        Space(('x', 'x'))

def test_polynomial_arithmetic(space):
    x, y, z = space.variables()
    f = x**2 + 2*x*y - 1
    assert str(f) == 'x^2 + 2*x*y - 1'
    assert f - f == 0
    assert not (f - f)
    assert (x + y) * (x - y) == x**2 - y**2
    assert (f / 2).coefficient((2, 0, 0)) == Fraction(1, 2)
    assert f.constant_term() == -1
    assert f.degree() == 2
    assert f.weighted_degrees((1, 2, 3)) == { 2, 3, 0 }
    assert space.zero().degree() == -1

def test_polynomial_diff(space):
    x, y, z = space.variables()
    f = x**3 * y + z
    assert f.diff('x') == 3 * x**2 * y
    assert f.diff(2) == 1
    assert f.depends_on('y')
    assert not f.diff('z').depends_on('z')

def test_polynomial_errors(space):
    x = space.variable('x')
    other = Space(('x',)).variable('x')
    with pytest.raises(SpaceMismatchError):
        x + other
    with pytest.raises(DomainError):
        x / 0
    with pytest.raises(DomainError):
        x ** -1

def test_to_space(space):
    small = Space(('y',))
    f = small.variable('y') ** 2
    assert f.to_space(space) == space.variable('y') ** 2
    with pytest.raises(SpaceMismatchError):
        Space(('w',)).variable('w').to_space(space)

def test_weighted_monomials():
    assert weighted_monomials((1, 2), 4) == [ (4, 0), (2, 1), (0, 2) ]
    assert weighted_monomials((1, 1, 1), 0) == [ (0, 0, 0) ]
    assert weighted_monomials((2,), 3) == [ ]
    assert len(weighted_monomials((1, 1, 1), 2)) == 6
    with pytest.raises(DomainError):
        weighted_monomials((1, 0), 2)

def test_weighted_monomials_by_counting():
    weights = (1, 2, 2, 3, 1)
    for degree in range(8):
        expected = sorted((e for e in product(range(degree + 1), repeat=len(weights))
                           if sum(w * k for w, k in zip(weights, e)) == degree), reverse=True)
        assert weighted_monomials(weights, degree) == expected

def test_wedge(space):
    dx, dy, dz = (space.differential(n) for n in space)
    assert dx & dy == -(dy & dx)
    assert dx & dx == 0
    omega = dx & dy
    assert omega.component('x', 'y') == 1
    assert omega.component('y', 'x') == -1
    assert omega.component('x', 'x') == 0
    with pytest.raises(UnsupportedError):
        omega & dz

def test_form_str(space):
    x, y, z = space.variables()
    theta = space.differential('z') - y * space.differential('x')
    assert str(theta) == '-y*dx + dz'
    assert str(PolyForm.zero(space, 1)) == '0'

def test_exterior_derivative(space):
    x, y, z = space.variables()
    f = PolyForm.function(x**2 * y + z)
    df = f.d()
    assert df.component('x') == 2 * x * y
    assert df.component('z') == 1
    assert df.d() == 0
    theta = space.differential('z') - y * space.differential('x')
    assert theta.d() == space.differential('x') & space.differential('y')
    with pytest.raises(UnsupportedError):
        theta.d().d()

def test_form_evaluation(space):
    x, y, z = space.variables()
    X = PolyVectorField(space, { 'x': 1, 'z': y })
    Y = PolyVectorField(space, { 'y': 1 })
    theta = space.differential('z') - y * space.differential('x')
    assert theta(X) == 0
    assert theta(Y) == 0
    # Cartan formula for the bracket of two fields in the kernel
    assert theta.d()(X, Y) == -theta(X.bracket(Y))
    with pytest.raises(DomainError):
        theta(X, Y)

def test_vector_fields(space):
    x, y, z = space.variables()
    X = PolyVectorField(space, { 'x': 1 })
    Y = PolyVectorField(space, { 'y': x })
    assert X.bracket(Y) == PolyVectorField(space, { 'y': 1 })
    assert Y.bracket(X) == -X.bracket(Y)
    assert Y(x * y) == x**2
    assert str(X + Y) == 'Dx + x*Dy'
    assert not (X - X)

def test_jacobi_identity(space):
    x, y, z = space.variables()
    fields = [ PolyVectorField(space, { 'x': y, 'z': 1 }),
               PolyVectorField(space, { 'y': x * z }),
               PolyVectorField(space, { 'x': z**2, 'y': 1 }) ]
    A, B, C = fields
    total = A.bracket(B.bracket(C)) + B.bracket(C.bracket(A)) + C.bracket(A.bracket(B))
    assert not total

def test_matrices(space):
    x = space.variable('x')
    N = PolyMatrix.unit(3, space, 1, 2, x) + PolyMatrix.unit(3, space, 2, 3, 1)
    assert N[(0, 1)] == x
    assert (N @ N)[(0, 2)] == x
    assert N.trace() == 0
    E = N.exp_nilpotent()
    assert E[(0, 2)] == x / 2
    assert E @ N.exp_nilpotent(space.constant(-1)) == PolyMatrix.identity(3, space)
    with pytest.raises(DomainError):
        PolyMatrix.identity(2, space).exp_nilpotent()

def test_polynomial_inverse(space):
    x, y, z = space.variables()
    A = PolyMatrix(2, 2, space, { (0, 0): 2, (0, 1): x, (1, 1): 1 })
    inverse = polynomial_inverse(A)
    assert A @ inverse == PolyMatrix.identity(2, space)
    B = PolyMatrix(2, 2, space, { (0, 0): 1, (1, 1): 1, (0, 1): y, (1, 0): 1 })
    with pytest.raises(DomainError):
        polynomial_inverse(B)

def test_linear_system():
    system = LinearSystem([ 'a', 'b', 'c' ])
    system.add_row({ 0: 1, 1: 1 })
    system.add_row({ 1: 1, 2: -1 })
    system.add_row({ 0: 0 })
    assert len(system) == 2
    assert system.rank() == 2
    kernel = system.kernel()
    assert kernel.dimension == 1
    assert kernel.basis == [ { 2: 1, 0: -1, 1: 1 } ]
    assert kernel.coordinates({ 0: -2, 1: 2, 2: 2 }) == [ 2 ]
    assert not kernel.contains({ 0: 1 })
    with pytest.raises(InvariantError):
        kernel.coordinates({ 0: 1 })
    assert nullspace(system) == [ [ -1, 1, 1 ] ]
    with pytest.raises(DomainError):
        system.add_row({ 5: 1 })

def test_empty_system():
    kernel = LinearSystem([ 'a', 'b' ]).kernel()
    assert kernel.dimension == 2

def test_exact_linear_algebra():
    assert rank_of_rows([ { 0: 1, 1: 2 }, { 0: 2, 1: 4 }, { } ], 2) == 1
    assert charpoly([ [ 1, 2 ], [ 3, 4 ] ]) == [ 1, -5, -2 ]
    assert invert([ [ 2, 0 ], [ 0, 4 ] ]) == [ [ Fraction(1, 2), 0 ], [ 0, Fraction(1, 4) ] ]
    with pytest.raises(DomainError):
        invert([ [ 1, 2 ], [ 2, 4 ] ])

def test_matrix_span(space):
    x = space.variable('x')
    E12 = PolyMatrix.unit(2, space, 1, 2)
    E21 = PolyMatrix.unit(2, space, 2, 1)
    H = PolyMatrix.unit(2, space, 1, 1) - PolyMatrix.unit(2, space, 2, 2)
    span = MatrixSpan([ E12, E21, H ])
    assert span.expand(E12 * x + H * 3) == [ x, 0, 3 ]
    with pytest.raises(InvariantError):
        span.expand(PolyMatrix.identity(2, space))

def random_polynomial(rng, space, degree=2):
    terms = { }
    for _ in range(rng.randint(1, 4)):
        exps = tuple(rng.randint(0, degree) for _ in space.names)
        terms[exps] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return Polynomial(space, terms)

def random_field(rng, space):
    return PolyVectorField(space, { name: random_polynomial(rng, space) for name in space.names })

def random_form(rng, space):
    return PolyForm(space, 1, { (i,): random_polynomial(rng, space) for i in range(len(space)) })

def test_random_cartan_formula(space):
    rng = random.Random(1729)
    for _ in range(20):
        theta = random_form(rng, space)
        X, Y = random_field(rng, space), random_field(rng, space)
        assert theta.d()(X, Y) == X(theta(Y)) - Y(theta(X)) - theta(X.bracket(Y))

def test_random_leibniz_rule(space):
    rng = random.Random(42)
    for _ in range(20):
        f = random_polynomial(rng, space)
        theta = random_form(rng, space)
        df = PolyForm.function(f).d()
        assert (theta * f).d() == (df & theta) + theta.d() * f

def test_random_jacobi(space):
    rng = random.Random(7)
    for _ in range(10):
        A, B, C = (random_field(rng, space) for _ in range(3))
        assert not (A.bracket(B.bracket(C)) + B.bracket(C.bracket(A)) + C.bracket(A.bracket(B)))

def test_random_product_rule(space):
    rng = random.Random(2718)
    for _ in range(120):
        p, q = random_polynomial(rng, space), random_polynomial(rng, space)
        for name in space.names:
            assert (p * q).diff(name) == p * q.diff(name) + q * p.diff(name)

def test_random_d_squared(space):
    rng = random.Random(31)
    for _ in range(50):
        f = random_polynomial(rng, space, degree=3)
        df = PolyForm.function(f).d()
        assert df.degree == 1
        assert not df.d()
