# -----------------------------------------------------------------------------
# mongetools: cohomology.py
#
# Weights of the components of H^1 and H^2(g_-, g) for a grading by Sigma.
#
# Components of H^q are indexed by Weyl group elements sigma of length q
# whose inversion set Delta_sigma = sigma(Delta^-) & Delta^+ lies in the
# roots of positive Sigma-height.  For q = 2 these are the products
# s_i s_j with alpha_i in Sigma and ht(s_i(alpha_j)) >= 1, and then
# Delta_sigma = { alpha_i, s_i(alpha_j) }.
#
# The grading element acts on the component of sigma by the homogeneity
# weight  -ht(sigma(theta)) + sum of ht(beta) over Delta_sigma.  A grading
# is rigid when no degree two component has positive weight.
# -----------------------------------------------------------------------------

from dataclasses import dataclass, field

from .errors import DomainError, InvariantError
from .grading import Sigma, height
from .monge import enumerate_monge
from .rootsys import AlgebraSpec, Root, build_root_system, simple_algebras

__all__ = [ 'WeylElement', 'CohomologyClass', 'enumerate_w1', 'enumerate_w2',
            'homogeneity_weight', 'is_rigid', 'torsion_or_curvature',
            'lowest_weight', 'highest_weight_pairings', 'cohomology_classes',
            'h1_classes', 'has_h1_nonnegative', 'format_highest_weight',
            'canonical_form', 'case_label', 'non_rigid_gradings', 'NON_RIGID_CASES',
            'H1_EXCEPTIONS' ]

@dataclass(frozen=True)
class WeylElement:
    '''
    sigma = s_{word[0]} o s_{word[1]} with 0-based indices and its
    inversion set.
    '''
    word: tuple
    delta_sigma: tuple

    @property
    def length(self):
        return len(self.word)

    def label(self, index_label=None):
        index_label = index_label or (lambda i: str(i + 1))
        parts = [ index_label(i) for i in self.word ]
        if len(self.word) == 1:
            return 's' + parts[0]
        if all(len(p) == 1 for p in parts):
            return 'σ' + ''.join(parts)
        return 'σ(' + ','.join(parts) + ')'

    def apply(self, rs, weight):
        weight = Root(weight)
        for i in reversed(self.word):
            weight = rs.reflect(i, weight)
        return weight

    def __str__(self):
        return self.label()

@dataclass
class CohomologyClass:
    sigma: WeylElement
    q: int
    homogeneity_weight: int
    minus_sigma_theta: Root
    minus_sigma_theta_weight: int
    torsion: bool
    lowest_weight: Root
    highest_weight_pairings: dict = field(default_factory=dict)

def _check(rs, sigma):
    return Sigma(sigma).check(rs)

def enumerate_w1(rs, sigma):
    sigma = _check(rs, sigma)
    return [ WeylElement((i,), (rs.simple_roots[i],)) for i in sigma ]

def enumerate_w2(rs, sigma):
    '''
    W^2_Sigma as elements s_i s_j, sorted by (i, j).  When alpha_i and
    alpha_j are orthogonal and both in Sigma the element is listed once,
    as the pair with i < j.
    '''
    sigma = _check(rs, sigma)
    result = [ ]
    for i in sigma:
        for j in range(rs.rank):
            if j == i:
                continue
            image = rs.reflect(i, rs.simple_roots[j])
            if height(image, sigma) < 1:
                continue
            if j in sigma and j < i and rs.gram[i][j] == 0:
                continue
            result.append(WeylElement((i, j), (rs.simple_roots[i], image)))
    return sorted(result, key=lambda w: w.word)

def _closed_form_weight(rs, sigma, w):
    theta = rs.highest_root
    i = w.word[0]
    value = -height(theta, sigma) + rs.pairing(theta, i) + 1
    if w.length == 2:
        j = w.word[1]
        value += (rs.pairing(theta, j) + 1) * height(w.delta_sigma[1], sigma)
    return value

def homogeneity_weight(rs, sigma, w):
    '''
    Homogeneity weight of the component indexed by w, from the general
    formula, checked against the closed form for elements of length at
    most two.
    '''
    sigma = _check(rs, sigma)
    if w.length not in (1, 2):
        raise DomainError('only components of H^1 and H^2 are supported')
    general = -height(w.apply(rs, rs.highest_root), sigma) + sum(height(b, sigma) for b in w.delta_sigma)
    closed = _closed_form_weight(rs, sigma, w)
    if general != closed:
        raise InvariantError(f'weight of {w} over {sigma}: general formula gives {general}, closed form {closed}')
    return general

def is_rigid(rs, sigma):
    return all(homogeneity_weight(rs, sigma, w) < 1 for w in enumerate_w2(rs, sigma))

def torsion_or_curvature(rs, sigma, w):
    '''
    Weight of -sigma(theta) and whether the class is torsion.  The class
    is curvature when e_{-sigma(theta)} lies in the parabolic, i.e. the
    weight is non-negative.
    '''
    sigma = _check(rs, sigma)
    weight = -height(w.apply(rs, rs.highest_root), sigma)
    return weight, weight < 0

def lowest_weight(rs, sigma, w):
    sigma = _check(rs, sigma)
    low = -w.apply(rs, rs.highest_root)
    for beta in w.delta_sigma:
        low = low + beta
    for k in range(rs.rank):
        if k not in sigma and rs.pairing(low, k) > 0:
            raise InvariantError(f'{low} is not a lowest weight for the degree zero part')
    return low

def highest_weight_pairings(rs, sigma, low):
    '''
    Reflect by simple roots outside Sigma until the weight is dominant
    for them, then report its pairings with those roots.
    '''
    sigma = _check(rs, sigma)
    rest = [ k for k in range(rs.rank) if k not in sigma ]
    weight = Root(low)
    while True:
        for k in rest:
            if rs.pairing(weight, k) < 0:
                weight = rs.reflect(k, weight)
                break
        else:
            return { k: rs.pairing(weight, k) for k in rest }

def cohomology_classes(rs, sigma, q=2):
    sigma = _check(rs, sigma)
    elements = enumerate_w2(rs, sigma) if q == 2 else enumerate_w1(rs, sigma)
    result = [ ]
    for w in elements:
        weight = homogeneity_weight(rs, sigma, w)
        mst_weight, torsion = torsion_or_curvature(rs, sigma, w)
        low = lowest_weight(rs, sigma, w)
        result.append(CohomologyClass(w, q, weight, -w.apply(rs, rs.highest_root), mst_weight,
                                      torsion, low, highest_weight_pairings(rs, sigma, low)))
    return result

def h1_classes(rs, sigma):
    return cohomology_classes(rs, sigma, q=1)

def has_h1_nonnegative(rs, sigma):
    return any(c.homogeneity_weight >= 0 for c in h1_classes(rs, sigma))

def format_highest_weight(rs, sigma, pairings, index_label=None):
    '''
    Render highest weight pairings as a combination of fundamental weights
    of each simple factor of the degree zero part, numbered within the
    factor: "3ω1 + 2ω4", or "[2ω1, 2ω1]" for several factors.
    '''
    index_label = index_label or (lambda m, size: str(m))
    rest = [ k for k in range(rs.rank) if k not in set(sigma) ]
    parts = [ ]
    for comp in rs.components(rest):
        terms = [ ]
        for m, k in enumerate(comp, start=1):
            c = pairings.get(k, 0)
            if c:
                label = index_label(m, len(comp))
                omega = f'ω{label}' if len(label) == 1 else f'ω({label})'
                terms.append(omega if c == 1 else f'{c}{omega}')
        parts.append(' + '.join(terms) if terms else '0')
    if len(parts) > 1:
        return '[' + ', '.join(parts) + ']'
    return parts[0] if parts else '0'

# -----------------------------------------------------------------------------
# Naming of the non-rigid Monge gradings
# -----------------------------------------------------------------------------

def _automorphisms(spec):
    '''
    Permutations of the simple roots (0-based maps) induced by symmetries
    of the Dynkin diagram, identity included.
    '''
    n = spec.rank
    identity = tuple(range(n))
    perms = [ identity ]
    if spec.family == 'A' and n > 1:
        perms.append(tuple(n - 1 - i for i in range(n)))
    elif spec.family == 'D' and n >= 5:
        perms.append(identity[:n-2] + (n - 1, n - 2))
    elif spec.family == 'D' and n == 4:
        for a, b, c in ((0, 3, 2), (2, 0, 3), (2, 3, 0), (3, 0, 2), (3, 2, 0)):
            perm = [0, 1, 2, 3]
            perm[0], perm[2], perm[3] = a, b, c
            perms.append(tuple(perm))
    elif spec.family == 'E' and n == 6:
        perms.append((5, 1, 4, 3, 2, 0))
    return perms

def canonical_form(spec, sigma):
    '''
    Representative of (spec, Sigma) up to diagram symmetry, with C2 read
    as B2 and D3 as A3.
    '''
    sigma = Sigma(sigma)
    if spec.family == 'C' and spec.rank == 2:
        spec, sigma = AlgebraSpec('B', 2), Sigma(1 - i for i in sigma)
    elif spec.family == 'D' and spec.rank == 3:
        spec, sigma = AlgebraSpec('A', 3), Sigma((1, 0, 2)[i] for i in sigma)
    images = [ Sigma(perm[i] for i in sigma) for perm in _automorphisms(spec) ]
    return spec, min(images)

def case_label(spec, sigma):
    '''
    Name of a non-rigid Monge grading (Ia, ..., Vb), or None.
    '''
    spec, sigma = canonical_form(spec, sigma)
    f, n, labels = spec.family, spec.rank, tuple(sigma.labels())
    if f == 'A':
        if labels == (1, 2, 3) and n >= 3:
            return 'Ia'
        if labels == (1, 2):
            return 'Ib'
    elif f == 'C':
        if labels == (n - 1, n) and n >= 3:
            return 'IIa'
        if n == 3 and labels == (1, 2, 3):
            return 'IIb'
    elif f == 'B':
        if labels == (1, 2):
            return 'IIIa'
        if n == 2 and labels == (2,):
            return 'IIIb'
        if n == 3 and labels == (2, 3):
            return 'IIIc'
        if n == 3 and labels == (1, 2, 3):
            return 'IIId'
    elif f == 'D':
        if labels == (1, 2) and n >= 4:
            return 'IVa'
    elif f == 'G':
        return { (1,): 'Va', (1, 2): 'Vb' }.get(labels)
    return None

NON_RIGID_CASES = ('Ia', 'Ib', 'IIa', 'IIb', 'IIIa', 'IIIb', 'IIIc', 'IIId', 'IVa', 'Va', 'Vb')

# Cases with a degree one cohomology component of non-negative weight,
# given as (label, rank) with rank None for every rank
H1_EXCEPTIONS = (('Ib', None), ('IIIb', None), ('IIIa', 2))

def non_rigid_gradings(max_rank):
    '''
    Every non-rigid grading of Monge type for the simple algebras of rank
    at most max_rank, as (label, AlgebraSpec, Sigma).  The label is None
    for a grading outside the known list.
    '''
    result = [ ]
    for spec in simple_algebras(max_rank, include_c2=False):
        rs = build_root_system(spec)
        for sigma, verdict in enumerate_monge(spec):
            if not is_rigid(rs, sigma):
                result.append((case_label(spec, sigma), spec, sigma))
    return result
