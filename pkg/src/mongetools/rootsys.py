# -----------------------------------------------------------------------------
# mongetools: rootsys.py
#
# Root systems of the simple Lie algebras.  Roots are integer coefficient
# vectors over the simple roots.  Everything is derived from the matrix of
# inner products (alpha_i, alpha_j) of the simple roots, which is written
# down directly for each family using the usual (Bourbaki/Humphreys)
# numbering:
#
#     A_l   o---o---o-- ... --o---o
#           1   2   3        l-1  l
#
#     B_l   o---o-- ... --o==>o      alpha_l short
#     C_l   o---o-- ... --o<==o      alpha_l long
#
#     D_l   o---o-- ... --o---o l-1       E_l   1---3---4---5--...--l
#                          \                            |
#                           o l                         2
#
#     F_4   o---o==>o---o              G_2   o<≡≡o
#           1   2   3   4                    1   2     (alpha_1 short)
# -----------------------------------------------------------------------------

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [ 'AlgebraSpec', 'Root', 'RootSystem', 'build_root_system',
            'cartan_integer', 'simple_reflection', 'is_long', 'weyl_apply',
            'fundamental_pairings', 'semisimple_part', 'weyl_group_elements',
            'simple_algebras' ]

_MIN_RANK = { 'A': 1, 'B': 2, 'C': 2, 'D': 3 }
_EXCEPTIONAL_RANKS = { 'E': (6, 7, 8), 'F': (4,), 'G': (2,) }

@dataclass(frozen=True, order=True)
class AlgebraSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in 'ABCDEFG' or len(self.family) != 1:
            raise DomainError(f'unknown family {self.family!r}')
        if not isinstance(self.rank, int):
            raise DomainError('rank must be an integer')
        if self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise DomainError(f'{self.family}_l needs rank at least {_MIN_RANK[self.family]}')
        elif self.rank not in _EXCEPTIONAL_RANKS[self.family]:
            raise DomainError(f'there is no algebra {self.family}{self.rank}')

    def __str__(self):
        return f'{self.family}{self.rank}'

class Root(tuple):
    '''
    Coefficients of a root (or any weight in the root lattice) over the
    simple roots.  Arithmetic is componentwise.
    '''
    __slots__ = ()

    def __new__(cls, coefficients):
        return super().__new__(cls, (int(c) for c in coefficients))

    def __add__(self, other):
        return Root(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Root(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Root(-a for a in self)

    def __mul__(self, k):
        return Root(a * k for a in self)

    __rmul__ = __mul__

    def __getnewargs__(self):
        return (tuple(self),)

    def height(self):
        return sum(self)

    def is_positive(self):
        return any(self) and all(c >= 0 for c in self)

    def is_negative(self):
        return any(self) and all(c <= 0 for c in self)

    def __repr__(self):
        return f'Root({tuple(self)!r})'

    def __str__(self):
        parts = [ ]
        for i, c in enumerate(self, start=1):
            if c == 0:
                continue
            mag = '' if abs(c) == 1 else str(abs(c))
            term = f'{mag}α{i}'
            if not parts:
                parts.append(term if c > 0 else '-' + term)
            else:
                parts.append(('+ ' if c > 0 else '- ') + term)
        return ' '.join(parts) if parts else '0'

def _simple_root(rank, i):
    return Root(1 if k == i else 0 for k in range(rank))

def _gram_matrix(family, rank):
    '''
    Inner products of the simple roots, normalized so that every entry is
    an integer and the shortest roots have squared length 2.
    '''
    n = rank
    g = [ [0] * n for _ in range(n) ]
    def bond(i, j, value):
        g[i-1][j-1] = g[j-1][i-1] = value

    if family in 'ADE':
        for i in range(n):
            g[i][i] = 2
        if family == 'A':
            for i in range(1, n):
                bond(i, i+1, -1)
        elif family == 'D':
            for i in range(1, n-1):
                bond(i, i+1, -1)
            bond(n-2, n, -1)
        else:
            bond(1, 3, -1)
            bond(2, 4, -1)
            for i in range(3, n):
                bond(i, i+1, -1)
    elif family == 'B':
        for i in range(n):
            g[i][i] = 4
        g[n-1][n-1] = 2
        for i in range(1, n):
            bond(i, i+1, -2)
    elif family == 'C':
        for i in range(n):
            g[i][i] = 2
        g[n-1][n-1] = 4
        for i in range(1, n-1):
            bond(i, i+1, -1)
        bond(n-1, n, -2)
    elif family == 'F':
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        bond(1, 2, -2)
        bond(2, 3, -2)
        bond(3, 4, -1)
    elif family == 'G':
        g[0][0] = 2
        g[1][1] = 6
        bond(1, 2, -3)
    return g

class RootSystem:
    '''
    A reduced root system given by the Gram matrix of a base.  Indices of
    simple roots are 0-based throughout the package; only printed labels
    are 1-based.
    '''
    def __init__(self, gram, spec=None):
        self.spec = spec
        self.gram = [ list(row) for row in gram ]
        n = self.rank = len(gram)
        for i in range(n):
            if self.gram[i][i] <= 0:
                raise DomainError('simple roots must have positive length')
        # cartan_matrix[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i) and
        # symmetrizer[i]*cartan_matrix[i][j] = (alpha_i, alpha_j)
        self.cartan_matrix = [ [ (2 * self.gram[i][j]) // self.gram[i][i] for j in range(n) ]
                               for i in range(n) ]
        self.symmetrizer = [ self.gram[i][i] // 2 for i in range(n) ]
        self.adjacency = frozenset(frozenset((i, j)) for i in range(n) for j in range(i+1, n)
                                   if self.gram[i][j])
        self.simple_roots = [ _simple_root(n, i) for i in range(n) ]
        self.positive_roots = self._generate()
        self._roots = set(self.positive_roots) | { -b for b in self.positive_roots }
        top = max(b.height() for b in self.positive_roots)
        highest = [ b for b in self.positive_roots if b.height() == top ]
        if len(highest) != 1:
            raise DomainError('Gram matrix does not describe an irreducible root system')
        self.highest_root = highest[0]
        lengths = { self.inner(b, b) for b in self.positive_roots }
        self.long_length = max(lengths)

    @classmethod
    def from_spec(cls, spec):
        return cls(_gram_matrix(spec.family, spec.rank), spec)

    def __repr__(self):
        if self.spec:
            return f'RootSystem({self.spec})'
        return f'RootSystem(rank={self.rank})'

    def _generate(self):
        # Roots of height h+1 are found from those of height h with root
        # strings: beta + alpha_i is a root iff p - <beta, alpha_i> > 0 where
        # p is the largest r with beta - r*alpha_i a root.
        layer = list(self.simple_roots)
        found = set(layer)
        roots = list(layer)
        while layer:
            following = [ ]
            for beta in layer:
                for i in range(self.rank):
                    alpha = self.simple_roots[i]
                    p = 0
                    while beta - alpha * (p + 1) in found:
                        p += 1
                    if p - self.pairing(beta, i) > 0:
                        gamma = beta + alpha
                        if gamma not in found:
                            found.add(gamma)
                            following.append(gamma)
            following.sort(key=lambda b: tuple(b), reverse=True)
            roots.extend(following)
            layer = following
        return roots

    @property
    def roots(self):
        return self.positive_roots + [ -b for b in self.positive_roots ]

    def is_root(self, beta):
        return Root(beta) in self._roots

    def _check_root(self, beta):
        if not self.is_root(beta):
            raise DomainError(f'{beta} is not a root')

    def _check_index(self, i):
        if not 0 <= i < self.rank:
            raise DomainError(f'simple root index {i} out of range')

    def inner(self, beta, gamma):
        return sum(b * self.gram[i][j] * c for i, b in enumerate(beta) if b
                   for j, c in enumerate(gamma) if c)

    def pairing(self, weight, i):
        '''
        <weight, alpha_i> = 2(weight, alpha_i)/(alpha_i, alpha_i) for any
        element of the root lattice.
        '''
        value = Fraction(2 * sum(c * self.gram[k][i] for k, c in enumerate(weight)), self.gram[i][i])
        if value.denominator != 1:
            raise DomainError('weight does not pair integrally with a simple root')
        return int(value)

    def reflect(self, i, weight):
        return Root(weight) - self.simple_roots[i] * self.pairing(weight, i)

    def neighbors(self, i):
        return sorted(j for j in range(self.rank) if j != i and self.gram[i][j])

    def components(self, nodes):
        '''
        Connected components of the Dynkin diagram restricted to nodes,
        each as a sorted tuple, ordered by their smallest node.
        '''
        nodes = set(nodes)
        result = [ ]
        while nodes:
            start = min(nodes)
            stack, comp = [start], { start }
            while stack:
                i = stack.pop()
                for j in self.neighbors(i):
                    if j in nodes and j not in comp:
                        comp.add(j)
                        stack.append(j)
            nodes -= comp
            result.append(tuple(sorted(comp)))
        return sorted(result)

    def subsystem(self, nodes):
        '''
        Root system spanned by a connected set of simple roots, with its
        simple roots in the order of nodes.
        '''
        nodes = list(nodes)
        gram = [ [ self.gram[i][j] for j in nodes ] for i in nodes ]
        return RootSystem(gram)

def build_root_system(spec):
    return RootSystem.from_spec(spec)

def simple_algebras(max_rank, include_c2=True):
    '''
    Every simple algebra of rank at most max_rank, classical families
    first.  D starts at rank 4.  C2 is the same algebra as B2 and is left
    out when include_c2 is false.
    '''
    for family, first in (('A', 1), ('B', 2), ('C', 2 if include_c2 else 3), ('D', 4)):
        for rank in range(first, max_rank + 1):
            yield AlgebraSpec(family, rank)
    for family, ranks in sorted(_EXCEPTIONAL_RANKS.items()):
        for rank in ranks:
            if rank <= max_rank:
                yield AlgebraSpec(family, rank)

def cartan_integer(rs, beta, i):
    rs._check_root(beta)
    rs._check_index(i)
    return rs.pairing(beta, i)

def simple_reflection(rs, i, beta):
    rs._check_root(beta)
    rs._check_index(i)
    return rs.reflect(i, beta)

def is_long(rs, beta):
    rs._check_root(beta)
    return rs.inner(beta, beta) == rs.long_length

def weyl_apply(rs, word, beta):
    '''
    Apply s_{w[0]} o s_{w[1]} o ... to beta, rightmost reflection first.
    '''
    rs._check_root(beta)
    beta = Root(beta)
    for i in reversed(list(word)):
        rs._check_index(i)
        beta = rs.reflect(i, beta)
    return beta

def fundamental_pairings(rs, weight):
    return [ rs.pairing(weight, i) for i in range(rs.rank) ]

def weyl_group_elements(rs):
    '''
    Every element of the Weyl group as a reduced word, found by breadth
    first search on the action on the simple roots.  Only sensible for
    small ranks.
    '''
    def action(word):
        return tuple(weyl_apply(rs, word, a) for a in rs.simple_roots)

    seen = { action(()): () }
    frontier = [ () ]
    while frontier:
        following = [ ]
        for word in frontier:
            for i in range(rs.rank):
                if word and word[0] == i:
                    continue
                candidate = (i,) + word
                key = action(candidate)
                if key not in seen:
                    seen[key] = candidate
                    following.append(candidate)
        frontier = following
    return sorted(seen.values(), key=lambda w: (len(w), w))

# -----------------------------------------------------------------------------
# Classification of connected Dynkin diagrams
# -----------------------------------------------------------------------------

def _classify(rs):
    n = rs.rank
    lengths = [ rs.gram[i][i] for i in range(n) ]
    if n == 1:
        return 'A'
    if len(set(lengths)) == 1:
        degrees = [ len(rs.neighbors(i)) for i in range(n) ]
        if max(degrees) <= 2:
            return 'A'
        fork = degrees.index(3)
        arms = [ ]
        for start in rs.neighbors(fork):
            size, previous, current = 1, fork, start
            while True:
                ahead = [ j for j in rs.neighbors(current) if j != previous ]
                if not ahead:
                    break
                previous, current = current, ahead[0]
                size += 1
            arms.append(size)
        arms.sort()
        if arms[:2] == [1, 1]:
            return 'D'
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return 'E'
        raise DomainError(f'diagram with arms {arms} is not of finite type')
    ratio = max(lengths) // min(lengths)
    if ratio == 3:
        return 'G'
    if n == 4 and lengths.count(max(lengths)) == 2:
        ends = [ i for i in range(n) if len(rs.neighbors(i)) == 1 ]
        if all(lengths[rs.neighbors(i)[0]] == lengths[i] for i in ends):
            return 'F'
    shorts = lengths.count(min(lengths))
    return 'B' if shorts == 1 else 'C'

def semisimple_part(rs, sigma):
    '''
    Simple factors of the semisimple part of the degree zero subalgebra:
    the components of the Dynkin diagram with the nodes of sigma removed,
    as (family, rank, nodes) with 0-based nodes.
    '''
    rest = [ i for i in range(rs.rank) if i not in set(sigma) ]
    return [ (_classify(rs.subsystem(comp)), len(comp), comp) for comp in rs.components(rest) ]
