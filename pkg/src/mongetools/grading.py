# -----------------------------------------------------------------------------
# mongetools: grading.py
#
# Gradings of a simple Lie algebra by a nonempty set Sigma of simple roots.
# The grading element acts on the root space of beta by ht_Sigma(beta),
# the sum of the coefficients of beta over the roots in Sigma.
# -----------------------------------------------------------------------------

from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [ 'Sigma', 'GradingInfo', 'height', 'grading_components', 'depth',
            'grading_element_eigenvalue', 'roots_of_degree', 'is_generated' ]

class Sigma(tuple):
    '''
    Sorted set of 0-based simple root indices.  Printed 1-based, as the
    roots are numbered in tables: Sigma((0, 1)) prints as {1,2}.
    '''
    __slots__ = ()

    def __new__(cls, indices):
        indices = sorted(set(int(i) for i in indices))
        if not indices:
            raise DomainError('a grading needs at least one simple root')
        if indices[0] < 0:
            raise DomainError('simple root indices must be non-negative')
        return super().__new__(cls, indices)

    def __getnewargs__(self):
        return (tuple(self),)

    @classmethod
    def from_labels(cls, labels):
        '''
        Build from 1-based labels.
        '''
        return cls(i - 1 for i in labels)

    def check(self, rs):
        if self[-1] >= rs.rank:
            raise DomainError(f'simple root {self[-1] + 1} out of range for rank {rs.rank}')
        return self

    def labels(self):
        return [ i + 1 for i in self ]

    def __repr__(self):
        return f'Sigma({tuple(self)!r})'

    def __str__(self):
        return '{' + ','.join(str(i + 1) for i in self) + '}'

@dataclass
class GradingInfo:
    depth: int
    components: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)

    def dimension(self, j):
        return self.dims.get(j, 0)

def height(beta, sigma):
    return sum(beta[i] for i in sigma)

def grading_element_eigenvalue(beta, sigma):
    '''
    Eigenvalue of the grading element on the root space of beta; negative
    roots give -ht_Sigma of their opposite.
    '''
    return height(beta, sigma)

def roots_of_degree(rs, sigma, j):
    return [ beta for beta in rs.roots if height(beta, sigma) == j ]

def grading_components(rs, sigma):
    sigma = Sigma(sigma).check(rs)
    k = depth(rs, sigma)
    components = { j: [ ] for j in range(-k, k + 1) }
    for beta in rs.roots:
        components[height(beta, sigma)].append(beta)
    dims = { j: len(roots) for j, roots in components.items() }
    dims[0] += rs.rank
    return GradingInfo(k, components, dims)

def depth(rs, sigma):
    sigma = Sigma(sigma).check(rs)
    return height(rs.highest_root, sigma)

def is_generated(rs, sigma):
    '''
    True if every positive root of Sigma-height j + 1 >= 2 is a root of
    height j plus one of height 1, so that g_- is generated by g_{-1}.
    '''
    sigma = Sigma(sigma).check(rs)
    ones = [ gamma for gamma in rs.positive_roots if height(gamma, sigma) == 1 ]
    return all(any(rs.is_root(beta - gamma) for gamma in ones)
               for beta in rs.positive_roots if height(beta, sigma) >= 2)
