# -----------------------------------------------------------------------------
# mongetools: monge.py
#
# Gradings of Monge type.  A grading is of Monge type when g_{-1} has an
# abelian subalgebra y of codimension one whose bracket with a complement
# x = g_{-zeta} maps y isomorphically onto g_{-2}.
#
# When dim g_{-1} = 2 there is a short explicit list.  Otherwise Sigma must
# consist of a leader zeta together with all of its Dynkin neighbors, and
# every component of the diagram with zeta removed must be |1|-graded by
# the single root of Sigma it contains.
# -----------------------------------------------------------------------------

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .config import log, ORACLE_RANK
from .errors import NotMongeError, InvariantError
from .grading import Sigma, roots_of_degree
from .rootsys import build_root_system, is_long, simple_algebras

__all__ = [ 'Reason', 'MongeVerdict', 'BranchComponent', 'is_monge',
            'branch_components', 'branch_is_one_graded', 'enumerate_monge',
            'structural_monge_oracle', 'oracle_sweep', 'y_is_invariant', 'RANK_TWO_MONGE' ]

class Reason(enum.Enum):
    RANK_TWO = 'dim g-1 = 2 list'
    ADJACENCY = 'leader adjacency'
    BRANCH = '|1|-graded branch'
    STRUCTURAL = 'structural'

# Monge gradings with dim g_{-1} = 2, by family and 1-based labels.  C2 is
# read as B2 with the two roots exchanged.
RANK_TWO_MONGE = {
    ('A', (1, 2)),
    ('B', (2,)),
    ('B', (1, 2)),
    ('G', (1,)),
    ('G', (1, 2)),
}

@dataclass
class MongeVerdict:
    is_monge: bool
    leader: int = None
    y_roots: list = field(default_factory=list)
    reason: Reason = Reason.ADJACENCY
    long_root: bool = False
    dim_matches: bool = False
    ad_isomorphism: bool = False

@dataclass(frozen=True)
class BranchComponent:
    alpha: int
    nodes: tuple
    rs: object = field(repr=False, compare=False, default=None)

def _degree_one(rs, sigma):
    return roots_of_degree(rs, sigma, 1)

def _structure_flags(rs, sigma, zeta):
    '''
    (abelian, dim g_{-2} = dim y, ad_x maps y onto g_{-2}) for y the span
    of the degree one roots other than alpha_zeta.
    '''
    d1 = _degree_one(rs, sigma)
    d2 = roots_of_degree(rs, sigma, 2)
    lead = rs.simple_roots[zeta]
    y = [ b for b in d1 if b != lead ]
    abelian = not any(rs.is_root(a + b) for a, b in combinations(y, 2))
    dim_matches = len(d2) == len(y)
    images = { lead + b for b in y }
    ad_iso = all(rs.is_root(g) for g in images) and len(images) == len(y) and dim_matches
    return abelian, dim_matches, ad_iso, y

def _canonical_rank_two(rs, sigma):
    family = rs.spec.family
    labels = tuple(i + 1 for i in sigma)
    if family == 'C':
        family, labels = 'B', tuple(sorted(3 - i for i in labels))
    return family, labels

def branch_components(rs, zeta, sigma):
    '''
    Components of the Dynkin diagram with zeta removed, one for each root
    of Sigma other than zeta.  Raises NotMongeError unless every component
    holds exactly one root of Sigma.
    '''
    sigma = Sigma(sigma).check(rs)
    if zeta not in sigma:
        raise NotMongeError(f'leader {zeta + 1} is not in {sigma}')
    others = set(sigma) - { zeta }
    result = [ ]
    for comp in rs.components(i for i in range(rs.rank) if i != zeta):
        inside = others.intersection(comp)
        if len(inside) != 1:
            raise NotMongeError(f'component {[i + 1 for i in comp]} holds {len(inside)} roots of {sigma}')
        result.append(BranchComponent(inside.pop(), comp, rs))
    return sorted(result, key=lambda c: c.alpha)

def branch_is_one_graded(comp):
    sub = comp.rs.subsystem(comp.nodes)
    local = comp.nodes.index(comp.alpha)
    return sub.highest_root[local] == 1

def structural_monge_oracle(rs, sigma):
    '''
    Decide Monge type straight from the definition, trying every root of
    Sigma as the complement x of y.
    '''
    sigma = Sigma(sigma).check(rs)
    d1 = _degree_one(rs, sigma)
    if len(d1) >= 2:
        for zeta in sigma:
            abelian, dim_matches, ad_iso, y = _structure_flags(rs, sigma, zeta)
            if abelian and ad_iso:
                return MongeVerdict(True, zeta, y, Reason.STRUCTURAL,
                                    any(is_long(rs, rs.simple_roots[i]) for i in sigma),
                                    dim_matches, ad_iso)
    return MongeVerdict(False, reason=Reason.STRUCTURAL)

def is_monge(rs, sigma):
    sigma = Sigma(sigma).check(rs)
    d1 = _degree_one(rs, sigma)
    long_root = any(is_long(rs, rs.simple_roots[i]) for i in sigma)

    if len(d1) <= 2:
        if len(d1) < 2 or rs.rank != 2 or rs.spec is None:
            return MongeVerdict(False, reason=Reason.RANK_TWO, long_root=long_root)
        if _canonical_rank_two(rs, sigma) not in RANK_TWO_MONGE:
            return MongeVerdict(False, reason=Reason.RANK_TWO, long_root=long_root)
        for zeta in sigma:
            abelian, dim_matches, ad_iso, y = _structure_flags(rs, sigma, zeta)
            if abelian and ad_iso:
                return MongeVerdict(True, zeta, y, Reason.RANK_TWO, long_root, dim_matches, ad_iso)
        raise InvariantError(f'{rs.spec}{sigma} is listed as Monge but has no leader')

    # A leader is adjacent to every other root of Sigma and Sigma holds all
    # of its neighbors
    leaders = [ z for z in sigma if set(sigma) == { z, *rs.neighbors(z) } ]
    verdict = MongeVerdict(False, reason=Reason.ADJACENCY, long_root=long_root)
    for zeta in leaders:
        try:
            comps = branch_components(rs, zeta, sigma)
        except NotMongeError:
            continue
        if not all(branch_is_one_graded(c) for c in comps):
            verdict = MongeVerdict(False, zeta, reason=Reason.BRANCH, long_root=long_root)
            continue
        abelian, dim_matches, ad_iso, y = _structure_flags(rs, sigma, zeta)
        verdict = MongeVerdict(True, zeta, y, Reason.BRANCH, long_root, dim_matches, ad_iso)
        break

    if verdict.is_monge != (bool(leaders) and long_root):
        raise InvariantError(f'{rs.spec}{sigma}: branch grading and long root criteria disagree')
    return verdict

def y_is_invariant(rs, sigma, verdict):
    '''
    True if y is a g_0-submodule of g_{-1}, i.e. zeta - beta is not a root
    for any beta spanning y.
    '''
    if not verdict.is_monge:
        return False
    lead = rs.simple_roots[verdict.leader]
    return not any(rs.is_root(lead - b) for b in verdict.y_roots)

def enumerate_monge(spec):
    '''
    All Sigma of Monge type for one algebra, as (Sigma, MongeVerdict) in
    increasing order of Sigma.
    '''
    rs = build_root_system(spec)
    candidates = set()
    for zeta in range(rs.rank):
        candidates.add(Sigma([zeta, *rs.neighbors(zeta)]))
    if rs.rank == 2:
        candidates.update(Sigma(s) for s in ((0,), (1,), (0, 1)))
    result = [ ]
    for sigma in sorted(candidates):
        verdict = is_monge(rs, sigma)
        if verdict.is_monge:
            result.append((sigma, verdict))
    return result

def oracle_sweep(max_rank=ORACLE_RANK):
    '''
    Compare is_monge with structural_monge_oracle on every nonempty Sigma
    of every simple algebra of rank at most max_rank.  Returns the number
    of gradings compared.
    '''
    checked = 0
    for spec in simple_algebras(max_rank):
        rs = build_root_system(spec)
        for size in range(1, rs.rank + 1):
            for nodes in combinations(range(rs.rank), size):
                sigma = Sigma(nodes)
                if is_monge(rs, sigma).is_monge != structural_monge_oracle(rs, sigma).is_monge:
                    raise InvariantError(f'{spec}{sigma}: structural check disagrees with the classification')
                checked += 1
        log.debug('structural check agrees on %s', spec)
    return checked
