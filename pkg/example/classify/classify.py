# -----------------------------------------------------------------------------
# classify.py
#
# Every Monge grading of the simple algebras up to a given rank, with the
# ones that are not rigid named by case.
#
#     python classify.py [max_rank]
# -----------------------------------------------------------------------------

import sys
sys.path.insert(0, '../../src')

from mongetools import (AlgebraSpec, DomainError, build_root_system, enumerate_monge,
                        is_rigid, non_rigid_gradings)

FAMILIES = [ ('A', 1), ('B', 2), ('C', 3), ('D', 4), ('E', 6), ('F', 4), ('G', 2) ]

def monge_gradings(max_rank):
    for family, first in FAMILIES:
        for rank in range(first, max_rank + 1):
            try:
                spec = AlgebraSpec(family, rank)
            except DomainError:
                continue
            rs = build_root_system(spec)
            for sigma, verdict in enumerate_monge(spec):
                yield spec, rs, sigma, verdict

if __name__ == '__main__':
    max_rank = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    total = rigid = 0
    for spec, rs, sigma, verdict in monge_gradings(max_rank):
        total += 1
        rigid += is_rigid(rs, sigma)
    print(f'{total} Monge gradings of rank at most {max_rank}, {rigid} of them rigid')
    for label, spec, sigma in non_rigid_gradings(max_rank):
        print(f'  {label or "?":5} {spec}{sigma}')
