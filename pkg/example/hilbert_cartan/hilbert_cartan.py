# -----------------------------------------------------------------------------
# hilbert_cartan.py
#
# The Hilbert-Cartan equation z' = (y'')^2 from scratch: the G2 grading,
# its nilpotent algebra, the Maurer-Cartan forms, the Pfaffian system and
# the fourteen dimensional symmetry algebra.
# -----------------------------------------------------------------------------

import sys
sys.path.insert(0, '../../src')

from mongetools import (AlgebraSpec, Sigma, build_root_system, grading_components,
                        is_monge, cohomology_classes, format_highest_weight,
                        case_basis, compute_mc_forms, standard_pfaffian,
                        monge_normal_form, pfaffian_symmetries, grade_decomposition,
                        killing_signature)

spec = AlgebraSpec('G', 2)
rs = build_root_system(spec)
sigma = Sigma.from_labels([1])

info = grading_components(rs, sigma)
print(f'{spec}{sigma}: depth {info.depth}, dimensions {info.dims}')

verdict = is_monge(rs, sigma)
print('Monge:', verdict.is_monge, verdict.reason.value)

for c in cohomology_classes(rs, sigma):
    print(f'  {c.sigma.label()}: weight {c.homogeneity_weight}, '
          f'highest weight {format_highest_weight(rs, sigma, c.highest_weight_pairings)}')

g = case_basis('Va')
cf = compute_mc_forms(g)
print('Coframe:')
for label, text in cf.describe():
    print(f'  theta_{label.lower()} = {text}')

ps = standard_pfaffian(cf)
print('Pfaffian system:')
for label, text in ps.describe():
    print(f'  {label} = {text}')
print('Normal form:', monge_normal_form('Va'))

sa = pfaffian_symmetries(ps)
print('Symmetries:', sa.dimension)
print('Grades:', grade_decomposition(sa, ps.weights))
print('Killing signature:', killing_signature(sa))
