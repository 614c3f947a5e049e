# -----------------------------------------------------------------------------
# mongetools: report.py
#
# Markdown tables of cohomology weights and symmetry grades, and their
# comparison against the golden copies kept under data/golden/.
#
# A table row whose rank is written as l is evaluated at every rank from
# its threshold up to the stabilization rank, and every evaluation must
# render identically.
# -----------------------------------------------------------------------------

import difflib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .config import log as default_log, STABILIZATION_RANK, DEFAULT_WORKERS
from .cohomology import cohomology_classes, enumerate_w2, homogeneity_weight, format_highest_weight
from .errors import DomainError, InvariantError
from .grading import Sigma
from .rootsys import AlgebraSpec, build_root_system
from .symsolver import monge_spec, solve_symmetries, grade_decomposition

__all__ = [ 'TableRow', 'TableResult', 'TableReproducer', 'TABLES', 'GOLDEN_DIR',
            'build_table', 'golden_path', 'compare_table', 'reproduce_tables' ]

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'data', 'golden', 'v1')

ELL = 'ℓ'

@dataclass(frozen=True)
class TableRow:
    '''
    One Monge system.  sigma holds 1-based labels, or for tail rows the
    offsets of the labels from the rank (0 for alpha_l, 1 for alpha_l-1).
    '''
    family: str
    rank: int
    sigma: tuple
    relative: bool = False
    tail: bool = False
    case: str = None

    def ranks(self, stabilization_rank):
        if not self.relative:
            return [ self.rank ]
        if stabilization_rank < self.rank:
            raise DomainError(f'stabilization rank {stabilization_rank} is below the threshold {self.rank}')
        return list(range(self.rank, stabilization_rank + 1))

    def labels(self, ell):
        if self.tail:
            return sorted(ell - k for k in self.sigma)
        return list(self.sigma)

    def evaluate(self, ell):
        spec = AlgebraSpec(self.family, ell)
        return spec, build_root_system(spec), Sigma.from_labels(self.labels(ell))

    def index_label(self, ell):
        # 0-based simple root index as printed
        if not self.tail:
            return None
        return lambda i: ELL if i == ell - 1 else f'{ELL}-{ell - 1 - i}'

    def weight_label(self, ell):
        # Numbering of fundamental weights within a factor of the degree zero part
        if not self.relative:
            return None
        return lambda m, size: f'{ELL}-{ell - size}' if m == size and size > 1 else str(m)

    def name(self):
        if not self.relative:
            return f'{self.family}{self.rank}{{{",".join(map(str, self.sigma))}}}'
        if self.tail:
            inner = ','.join(ELL if k == 0 else f'{ELL}-{k}' for k in sorted(self.sigma, reverse=True))
        else:
            inner = ','.join(map(str, self.sigma))
        return f'{self.family}{ELL}{{{inner}}}, {ELL} ≥ {self.rank}'

def _stable(row, stabilization_rank, compute):
    '''
    compute(row, ell) at every rank of the row; all results must agree.
    '''
    first = None
    for ell in row.ranks(stabilization_rank):
        value = compute(row, ell)
        if first is None:
            first = value
        elif value != first:
            raise InvariantError(f'{row.name()} does not stabilize: {first} at rank {row.rank}, {value} at rank {ell}')
    return first

# -----------------------------------------------------------------------------
# Tables of W^2 and homogeneity weights
# -----------------------------------------------------------------------------

W2_ROWS = {
    'w2_a': ('W² for type A', [
        TableRow('A', 2, (1, 2)),
        TableRow('A', 3, (1, 2)),
        TableRow('A', 4, (1, 2), relative=True),
        TableRow('A', 3, (1, 2, 3)),
        TableRow('A', 4, (1, 2, 3)),
        TableRow('A', 5, (1, 2, 3), relative=True),
    ]),
    'w2_c': ('W² for type C', [
        TableRow('C', 3, (1, 2, 3)),
        TableRow('C', 3, (2, 3)),
        TableRow('C', 4, (1, 0), relative=True, tail=True),
    ]),
    'w2_b': ('W² for type B', [
        TableRow('B', 2, (1, 2)),
        TableRow('B', 2, (2,)),
        TableRow('B', 3, (1, 2)),
        TableRow('B', 3, (2, 3)),
        TableRow('B', 3, (1, 2, 3)),
        TableRow('B', 4, (1, 2), relative=True),
        TableRow('B', 4, (3, 4)),
        TableRow('B', 5, (1, 0), relative=True, tail=True),
    ]),
    'w2_d': ('W² for type D', [
        TableRow('D', 4, (1, 2)),
        TableRow('D', 5, (1, 2), relative=True),
        TableRow('D', 5, (3, 5)),
        TableRow('D', 6, (2, 0), relative=True, tail=True),
    ]),
    'w2_exceptional': ('W² for the exceptional algebras', [
        TableRow('G', 2, (1,)),
        TableRow('G', 2, (1, 2)),
        TableRow('F', 4, (1, 2)),
        TableRow('E', 6, (5, 6)),
        TableRow('E', 7, (6, 7)),
    ]),
}

def _w2_cells(row, ell):
    spec, rs, sigma = row.evaluate(ell)
    elements = enumerate_w2(rs, sigma)
    label = row.index_label(ell)
    names = '[' + ', '.join(w.label(label) for w in elements) + ']'
    weights = '[' + ', '.join(str(homogeneity_weight(rs, sigma, w)) for w in elements) + ']'
    return names, weights

def render_w2_table(title, rows, stabilization_rank=STABILIZATION_RANK):
    lines = [ f'# {title}', '',
              '| Monge system | W²_Σ | Weights of σ_ij |',
              '|---|---|---|' ]
    for row in rows:
        names, weights = _stable(row, stabilization_rank, _w2_cells)
        lines.append(f'| {row.name()} | {names} | {weights} |')
    return '\n'.join(lines) + '\n'

# -----------------------------------------------------------------------------
# Positive weight components of H^2 for the non-rigid cases
# -----------------------------------------------------------------------------

H2_ROWS = [
    TableRow('A', 3, (1, 2, 3), case='Ia'),
    TableRow('A', 4, (1, 2, 3), relative=True, case='Ia'),
    TableRow('C', 3, (2, 3), case='IIa'),
    TableRow('C', 4, (1, 0), relative=True, tail=True, case='IIa'),
    TableRow('C', 3, (1, 2, 3), case='IIb'),
    TableRow('B', 3, (1, 2), case='IIIa'),
    TableRow('B', 4, (1, 2), relative=True, case='IIIa'),
    TableRow('B', 3, (2, 3), case='IIIc'),
    TableRow('B', 3, (1, 2, 3), case='IIId'),
    TableRow('D', 4, (1, 2), case='IVa'),
    TableRow('D', 5, (1, 2), relative=True, case='IVa'),
    TableRow('G', 2, (1,), case='Va'),
    TableRow('G', 2, (1, 2), case='Vb'),
]

def _h2_cells(row, ell):
    spec, rs, sigma = row.evaluate(ell)
    cells = [ ]
    for c in cohomology_classes(rs, sigma, q=2):
        if c.homogeneity_weight < 1:
            continue
        highest = format_highest_weight(rs, sigma, c.highest_weight_pairings, row.weight_label(ell))
        cells.append((c.sigma.label(row.index_label(ell)), c.homogeneity_weight,
                      c.minus_sigma_theta_weight, highest))
    return cells

def render_h2_table(rows=H2_ROWS, stabilization_rank=STABILIZATION_RANK):
    lines = [ '# Positive weight components of H²(g₋, g)', '',
              '| Case | Monge system | σ | Hom. wt | Wt of -σ(θ) | Highest weight |',
              '|---|---|---|---|---|---|' ]
    for row in rows:
        for name, weight, mst, highest in _stable(row, stabilization_rank, _h2_cells):
            lines.append(f'| {row.case} | {row.name()} | {name} | {weight} | {mst} | {highest} |')
    return '\n'.join(lines) + '\n'

# -----------------------------------------------------------------------------
# Symmetry generators by grade
# -----------------------------------------------------------------------------

SYMMETRY_ROWS = [
    ('Ia', 3, None),
    ('IIa', 3, None),
    ('IIIa', 3, (2, 1)),
]

def render_symmetry_table(rows=SYMMETRY_ROWS):
    lines = [ '# Symmetry generators by grade', '',
              '| Case | Rank | Signature | Grade -1 | Grade 0 | Grade 1 | Dimension |',
              '|---|---|---|---|---|---|---|' ]
    for case_id, ell, signature in rows:
        ms = monge_spec(case_id, ell, signature)
        sa = solve_symmetries(ms)
        dims = grade_decomposition(sa, ms.weights('uniform'))
        if sum(dims.values()) != sa.dimension:
            raise InvariantError(f'{case_id} is not graded by the uniform weights')
        sig = f'({signature[0]},{signature[1]})' if signature else '-'
        lines.append(f'| {case_id} | {ell} | {sig} | {dims.get(-1, 0)} | {dims.get(0, 0)} '
                     f'| {dims.get(1, 0)} | {sa.dimension} |')
    return '\n'.join(lines) + '\n'

# -----------------------------------------------------------------------------
# Reproduction of every table
# -----------------------------------------------------------------------------

TABLES = ( 'w2_a', 'w2_c', 'w2_b', 'w2_d', 'w2_exceptional', 'h2_final', 'symmetry_grades' )

def build_table(name, stabilization_rank=STABILIZATION_RANK):
    '''
    Markdown text of one named table.
    '''
    if name in W2_ROWS:
        title, rows = W2_ROWS[name]
        return render_w2_table(title, rows, stabilization_rank)
    if name == 'h2_final':
        return render_h2_table(H2_ROWS, stabilization_rank)
    if name == 'symmetry_grades':
        return render_symmetry_table()
    raise DomainError(f'unknown table {name!r}')

def golden_path(name, golden_dir=GOLDEN_DIR):
    return os.path.join(golden_dir, name + '.md')

@dataclass
class TableResult:
    name: str
    ok: bool
    text: str
    diff: str = ''

def compare_table(name, text, golden_dir=GOLDEN_DIR):
    path = golden_path(name, golden_dir)
    with open(path, encoding='utf-8') as f:
        golden = f.read()
    if text == golden:
        return TableResult(name, True, text)
    diff = ''.join(difflib.unified_diff(golden.splitlines(True), text.splitlines(True),
                                        fromfile=path, tofile=f'{name} (computed)'))
    return TableResult(name, False, text, diff)

class TableReproducer:
    log = default_log

    def __init__(self, workers=DEFAULT_WORKERS, stabilization_rank=STABILIZATION_RANK,
                 golden_dir=GOLDEN_DIR, tables=TABLES):
        self.workers = workers
        self.stabilization_rank = stabilization_rank
        self.golden_dir = golden_dir
        self.tables = list(tables)

    def build_all(self):
        ranks = [ self.stabilization_rank ] * len(self.tables)
        if self.workers > 1 and len(self.tables) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                return list(pool.map(build_table, self.tables, ranks))
        return [ build_table(name, rank) for name, rank in zip(self.tables, ranks) ]

    def run(self):
        '''
        Build every table and compare it with its golden copy.  Results
        come back in table order whatever the number of workers.
        '''
        results = [ ]
        for name, text in zip(self.tables, self.build_all()):
            result = compare_table(name, text, self.golden_dir)
            self.log.info('%s: %s', name, 'ok' if result.ok else 'MISMATCH')
            results.append(result)
        return results

def reproduce_tables(workers=DEFAULT_WORKERS, stabilization_rank=STABILIZATION_RANK,
                     golden_dir=GOLDEN_DIR):
    return TableReproducer(workers, stabilization_rank, golden_dir).run()
