# -----------------------------------------------------------------------------
# mongetools: cli.py
#
# Command line interface.  Every command builds a Request, the runner turns
# it into a Report (a plain dict of JSON types) and the report is printed in
# the requested format.  Exit status is 0 on success, 1 for bad input and 2
# when an internal consistency check fails.
# -----------------------------------------------------------------------------

import argparse
import json
import sys
from dataclasses import dataclass, asdict
from fractions import Fraction

from . import __version__
from .config import Config, load_config, log as default_log, CONFIG_KEYS
from .cohomology import (cohomology_classes, enumerate_w2, is_rigid, case_label,
                         format_highest_weight, H1_EXCEPTIONS)
from .errors import MongeError, DomainError, InvariantError
from .grading import Sigma, grading_components, is_generated
from .mcforms import compute_mc_forms, standard_pfaffian, verify_paper_forms, restricted_iiic_system
from .monge import enumerate_monge, is_monge, structural_monge_oracle, oracle_sweep, y_is_invariant
from .nilrealize import (case_basis, published_brackets, bracket_mismatches, check_jacobi,
                         check_graded, dual_structure_equations, format_structure_form)
from .report import TableReproducer
from .rootsys import AlgebraSpec, build_root_system, semisimple_part
from .symsolver import (monge_spec, solve_symmetries, pfaffian_symmetries, case_system,
                        grade_decomposition, point_symmetry_check, killing_signature,
                        kernel_growth, monge_pfaffian)

__all__ = [ 'Request', 'CommandRunner', 'run', 'render', 'main', 'COMMANDS' ]

COMMANDS = ( 'roots', 'grade', 'monge', 'oracle', 'cohomology', 'realize', 'mc', 'sym', 'reproduce-tables' )

# Cases solved by the quadratic ansatz
QUADRATIC_CASES = ( 'Ia', 'IIa', 'IIIa', 'IVa' )

@dataclass(frozen=True)
class Request:
    command: str
    family: str = None
    rank: str = None
    sigma: tuple = None
    case: str = None
    ell: int = None
    signature: tuple = None
    degree: int = None
    bound: int = None
    format: str = None
    enumerate: bool = False
    weights: bool = False
    q: int = 2
    published: bool = False
    errata: bool = False
    restricted: bool = False
    max_rank: int = None

    def echo(self):
        return { key: list(value) if isinstance(value, tuple) else value
                 for key, value in asdict(self).items() if value not in (None, False) }

def _ranks(text):
    '''
    "5" or "2..8" as a list of ranks.
    '''
    try:
        if '..' in text:
            lo, hi = (int(part) for part in text.split('..'))
            if lo > hi:
                raise DomainError(f'empty rank range {text!r}')
            return list(range(lo, hi + 1))
        return [ int(text) ]
    except ValueError:
        raise DomainError(f'bad rank {text!r}') from None

def _labels(text):
    try:
        return tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError:
        raise DomainError(f'bad root list {text!r}') from None

def _number(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return value

def _combination(vector):
    parts = [ ]
    for label, k in vector.items():
        k = Fraction(k)
        coeff = '' if k == 1 else '-' if k == -1 else str(k)
        parts.append(f'{coeff}{label}')
    return ' + '.join(parts).replace('+ -', '- ')

class CommandRunner:
    log = default_log

    def __init__(self, config=None):
        self.config = config or Config()

    def run(self, request):
        if request.command not in COMMANDS:
            raise DomainError(f'unknown command {request.command!r}')
        self.log.debug('running %s', request.command)
        handler = getattr(self, 'cmd_' + request.command.replace('-', '_'))
        return {
            'tool': 'mongetools',
            'version': __version__,
            'command': request.command,
            'request': request.echo(),
            'result': handler(request),
        }

    # Helpers for the algebra options

    def _spec(self, request, rank=None):
        if request.family is None or (rank is None and request.rank is None):
            raise DomainError(f'{request.command} needs --family and --rank')
        if rank is None:
            ranks = _ranks(request.rank)
            if len(ranks) != 1:
                raise DomainError(f'{request.command} takes a single rank')
            rank = ranks[0]
        return AlgebraSpec(request.family.upper(), rank)

    def _sigma(self, request, rs):
        if not request.sigma:
            raise DomainError(f'{request.command} needs --sigma')
        return Sigma.from_labels(request.sigma).check(rs)

    # Commands

    def cmd_roots(self, request):
        result = [ ]
        for rank in _ranks(request.rank or ''):
            spec = self._spec(request, rank)
            rs = build_root_system(spec)
            result.append({
                'algebra': str(spec),
                'dimension': rs.rank + 2 * len(rs.positive_roots),
                'positive_roots': len(rs.positive_roots),
                'highest_root': list(rs.highest_root),
                'cartan_matrix': [ list(row) for row in rs.cartan_matrix ],
            })
        return result

    def cmd_grade(self, request):
        spec = self._spec(request)
        rs = build_root_system(spec)
        sigma = self._sigma(request, rs)
        info = grading_components(rs, sigma)
        return {
            'algebra': str(spec),
            'sigma': str(sigma),
            'depth': info.depth,
            'generated': is_generated(rs, sigma),
            'dimensions': { str(j): d for j, d in sorted(info.dims.items()) },
            'semisimple_part': [ f'{family}{size}' for family, size, nodes in semisimple_part(rs, sigma) ],
        }

    def _verdict(self, spec, rs, sigma, verdict):
        return {
            'algebra': str(spec),
            'sigma': str(sigma),
            'monge': verdict.is_monge,
            'leader': verdict.leader + 1 if verdict.leader is not None else None,
            'reason': verdict.reason.value,
            'y_invariant': y_is_invariant(rs, sigma, verdict),
            'rigid': is_rigid(rs, sigma) if verdict.is_monge else None,
            'case': case_label(spec, sigma) if verdict.is_monge else None,
        }

    def cmd_monge(self, request):
        if request.enumerate:
            result = [ ]
            for rank in _ranks(request.rank or ''):
                spec = self._spec(request, rank)
                rs = build_root_system(spec)
                for sigma, verdict in enumerate_monge(spec):
                    result.append(self._verdict(spec, rs, sigma, verdict))
            return result
        spec = self._spec(request)
        rs = build_root_system(spec)
        sigma = self._sigma(request, rs)
        verdict = is_monge(rs, sigma)
        entry = self._verdict(spec, rs, sigma, verdict)
        entry['structural'] = structural_monge_oracle(rs, sigma).is_monge
        if entry['structural'] != verdict.is_monge:
            raise InvariantError(f'{spec}{sigma}: structural check disagrees with the classification')
        return entry

    def cmd_oracle(self, request):
        max_rank = self.config.oracle_rank if request.max_rank is None else request.max_rank
        if max_rank < 1:
            raise DomainError('--max-rank must be positive')
        return { 'max_rank': max_rank, 'checked': oracle_sweep(max_rank), 'agree': True }

    def cmd_cohomology(self, request):
        spec = self._spec(request)
        rs = build_root_system(spec)
        sigma = self._sigma(request, rs)
        if request.q not in (1, 2):
            raise DomainError('only q = 1 and q = 2 are supported')
        result = {
            'algebra': str(spec),
            'sigma': str(sigma),
            'q': request.q,
        }
        if request.q == 2:
            result['w2'] = [ w.label() for w in enumerate_w2(rs, sigma) ]
            result['rigid'] = is_rigid(rs, sigma)
        if request.weights or request.q == 1:
            classes = [ ]
            for c in cohomology_classes(rs, sigma, request.q):
                classes.append({
                    'sigma': c.sigma.label(),
                    'weight': c.homogeneity_weight,
                    'minus_sigma_theta': list(c.minus_sigma_theta),
                    'minus_sigma_theta_weight': c.minus_sigma_theta_weight,
                    'torsion': c.torsion,
                    'lowest_weight': list(c.lowest_weight),
                    'highest_weight': format_highest_weight(rs, sigma, c.highest_weight_pairings),
                })
            result['classes'] = classes
        return result

    def _case(self, request):
        if request.case is None:
            raise DomainError(f'{request.command} needs --case')
        return request.case, request.ell

    def cmd_realize(self, request):
        case_id, ell = self._case(request)
        g = case_basis(case_id, ell)
        brackets = [ f'[{a}, {b}] = {_combination(vector)}' for (a, b), vector in g.bracket_table().items() ]
        return {
            'case': case_id,
            'basis': [ f'{label} ({d})' for label, d in zip(g.labels, g.degrees) ],
            'brackets': brackets,
            'jacobi': check_jacobi(g) is None,
            'graded': check_graded(g) is None,
            'published_mismatches': [ list(pair) for pair in bracket_mismatches(g, published_brackets(case_id, ell)) ],
            'structure_equations': [ f'dθ{g.coordinates[c]} = {format_structure_form(g, terms)}'
                                     for c, (label, terms) in enumerate(dual_structure_equations(g)) ],
        }

    def cmd_mc(self, request):
        case_id, ell = self._case(request)
        if request.published or request.errata:
            check = verify_paper_forms(case_id, ell, errata=request.errata)
            return {
                'case': case_id,
                'errata': request.errata,
                'ok': check.ok,
                'failures': [ f'{coord}: {reason}' for coord, reason in check.failures ],
            }
        cf = compute_mc_forms(case_basis(case_id, ell))
        ps = standard_pfaffian(cf)
        return {
            'case': case_id,
            'forms': [ f'θ{cf.coordinates[n]} = {text}' for n, (label, text) in enumerate(cf.describe()) ],
            'pfaffian': [ f'{label} = {text}' for label, text in ps.describe() ],
        }

    def _algebra_summary(self, sa):
        positive, negative, zero = killing_signature(sa)
        return {
            'dimension': sa.dimension,
            'point_symmetries': point_symmetry_check(sa),
            'killing_signature': [ positive, negative, zero ],
        }

    def cmd_sym(self, request):
        case_id, ell = self._case(request)
        degree = request.degree or self.config.degree
        bound = request.bound or self.config.bound
        infinite = any(case_id == c and (rank is None or ell == rank) for c, rank in H1_EXCEPTIONS)
        if infinite:
            if case_id == 'IIIa':
                ps = monge_pfaffian(monge_spec(case_id, ell, request.signature))
            else:
                ps = case_system(case_id, ell)
            bounds = list(range(1, (bound or 3) + 1))
            return {
                'case': case_id,
                'finite': False,
                'bounds': bounds,
                'kernel_growth': kernel_growth(ps, bounds=bounds),
            }
        if case_id in QUADRATIC_CASES:
            ms = monge_spec(case_id, ell, request.signature)
            sa = solve_symmetries(ms, degree)
            result = { 'case': case_id, 'finite': True, 'solver': 'quadratic' }
            result.update(self._algebra_summary(sa))
            result['uniform_grades'] = { str(j): d for j, d in grade_decomposition(sa, ms.weights('uniform')).items() }
            result['graded_grades'] = { str(j): d for j, d in grade_decomposition(sa, ms.weights('graded')).items() }
            return result
        if case_id == 'IIIc' and request.restricted:
            ps = restricted_iiic_system()
        else:
            ps = case_system(case_id, ell)
        sa = pfaffian_symmetries(ps, bound=bound)
        result = { 'case': case_id, 'finite': True, 'solver': 'pfaffian',
                   'coordinates': list(ps.space.names) }
        result.update(self._algebra_summary(sa))
        result['grades'] = { str(j): d for j, d in grade_decomposition(sa, ps.weights).items() }
        return result

    def cmd_reproduce_tables(self, request):
        reproducer = TableReproducer(self.config.workers, self.config.stabilization_rank)
        results = reproducer.run()
        return {
            'tables': [ { 'name': r.name, 'ok': r.ok } for r in results ],
            'failed': [ r.name for r in results if not r.ok ],
            'diffs': { r.name: r.diff for r in results if not r.ok },
            'markdown': ''.join(r.text + '\n' for r in results),
        }

def run(request, config=None):
    return CommandRunner(config).run(request)

# -----------------------------------------------------------------------------
# Output
# -----------------------------------------------------------------------------

def _text_lines(value, indent=''):
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield f'{indent}{key}:'
                yield from _text_lines(item, indent + '  ')
            else:
                yield f'{indent}{key}: {_scalar(item)}'
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                yield f'{indent}-'
                yield from _text_lines(item, indent + '  ')
            else:
                yield f'{indent}{_scalar(item)}'
    else:
        yield f'{indent}{_scalar(value)}'

def _scalar(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (dict, list)):
        return '[]' if isinstance(value, list) else '{}'
    return str(_number(value))

def render(report, fmt='text'):
    '''
    The report as a string in one of the formats json, text or markdown.
    '''
    if fmt == 'json':
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + '\n'
    result = report['result']
    if fmt == 'markdown':
        if report['command'] == 'reproduce-tables':
            return result['markdown']
        lines = [ f'## mongetools {report["command"]}', '' ]
        lines.extend(f'    {line}' for line in _text_lines(result))
        return '\n'.join(lines) + '\n'
    if fmt == 'text':
        if report['command'] == 'reproduce-tables':
            lines = [ f'{t["name"]}: {"ok" if t["ok"] else "MISMATCH"}' for t in result['tables'] ]
            for name, diff in result['diffs'].items():
                lines.append(diff.rstrip('\n'))
            return '\n'.join(lines) + '\n'
        return '\n'.join(_text_lines(result)) + '\n'
    raise DomainError(f'unknown output format {fmt!r}')

# -----------------------------------------------------------------------------
# Argument parsing
# -----------------------------------------------------------------------------

class ArgumentParser(argparse.ArgumentParser):
    # Usage errors exit with status 1 like every other input error
    def error(self, message):
        self.print_usage(sys.stderr)
        raise DomainError(message)

def _signature(text):
    values = _labels(text)
    if len(values) != 2:
        raise DomainError(f'signature must be written r,s, not {text!r}')
    return values

def build_parser():
    parser = ArgumentParser(prog='mongetools',
                            description='Parabolic geometries of Monge type: gradings, '
                                        'cohomology, realizations and symmetries.')
    parser.add_argument('--config', help='configuration file of key = value lines '
                                         f'({", ".join(CONFIG_KEYS)})')
    parser.add_argument('--verbose', action='store_true', default=None, help='log progress to stderr')
    parser.add_argument('--workers', type=int, help='parallel workers for reproduce-tables')
    parser.add_argument('--format', choices=('text', 'json', 'markdown'), help='output format')
    parser.add_argument('--version', action='version', version=f'mongetools {__version__}')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def algebra(sub, sigma=True):
        sub.add_argument('--family', required=True, help='A, B, C, D, E, F or G')
        sub.add_argument('--rank', required=True, help='rank, or a range lo..hi')
        if sigma:
            sub.add_argument('--sigma', type=_labels, help='1-based simple roots, e.g. 2,3')

    algebra(commands.add_parser('roots', help='root system data'), sigma=False)
    algebra(commands.add_parser('grade', help='grading by a set of simple roots'))
    sub = commands.add_parser('monge', help='Monge type classification')
    algebra(sub)
    sub.add_argument('--enumerate', action='store_true', help='list every Monge grading')
    sub = commands.add_parser('oracle', help='compare the classification with the structural check on every grading')
    sub.add_argument('--max-rank', type=int, help='largest rank, default oracle_rank from the configuration')
    sub = commands.add_parser('cohomology', help='components of H^1 or H^2 and their weights')
    algebra(sub)
    sub.add_argument('--q', type=int, default=2, help='cohomology degree, 1 or 2')
    sub.add_argument('--weights', action='store_true', help='include weights of every component')

    def case(sub):
        sub.add_argument('--case', required=True, help='Ia, Ib, IIa, IIb, IIIa, IIIb, IIIc, IIId, IVa, Va or Vb')
        sub.add_argument('--ell', type=int, help='rank for the families indexed by l')

    case(commands.add_parser('realize', help='graded nilpotent algebra of a case'))
    sub = commands.add_parser('mc', help='Maurer-Cartan forms of a case')
    case(sub)
    sub.add_argument('--published', action='store_true', help='check the published forms')
    sub.add_argument('--errata', action='store_true', help='check the published forms with corrections')
    sub = commands.add_parser('sym', help='infinitesimal symmetries of a case')
    case(sub)
    sub.add_argument('--signature', type=_signature, help='r,s for IIIa and IVa')
    sub.add_argument('--degree', type=int, help='polynomial degree of the quadratic ansatz')
    sub.add_argument('--bound', type=int, help='grade bound of the Pfaffian solver')
    sub.add_argument('--restricted', action='store_true', help='use the seven coordinate IIIc system')
    commands.add_parser('reproduce-tables', help='rebuild every table and compare with the golden copies')
    return parser

def _request(args):
    fields = { key: value for key, value in vars(args).items()
               if key in Request.__dataclass_fields__ and value is not None }
    if 'family' in fields:
        fields['family'] = fields['family'].upper()
    return Request(**fields)

def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        config = load_config(args.config) if args.config else Config()
        config = config.merged(workers=args.workers, format=args.format, verbose=args.verbose)
        if config.verbose:
            default_log.set_level('debug')
        report = run(_request(args), config)
        out.write(render(report, config.format))
    except MongeError as e:
        default_log.error('%s', e)
        return getattr(e, 'exit_status', 1)
    if report['command'] == 'reproduce-tables' and report['result']['failed']:
        return InvariantError.exit_status
    return 0
