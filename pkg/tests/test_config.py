import io
import pytest

from mongetools.config import (Config, MongeLogger, parse_config, load_config,
                               STABILIZATION_RANK, ANSATZ_DEGREE)
from mongetools.errors import ParseError, DomainError

def test_defaults():
    config = Config()
    assert config.stabilization_rank == STABILIZATION_RANK == 8
    assert config.degree == ANSATZ_DEGREE == 2
    assert config.format == 'text'
    assert config.workers >= 1

def test_parse():
    config = parse_config('''
# reproduce every table on four processes
workers = 4
ranks = 2..6
format = json      # machine readable
verbose = yes
''')
    assert config.workers == 4
    assert config.ranks == (2, 6)
    assert config.format == 'json'
    assert config.verbose is True
    assert config.degree == ANSATZ_DEGREE

def test_parse_without_newline():
    assert parse_config('bound = 5').bound == 5

def test_merged_ignores_none():
    config = parse_config('workers = 3\n').merged(workers=None, format='markdown')
    assert config.workers == 3
    assert config.format == 'markdown'

def test_base_is_kept():
    base = Config(workers=7)
    assert parse_config('degree = 3\n', base).workers == 7

def test_unknown_key():
    with pytest.raises(ParseError) as e:
        parse_config('colour = blue\n')
    assert 'colour' in str(e.value)

def test_bad_values():
    for text in ('workers = 0\n', 'ranks = 6..2\n', 'format = yaml\n',
                 'verbose = maybe\n', 'workers = 2\nworkers = 3\n'):
        with pytest.raises(ParseError):
            parse_config(text)

def test_syntax_error():
    with pytest.raises(ParseError) as e:
        parse_config('workers 4\n')
    assert e.value.text == 'workers 4\n'
    assert e.value.index is not None

def test_illegal_character():
    with pytest.raises(DomainError):
        parse_config('workers = $\n')

def test_load(tmp_path):
    path = tmp_path / 'batch.cfg'
    path.write_text('stabilization_rank = 6\n', encoding='utf-8')
    assert load_config(str(path)).stabilization_rank == 6

def test_logger_levels():
    f = io.StringIO()
    log = MongeLogger(f)
    log.debug('hidden %d', 1)
    log.warning('shown %d', 2)
    log.set_level('debug')
    log.debug('visible %s', 'now')
    assert f.getvalue() == 'WARNING: shown 2\nvisible now\n'

def test_logger_is_a_sly_logger():
    from sly.yacc import SlyLogger
    f = io.StringIO()
    log = MongeLogger(f, 'critical')
    assert isinstance(log, SlyLogger)
    log.error('quiet')
    log.critical('loud %s', 'enough')
    log.set_level('info')
    log.info('progress %d%%', 50)
    assert f.getvalue() == 'ERROR: loud enough\nprogress 50%\n'
