# -----------------------------------------------------------------------------
# mongetools: config.py
#
# Defaults, logging and the batch configuration file.
#
# A configuration file holds one "key = value" assignment per line.  Values
# are integers, ranges written lo..hi, bare words or comma separated lists
# of those.  Everything after a '#' is a comment.  For example:
#
#     # reproduce every table on four processes
#     workers = 4
#     ranks = 2..8
#     degree = 2
# -----------------------------------------------------------------------------

import os
import sys
from dataclasses import dataclass, fields, replace

from sly import Lexer, Parser
from sly.yacc import SlyLogger

from .errors import ParseError

__all__ = [ 'MongeLogger', 'Config', 'ConfigLexer', 'ConfigParser',
            'parse_config', 'load_config' ]

#-----------------------------------------------------------------------------
#                     === User configurable parameters ===
#
# Change these to modify the default behavior of mongetools.  Every one of
# them can also be set from a configuration file or a command line flag.
#-----------------------------------------------------------------------------

STABILIZATION_RANK = 8         # Largest rank used when checking families indexed by ell
ORACLE_RANK = 6                # Largest rank for the exhaustive structural Monge cross-check
DEFAULT_WORKERS = os.cpu_count() or 1
DEFAULT_FORMAT = 'text'        # One of text, json, markdown
ANSATZ_DEGREE = 2              # Polynomial degree of the first order Monge ansatz
LOG_LEVEL = 'warning'

# SlyLogger with a level threshold.  A real logging.Logger can be assigned
# wherever a MongeLogger is expected.

class MongeLogger(SlyLogger):
    levels = { 'debug': 10, 'info': 20, 'warning': 30, 'error': 40, 'critical': 50 }

    def __init__(self, f, level=LOG_LEVEL):
        super().__init__(f)
        self.set_level(level)

    def set_level(self, level):
        self.level = self.levels[level]

    def debug(self, msg, *args, **kwargs):
        if self.level <= 10:
            super().debug(msg, *args)

    def info(self, msg, *args, **kwargs):
        if self.level <= 20:
            super().info(msg, *args)

    def warning(self, msg, *args, **kwargs):
        if self.level <= 30:
            super().warning(msg, *args)

    def error(self, msg, *args, **kwargs):
        if self.level <= 40:
            super().error(msg, *args)

    def critical(self, msg, *args, **kwargs):
        if self.level <= 50:
            super().error(msg, *args)

# Shared default logger.  Classes doing long computations keep a reference
# in a class attribute named log so that it can be replaced per class.
log = MongeLogger(sys.stderr)

@dataclass(frozen=True)
class Config:
    workers: int = DEFAULT_WORKERS
    stabilization_rank: int = STABILIZATION_RANK
    oracle_rank: int = ORACLE_RANK
    ranks: tuple = (2, STABILIZATION_RANK)
    degree: int = ANSATZ_DEGREE
    bound: int = None
    format: str = DEFAULT_FORMAT
    verbose: bool = False

    def merged(self, **overrides):
        '''
        Return a copy with every override that is not None applied.
        Command line flags are layered on top of the file this way.
        '''
        changes = { key: value for key, value in overrides.items() if value is not None }
        return replace(self, **changes)

_FORMATS = { 'text', 'json', 'markdown' }

def _check_entry(key, value, text, index):
    if key in ('workers', 'stabilization_rank', 'oracle_rank', 'degree', 'bound'):
        if not isinstance(value, int) or value < 1:
            raise ParseError(f'{key} must be a positive integer', text, index)
        return value
    if key == 'ranks':
        if isinstance(value, int):
            value = (value, value)
        if not isinstance(value, tuple) or value[0] > value[1]:
            raise ParseError('ranks must be written lo..hi', text, index)
        return value
    if key == 'format':
        if value not in _FORMATS:
            raise ParseError(f'unknown format {value!r}', text, index)
        return value
    if key == 'verbose':
        if value not in ('true', 'false', 'yes', 'no'):
            raise ParseError('verbose must be true or false', text, index)
        return value in ('true', 'yes')
    raise ParseError(f'unknown configuration key {key!r}', text, index)

class ConfigLexer(Lexer):
    tokens = { NAME, NUMBER, ASSIGN, COMMA, DOTDOT, NEWLINE }
    ignore = ' \t'
    ignore_comment = r'\#.*'

    NAME = r'[a-zA-Z_][a-zA-Z0-9_]*'
    DOTDOT = r'\.\.'
    ASSIGN = r'='
    COMMA = r','

    @_(r'\d+')
    def NUMBER(self, t):
        t.value = int(t.value)
        return t

    @_(r'\n+')
    def NEWLINE(self, t):
        self.lineno += t.value.count('\n')
        return t

    def error(self, t):
        raise ParseError(f'illegal character {t.value[0]!r} at line {self.lineno}',
                         self.text, self.index)

class ConfigParser(Parser):
    tokens = ConfigLexer.tokens
    log = MongeLogger(sys.stderr, 'error')

    def __init__(self, text=''):
        self.text = text

    @_('statements')
    def config(self, p):
        entries = { }
        for key, value, index in p.statements:
            if key in entries:
                raise ParseError(f'duplicate configuration key {key!r}', self.text, index)
            entries[key] = _check_entry(key, value, self.text, index)
        return entries

    @_('statements statement')
    def statements(self, p):
        if p.statement is not None:
            p.statements.append(p.statement)
        return p.statements

    @_('')
    def statements(self, p):
        return [ ]

    @_('NAME ASSIGN values NEWLINE')
    def statement(self, p):
        return (p.NAME, p.values, p.index)

    @_('NEWLINE')
    def statement(self, p):
        return None

    @_('values COMMA value')
    def values(self, p):
        if isinstance(p.values, list):
            return p.values + [p.value]
        return [p.values, p.value]

    @_('value')
    def values(self, p):
        return p.value

    @_('NUMBER DOTDOT NUMBER')
    def value(self, p):
        return (p.NUMBER0, p.NUMBER1)

    @_('NUMBER')
    def value(self, p):
        return p.NUMBER

    @_('NAME')
    def value(self, p):
        return p.NAME

    def error(self, tok):
        if tok is None:
            raise ParseError('unexpected end of configuration', self.text, len(self.text))
        raise ParseError(f'syntax error at line {tok.lineno} near {tok.value!r}',
                         self.text, tok.index)

def parse_config(text, base=None):
    '''
    Parse configuration text and return a Config.  Keys that are not
    mentioned keep the value they have in base (or the defaults).
    '''
    if not text.endswith('\n'):
        text += '\n'
    entries = ConfigParser(text).parse(ConfigLexer().tokenize(text))
    return (base or Config()).merged(**(entries or { }))

def load_config(path, base=None):
    with open(path, encoding='utf-8') as f:
        return parse_config(f.read(), base)

# Names of the settable fields, used by the command line help text
CONFIG_KEYS = tuple(f.name for f in fields(Config))
