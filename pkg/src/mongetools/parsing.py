# -----------------------------------------------------------------------------
# mongetools: parsing.py
#
# Text grammars for differential forms and for graded algebras written as
# "B3{1,2}".  Forms are written the way they are printed, for example
#
#     dz - q*dp + 1/2*q^2*dx
#     theta_y1 & theta_p2 + theta_y2 & theta_p1
#
# Names resolve first against an optional environment of named forms, then
# against the coordinates of the space, then as differentials d<coord>.
# -----------------------------------------------------------------------------

import sys
from fractions import Fraction

from sly import Lexer, Parser

from .config import MongeLogger
from .errors import ParseError, DomainError
from .symalg import PolyForm

__all__ = [ 'FormLexer', 'FormParser', 'SigmaLexer', 'SigmaParser',
            'parse_form', 'parse_polynomial', 'parse_sigma' ]

class FormLexer(Lexer):
    tokens = { NAME, NUMBER }
    ignore = ' \t\n'
    literals = { '+', '-', '*', '/', '^', '&', '∧', '(', ')' }

    # Primes are allowed so that jet coordinates such as y0' can be named
    NAME = r"[a-zA-Z_][a-zA-Z0-9_']*"

    @_(r'\d+')
    def NUMBER(self, t):
        t.value = int(t.value)
        return t

    def error(self, t):
        raise ParseError(f'illegal character {t.value[0]!r}', self.text, self.index)

class FormParser(Parser):
    tokens = FormLexer.tokens
    log = MongeLogger(sys.stderr, 'error')

    precedence = (
        ('left', '+', '-'),
        ('left', '*', '/', '&', '∧'),
        ('right', UMINUS),
        ('right', '^'),
        )

    def __init__(self, space, env=None, text=''):
        self.space = space
        self.env = env or { }
        self.text = text

    @_('expr "+" expr')
    def expr(self, p):
        return self._combine(p.expr0, p.expr1, lambda a, b: a + b, p.index)

    @_('expr "-" expr')
    def expr(self, p):
        return self._combine(p.expr0, p.expr1, lambda a, b: a - b, p.index)

    @_('expr "*" expr',
       'expr "&" expr',
       'expr "∧" expr')
    def expr(self, p):
        return self._combine(p.expr0, p.expr1, lambda a, b: a * b, p.index)

    @_('expr "/" expr')
    def expr(self, p):
        divisor = p.expr1
        if divisor.degree != 0 or not divisor.components.get((), self.space.zero()).is_constant():
            raise ParseError('only division by a nonzero number is allowed', self.text, p.index)
        value = divisor.components.get((), self.space.zero()).constant_term()
        if value == 0:
            raise ParseError('division by zero', self.text, p.index)
        return p.expr0 * (Fraction(1) / value)

    @_('"-" expr %prec UMINUS')
    def expr(self, p):
        return -p.expr

    @_('expr "^" NUMBER')
    def expr(self, p):
        if p.expr.degree != 0:
            raise ParseError('only functions can be raised to a power', self.text, p.index)
        return PolyForm.function(p.expr.components.get((), self.space.zero()) ** p.NUMBER)

    @_('"(" expr ")"')
    def expr(self, p):
        return p.expr

    @_('NUMBER')
    def expr(self, p):
        return PolyForm.function(self.space.constant(p.NUMBER))

    @_('NAME')
    def expr(self, p):
        name = p.NAME
        if name in self.env:
            return self.env[name]
        if name in self.space:
            return PolyForm.function(self.space.variable(name))
        if name.startswith('d') and name[1:] in self.space:
            return self.space.differential(name[1:])
        raise ParseError(f'unknown name {name!r}', self.text, p.index)

    def _combine(self, a, b, op, index):
        try:
            return op(a, b)
        except DomainError as e:
            if isinstance(e, ParseError):
                raise
            raise DomainError(f'{e} at index {index} of {self.text!r}') from e

    def error(self, tok):
        if tok is None:
            raise ParseError('unexpected end of form', self.text, len(self.text))
        raise ParseError(f'syntax error near {tok.value!r}', self.text, tok.index)

def parse_form(text, space, env=None):
    '''
    Parse text into a PolyForm over space.  env maps extra names to
    already built forms.
    '''
    if not text.strip():
        raise ParseError('empty form', text, 0)
    return FormParser(space, env, text).parse(FormLexer().tokenize(text))

def parse_polynomial(text, space):
    form = parse_form(text, space)
    if form.degree != 0:
        raise ParseError(f'{text!r} is not a function', text, 0)
    return form.components.get((), space.zero())

# -----------------------------------------------------------------------------
# Graded algebra specifications: B3{1,2}, C_3{2,3}, G2{1}
# -----------------------------------------------------------------------------

class SigmaLexer(Lexer):
    tokens = { FAMILY, NUMBER }
    ignore = ' \t'
    literals = { '{', '}', ',', '_' }

    FAMILY = r'[A-Ga-g]'

    @_(r'\d+')
    def NUMBER(self, t):
        t.value = int(t.value)
        return t

    def error(self, t):
        raise ParseError(f'illegal character {t.value[0]!r}', self.text, self.index)

class SigmaParser(Parser):
    tokens = SigmaLexer.tokens
    log = MongeLogger(sys.stderr, 'error')

    def __init__(self, text=''):
        self.text = text

    @_('FAMILY rank "{" indices "}"')
    def graded(self, p):
        return (p.FAMILY.upper(), p.rank, p.indices)

    @_('NUMBER')
    def rank(self, p):
        return p.NUMBER

    @_('"_" NUMBER')
    def rank(self, p):
        return p.NUMBER

    @_('indices "," NUMBER')
    def indices(self, p):
        return p.indices + [p.NUMBER]

    @_('NUMBER')
    def indices(self, p):
        return [p.NUMBER]

    def error(self, tok):
        if tok is None:
            raise ParseError('unexpected end of input', self.text, len(self.text))
        raise ParseError(f'syntax error near {tok.value!r}', self.text, tok.index)

def parse_sigma(text):
    '''
    Parse "B3{1,2}" into (AlgebraSpec, Sigma).  Indices are 1-based as
    printed; the returned Sigma is 0-based.
    '''
    from .rootsys import AlgebraSpec
    from .grading import Sigma

    family, rank, indices = SigmaParser(text).parse(SigmaLexer().tokenize(text))
    spec = AlgebraSpec(family, rank)
    if any(not 1 <= i <= rank for i in indices):
        raise ParseError(f'root index out of range in {text!r}', text, 0)
    return spec, Sigma(i - 1 for i in indices)
