# -----------------------------------------------------------------------------
# mongetools: errors.py
#
# Exception hierarchy shared by every module of the package.  The command
# line front end maps DomainError onto exit status 1 and InvariantError
# onto exit status 2.
# -----------------------------------------------------------------------------

__all__ = [ 'MongeError', 'DomainError', 'SpaceMismatchError',
            'UnsupportedError', 'ParseError', 'NotMongeError',
            'InvariantError' ]

class MongeError(Exception):
    '''
    Base class of all exceptions raised by mongetools.
    '''
    pass

class DomainError(MongeError):
    '''
    Exception raised when an operation receives input outside of its
    domain: a bad rank, an empty or out of range set of simple roots,
    an unknown case identifier and so forth.
    '''
    exit_status = 1

class SpaceMismatchError(DomainError):
    '''
    Exception raised when polynomials, forms or matrices defined over
    different coordinate spaces are combined.
    '''
    pass

class UnsupportedError(DomainError):
    '''
    Exception raised for requests the toolkit deliberately does not
    handle (3-forms, matrix realizations of exceptional algebras, ...).
    '''
    pass

class ParseError(DomainError):
    '''
    Exception raised by the text grammars for forms, root-set
    specifications and configuration files.  Like sly.lex.LexError it
    records the offending text and the index at which the problem was
    detected.
    '''
    def __init__(self, message, text=None, index=None):
        self.args = (message,)
        self.text = text
        self.index = index

class NotMongeError(DomainError):
    '''
    Exception raised when the roots of Sigma other than a candidate leader
    are not in one-to-one correspondence with the components of the Dynkin
    diagram left after removing the leader.
    '''
    pass

class InvariantError(MongeError):
    '''
    Exception raised when an internal consistency check fails, for
    example when two independent formulas for the same weight disagree
    or a commutator does not lie in the span of a basis.  This always
    indicates a bug (or a bad golden file), never bad user input.
    '''
    exit_status = 2
