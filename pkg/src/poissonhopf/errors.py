#!/usr/bin/env python
'''
errors

Exception hierarchy of poissonhopf. Failed checks are never raised: they
are entries of a Report (see poissonhopf.report).
'''


class PoissonHopfError(Exception):
    '''Base class of every error raised by the package.'''


class RingMismatchError(PoissonHopfError):
    '''Operands live over different generator sets (or leg spaces).'''


class DomainError(PoissonHopfError, ValueError):
    '''Negative power of a non-invertible generator, division by a non-unit.'''


class StructureError(PoissonHopfError):
    '''Structure data that cannot define the requested object.'''


class BindingError(PoissonHopfError):
    '''Unknown catalog name or invalid parameter bindings.'''


class NotSupportedError(PoissonHopfError):
    '''Input outside the scope of the requested construction.'''


class ParseError(PoissonHopfError):

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        PoissonHopfError.__init__(self, str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        if self.column is None:
            return 'line %d: %s' % (self.line, self.message)
        return 'line %d, column %d: %s' % (self.line, self.column, self.message)
