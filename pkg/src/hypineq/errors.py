"""Exception types shared across the package.

DomainError: the inputs are outside the mathematical domain of the
requested operation (maps to CLI exit code 2).
InputError: the inputs are malformed or inconsistent (also exit code 2;
usage errors raised by argument parsing exit with 1 instead).
"""


class DomainError(ValueError):
    pass


class InputError(ValueError):
    pass
