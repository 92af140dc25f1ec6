"""Exception hierarchy shared by all modules.

Each class carries the exit code the CLI uses when it escapes a command.
"""


class DrgError(Exception):
    exit_code = 10


class IndeterminateError(DrgError, ValueError):
    """Root counting asked of the zero polynomial."""
    exit_code = 10


class ArrayFormatError(DrgError, ValueError):
    exit_code = 3


class UnknownFamilyError(DrgError, ValueError):
    exit_code = 4


class InvalidParametersError(DrgError, ValueError):
    exit_code = 4


class GraphFormatError(DrgError, ValueError):
    exit_code = 5

    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class DisconnectedGraphError(DrgError, ValueError):
    exit_code = 7

    def __init__(self, components):
        self.components = components
        sizes = ", ".join(str(len(c)) for c in components)
        super().__init__(f"graph is disconnected: {len(components)} components of sizes {sizes}")


class BudgetExceededError(DrgError, RuntimeError):
    exit_code = 6


class InfeasibleArrayError(DrgError, ValueError):
    exit_code = 8


class LemmaInapplicableError(DrgError, ValueError):
    exit_code = 8


class AssetCertificationError(DrgError, RuntimeError):
    exit_code = 9
