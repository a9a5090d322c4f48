"""Exception types shared across the package.

The CLI maps these onto its exit-code contract (usage and parse problems
exit 2, blown enumeration budgets exit 3); everything else is an ordinary
library error.
"""


class GainsparseError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(GainsparseError):
    """A call that violates an operation's preconditions (mismatched group
    specs, dangling vertex or edge references, unsupported family/group
    combinations)."""


class UnsupportedGroupError(UsageError):
    """An operation that is only defined for some of the four color groups
    was asked about another one (rank over composite Z/k, lifts over
    infinite groups)."""


class PreconditionError(UsageError):
    """A stated structural precondition fails, e.g. the lift-based
    cone check needs exactly 2n-1 edges."""


class ParseError(GainsparseError):
    """Bad input text.  Carries the 1-based line number."""

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__("line %d: %s" % (lineno, message))


class NoCircuitError(GainsparseError):
    """fundamental_circuit was handed an edge independent of the basis."""


class NoCandidatesError(GainsparseError):
    """reverse_candidates at a vertex whose degree pattern matches no move."""


class InvalidMoveError(GainsparseError):
    """A Henneberg move whose color constraints fail against the graph."""


class CertificateError(GainsparseError):
    """Certificate replay failed.  step is the 0-based index of the
    offending move, or -1 for a bad base graph."""

    def __init__(self, step, message):
        self.step = step
        super().__init__("step %d: %s" % (step, message))


class BudgetExceededError(GainsparseError):
    """Brute-force subgraph enumeration refused a graph above its edge
    budget."""


class GenerationError(GainsparseError):
    """random_construct exhausted its retry cap, which indicates a bug
    (forward moves always succeed for some color choice)."""


class InternalInvariantError(GainsparseError):
    """A structural guarantee the algorithms rely on did not hold.
    Raised loudly instead of papering over the contradiction."""
