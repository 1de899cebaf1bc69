"""Exception hierarchy shared across the package.

Every error raised by glucoguard derives from GlucoGuardError so callers
can catch the whole family; the CLI maps subtrees to distinct exit codes.
"""


class GlucoGuardError(Exception):
    """Base class for all glucoguard errors."""


class DomainError(GlucoGuardError):
    """An argument is outside the domain an operation is defined on."""


class LoadError(GlucoGuardError):
    """A dataset file is missing, malformed, or contradicts its schema."""


class PreprocessError(GlucoGuardError):
    """A preprocessing step produced an unusable result (e.g. emptied the data)."""


class ConfigError(GlucoGuardError):
    """Invalid configuration (hyperparameters, SMOTE settings, manifests)."""


class StateError(GlucoGuardError):
    """An object was used before reaching the required state (e.g. untrained model)."""


class SelectionError(GlucoGuardError):
    """Feature selection could not be carried out (degenerate folds, too few features)."""


class EvaluationError(GlucoGuardError):
    """Cross-validation or metric computation is impossible on the given data."""


class LedgerError(GlucoGuardError):
    """Base class for ledger-side failures."""


class RegistrationError(LedgerError):
    """Participant registration violated a network invariant."""


class AuthenticationError(LedgerError):
    """Credential checks failed (wrong PIN/proof, revoked credential, bad signature)."""


class PolicyDenied(LedgerError):
    """The access policy rejected a transaction; the denial itself is audited."""


class NotFoundError(LedgerError):
    """A content hash or subject is unknown to the store."""


class WorkflowError(GlucoGuardError):
    """An orchestrated workflow cannot run (e.g. prediction without a deployed model)."""
