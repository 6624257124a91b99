"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class CayleyCharError(Exception):
    exit_code = 2


class InputError(CayleyCharError, ValueError):
    """Malformed input: bad cycle string, unknown group, invalid connection set."""

    exit_code = 1


class GroupTooLarge(InputError):
    def __init__(self, cap: int, count: int):
        super().__init__(f"group too large: more than {cap} elements (enumerated {count} before stopping)")
        self.cap = cap
        self.count = count


class ComputationError(CayleyCharError):
    """Bad prime, lift failure, stalled eigenspace splitting."""

    exit_code = 2


class VerificationError(CayleyCharError):
    """A computed object failed an internal consistency check."""

    exit_code = 3
