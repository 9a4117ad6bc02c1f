"""Exception types shared across the package."""


class SemifreeError(Exception):
    """Base class for all mathematical / validation errors raised here."""


# exact_algebra
class NotPolynomial(SemifreeError):
    """A rational function was required to reduce to a polynomial but did not."""


class Inconsistent(SemifreeError):
    """Prescribed entries are incompatible with the kernel constraints."""


class Underdetermined(SemifreeError):
    """Too few prescribed entries to pin down a unique kernel vector."""


# fixed point data
class ZeroWeight(SemifreeError):
    """A fixed point carries a zero weight (fixed points must be isolated)."""


class WrongWeightCount(SemifreeError):
    """A fixed point does not carry exactly n weights."""


class DuplicateId(SemifreeError):
    """Two fixed points share an id."""


class MissingMomentValue(SemifreeError):
    """An operation needing moment values met a point without one."""


class ZeroIsCritical(SemifreeError):
    """Zero is a critical level: some moment value (or the offset) is integral."""


class NotSemifree(SemifreeError):
    """An operation restricted to semifree data got a weight other than +-1."""


# localization
class SearchSpaceTooLarge(SemifreeError):
    """The candidate enumeration exceeds the configured cap."""


# deduction pipeline
class NoIntegerSolution(SemifreeError):
    """No multiset of integers satisfies the sum / square-sum constraints."""


class WrongCount(SemifreeError):
    """A point's count of unit restrictions differs from its index."""


class NotInjective(SemifreeError):
    """Two points were assigned the same subset."""


class NotSurjective(SemifreeError):
    """Some subset is not hit by the point-to-subset map."""


class CountMismatch(SemifreeError):
    """Fixed point counts are not the binomial row the deduction needs."""


# hypercube model
class NotInModule(SemifreeError):
    """A basis expansion produced a non-integral or negative-degree coefficient."""


class InputError(SemifreeError):
    """Malformed input document."""
