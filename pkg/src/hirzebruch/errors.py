"""Exception types.

Validation failures (bad input) subclass :class:`InvalidCharacter`; cases the
theory does not cover subclass :class:`UnsupportedCase`.  The CLI maps the
first family to exit code 1 and the second to exit code 2.
"""


class HirzebruchError(Exception):
    pass


class InvalidCharacter(HirzebruchError, ValueError):
    pass


class NonPositiveRank(InvalidCharacter):
    pass


class NonIntegralChi(InvalidCharacter):
    pass


class NonAmplePolarization(InvalidCharacter):
    pass


class NegativeDiscriminant(InvalidCharacter):
    pass


class RankTooSmall(InvalidCharacter):
    pass


class NonNefSlope(InvalidCharacter):
    pass


class NonPositiveMukaiRank(InvalidCharacter):
    pass


class UnsupportedCase(HirzebruchError):
    #: the result this case falls outside of, echoed by the CLI
    clause = ""


class UnsupportedRankOne(UnsupportedCase):
    clause = "Betti numbers via Serre duality need rank >= 2"


class AmbiguousModification(UnsupportedCase):
    clause = "elementary modification of a sheaf with both h0 and h1"


class Infeasible(HirzebruchError):
    """No twist ``L`` satisfies the Gaeta inequalities inside the searched region.

    ``certified`` is True when the region searched provably contains every
    feasible twist, so the failure is a proof of nonexistence.
    """

    def __init__(self, message, *, guaranteed=False, certified=False, region=None):
        super().__init__(message)
        self.guaranteed = guaranteed
        self.certified = certified
        self.region = region
