"""Exception types raised by greedyseq."""


class GreedySeqError(ValueError):
    """Base class; ``kind`` is the stable name reported by the CLI."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class InvalidCoinSystem(GreedySeqError):
    pass


class AmountExceedsLimit(GreedySeqError):
    pass


class InvalidTriad(GreedySeqError):
    pass


class NotAnExtension(GreedySeqError):
    pass


class WrongSize(GreedySeqError):
    pass


class InvalidParams(GreedySeqError):
    pass


class NotMonotonic(GreedySeqError):
    pass


class DegenerateRoots(GreedySeqError):
    pass


class HorizonTooSmall(GreedySeqError):
    pass


class IneligibleParams(InvalidParams):
    """Valid parameters that fall outside a result's hypotheses."""
