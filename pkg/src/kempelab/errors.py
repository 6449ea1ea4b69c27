"""Exception types raised across kempelab."""


class KempelabError(Exception):
    """Base class for all library errors."""


# embed
class InvalidMap(KempelabError, ValueError):
    """Rotation system is malformed (asymmetric neighbor lists, bad ids)."""


class NotSimple(InvalidMap):
    pass


class NotTriangulation(InvalidMap):
    pass


class EdgeCountMismatch(InvalidMap):
    pass


class Disconnected(InvalidMap):
    pass


class DisconnectedResult(KempelabError, ValueError):
    pass


class EdgeAbsent(KempelabError, KeyError):
    pass


class MultipleFacets(KempelabError, ValueError):
    """Deletion produced more than one outer facet without ``multi_facet=True``."""


class CapExceeded(KempelabError, ValueError):
    pass


class BadHeader(KempelabError, ValueError):
    pass


class TruncatedRecord(KempelabError, ValueError):
    pass


class OmegaNotCycle(KempelabError, ValueError):
    pass


# tiling
class InconsistentHolonomy(KempelabError, ValueError):
    pass


class SizeLimit(KempelabError, RuntimeError):
    pass


# kempe
class ColorNotInPair(KempelabError, ValueError):
    pass


class NotMaximal(KempelabError, ValueError):
    pass


class StaleCanal(KempelabError, ValueError):
    pass


class DegreeNot5(KempelabError, ValueError):
    pass


class PreconditionUnmet(KempelabError, ValueError):
    pass


# blockgraph
class NotATree(KempelabError, RuntimeError):
    pass


class InconsistentPlan(KempelabError, ValueError):
    pass


# relations
class StateSpaceLimit(KempelabError, RuntimeError):
    pass


# diamond
class NotFourGon(KempelabError, ValueError):
    pass


class EmptyFamily(KempelabError, RuntimeError):
    """A tiling family that must be nonempty came out empty."""


class NoRedChain(KempelabError, ValueError):
    pass


class NSAdjacent(KempelabError, ValueError):
    pass


# harness
class UnknownSuite(KempelabError, KeyError):
    pass


class CorpusUnavailable(KempelabError, FileNotFoundError):
    pass


class UnsupportedFormat(KempelabError, ValueError):
    pass
