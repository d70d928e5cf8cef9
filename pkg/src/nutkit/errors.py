"""Exception hierarchy shared by every nutkit module."""


class NutkitError(Exception):
    """Base class for all errors raised by nutkit."""


# graph6 codec

class Graph6Error(NutkitError, ValueError):
    """Malformed or unsupported graph6 input."""


class ByteOutOfRange(Graph6Error):
    pass


class TruncatedPayload(Graph6Error):
    pass


class TrailingBytes(Graph6Error):
    pass


class NonzeroPadding(Graph6Error):
    pass


class OrderOverflow(Graph6Error):
    pass


class UnsupportedFormat(Graph6Error):
    pass


# structural / argument errors

class IndexOutOfRange(NutkitError, IndexError):
    pass


class EdgeNotPresent(NutkitError, ValueError):
    pass


class ShapeViolation(NutkitError, ValueError):
    pass


class NotFullVector(NutkitError, ValueError):
    pass


class MismatchedGroup(NutkitError, ValueError):
    pass


class InconsistentOrbitDegrees(NutkitError, RuntimeError):
    pass


class NotNutGraph(NutkitError, ValueError):
    pass


# short alias: constructions raise "NotNut"
NotNut = NotNutGraph


class NotVertexTransitive(NutkitError, ValueError):
    pass


# family parameters

class InvalidConnectionSet(NutkitError, ValueError):
    pass


class ParameterTooSmall(NutkitError, ValueError):
    pass


class DegenerateParameters(NutkitError, ValueError):
    pass


class UnknownName(NutkitError, KeyError):
    def __str__(self) -> str:  # KeyError repr-quotes its message otherwise
        return str(self.args[0]) if self.args else ""


# constructions

class NotRegular(NutkitError, ValueError):
    pass


class OddDegree(NutkitError, ValueError):
    pass


class EvenCycleLength(NutkitError, ValueError):
    pass


class NotBridge(NutkitError, ValueError):
    pass


class NotFullOrbit(NutkitError, ValueError):
    pass


class PrimeOrder(NutkitError, ValueError):
    pass


class OrderTooSmall(NutkitError, ValueError):
    pass


class OrderTooLarge(NutkitError, ValueError):
    pass
