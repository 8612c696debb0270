"""Exception types shared across the package."""


class FormatError(ValueError):
    """A text document does not match the expected line format."""


class PivotOnZero(ValueError):
    """Pivot requested at a zero matrix entry."""


class DimensionMismatch(ValueError):
    """Two matrices (or bipartite graphs) have incompatible shapes."""


class NotAnEdge(ValueError):
    """Graph pivot requested on a non-edge."""


class OrbitBudgetExceeded(RuntimeError):
    """Pivot orbit grew past the caller's size budget."""


class SearchBudgetExceeded(RuntimeError):
    """Containment search ran out of node budget; result is unknown."""


class NotConnected(ValueError):
    """The multigraph is not connected."""


class NotASpanningTree(ValueError):
    """The designated edge set is not a spanning tree."""


class GroundSetTooLarge(ValueError):
    """Matroid ground set exceeds the enumeration cap."""


class ElementNotFound(KeyError):
    """Matroid element label not present where required."""


class TreeTooSmall(ValueError):
    """Tree has fewer edges than the splitting procedure requires."""


class NotATree(ValueError):
    """The graph is not a tree (connected and acyclic)."""


class PartitionInvalid(ValueError):
    """Row/column classes do not partition the index range."""


class UnknownCampaign(ValueError):
    """No campaign registered under the given name."""


class CapExceeded(RuntimeError):
    """Requested parameters exceed a documented size cap."""


class SubsetCapExceeded(CapExceeded):
    """Subset enumeration over a vertex/element set larger than the cap."""
