"""Exception types raised while building or querying complexes."""


class CubeComplexError(ValueError):
    """Base class for invalid-input errors."""


class MalformedEdge(CubeComplexError):
    def __init__(self, edge, reason):
        self.edge = tuple(edge)
        super().__init__(f"malformed edge {self.edge}: {reason}")


class Disconnected(CubeComplexError):
    def __init__(self, u, v):
        self.pair = (u, v)
        super().__init__(f"graph is disconnected: no path from {u} to {v}")


class NotMedian(CubeComplexError):
    """Raised with a witness triple having zero or several medians."""

    def __init__(self, triple, count):
        self.triple = tuple(int(t) for t in triple)
        self.count = int(count)
        super().__init__(f"not a median graph: triple {self.triple} has {self.count} medians")


class SeparationFailure(CubeComplexError):
    def __init__(self, hyperplane, components):
        self.hyperplane = hyperplane
        self.components = components
        super().__init__(
            f"edge class {hyperplane} splits the graph into {components} components, expected 2")


class ChainCountExceeded(CubeComplexError):
    def __init__(self, chains, d):
        self.chains, self.d = chains, d
        super().__init__(f"chain decomposition needs {chains} chains but dimension is {d}")


class NotAutomorphism(CubeComplexError):
    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"permutation is not an automorphism: edge {self.edge} is not mapped to an edge")


class InconsistentSpec(CubeComplexError):
    pass


class TooManyPairs(CubeComplexError):
    pass
