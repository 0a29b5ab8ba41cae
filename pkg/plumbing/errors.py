"""Every failure raised by the package derives from :class:`PlumbingError`.

Mathematical outcomes (an element of infinite order, an unknown verdict)
are never errors. Errors are reserved for malformed inputs and for
requests whose preconditions do not hold.
"""

from typing import Iterable, Optional, Sequence


class PlumbingError(RuntimeError):
    pass


# graph


class GraphValidationError(PlumbingError):
    pass


class DuplicateId(GraphValidationError):
    def __init__(self, vertex_id: int) -> None:
        super().__init__(f"Duplicate vertex id {vertex_id}")
        self.vertex_id = vertex_id


class DanglingEdge(GraphValidationError):
    def __init__(self, edge: Sequence[int], missing: int) -> None:
        super().__init__(f"Edge {tuple(edge)} references unknown vertex {missing}")
        self.edge = tuple(edge)
        self.missing = missing


class SelfLoop(GraphValidationError):
    def __init__(self, vertex_id: int) -> None:
        super().__init__(f"Self-loop at vertex {vertex_id}")
        self.vertex_id = vertex_id


class Disconnected(GraphValidationError):
    def __init__(self, components: Iterable[Iterable[int]]) -> None:
        self.components = [sorted(c) for c in components]
        super().__init__(f"Graph is disconnected, components: {self.components}")


class NoSuchVertex(PlumbingError):
    def __init__(self, vertex_id: int) -> None:
        super().__init__(f"No vertex with id {vertex_id}")
        self.vertex_id = vertex_id


class NoSuchEdge(PlumbingError):
    def __init__(self, edge: Sequence[int]) -> None:
        super().__init__(f"No edge {tuple(edge)}")
        self.edge = tuple(edge)


class InfiniteWeight(PlumbingError):
    def __init__(self, vertex_id: int, operation: str = "") -> None:
        message = f"Vertex {vertex_id} has infinite weight"
        if operation:
            message += f", {operation} needs a finite self-intersection"
        super().__init__(message)
        self.vertex_id = vertex_id


class NotATree(PlumbingError):
    def __init__(self, cycle_rank: int) -> None:
        super().__init__(f"Graph is not a tree (cycle rank {cycle_rank})")
        self.cycle_rank = cycle_rank


class NotContractible(PlumbingError):
    def __init__(self, vertex_id: int, reason: str) -> None:
        super().__init__(f"Vertex {vertex_id} cannot be blown down: {reason}")
        self.vertex_id = vertex_id
        self.reason = reason


class MultiEdgeCreated(PlumbingError):
    def __init__(self, vertex_id: int, neighbors: Sequence[int]) -> None:
        super().__init__(
            f"Blowing down {vertex_id} joins already adjacent vertices {tuple(neighbors)}"
        )
        self.vertex_id = vertex_id
        self.neighbors = tuple(neighbors)


class InvalidMove(PlumbingError):
    pass


class ValencyTooLow(PlumbingError):
    def __init__(self, vertex_id: int, valency: int) -> None:
        super().__init__(f"Vertex {vertex_id} has valency {valency}, at least 3 is needed")
        self.vertex_id = vertex_id
        self.valency = valency


# linear algebra


class NotSquare(PlumbingError):
    pass


class NotSymmetric(PlumbingError):
    pass


class ZeroDenominator(PlumbingError):
    pass


class EmptyChain(PlumbingError):
    pass


class IndexOutOfRange(PlumbingError):
    def __init__(self, index: int, length: int) -> None:
        super().__init__(f"Index {index} is outside 1..{length}")
        self.index = index
        self.length = length


# combs


class NotAComb(PlumbingError):
    pass


class PositiveGenusString(PlumbingError):
    def __init__(self, vertex_id: int) -> None:
        super().__init__(f"Vertex {vertex_id} of the comb has positive genus")
        self.vertex_id = vertex_id


class StringWeightTooSmall(PlumbingError):
    def __init__(self, vertex_id: int, self_int: int) -> None:
        super().__init__(
            f"String vertex {vertex_id} has self-intersection {self_int}, at most -2 is needed"
        )
        self.vertex_id = vertex_id
        self.self_int = self_int


class GcdViolation(PlumbingError):
    pass


# decision


class HypothesisViolated(PlumbingError):
    def __init__(self, theorem: str, reasons: Sequence[str], vertices: Sequence[int] = ()) -> None:
        self.theorem = theorem
        self.reasons = list(reasons)
        self.vertices = sorted(vertices)
        super().__init__(f"Hypotheses of {theorem} violated: {'; '.join(self.reasons)}")


class NotMinimal(HypothesisViolated):
    def __init__(self, vertices: Sequence[int]) -> None:
        super().__init__(
            "theorem_b",
            [f"vertex {v} is a smooth rational (-1)-curve of valency at most 2" for v in sorted(vertices)],
            vertices,
        )


class VerdictConflict(PlumbingError):
    def __init__(self, vertex_id: int, first, second) -> None:
        super().__init__(f"Contradictory verdicts for vertex {vertex_id}: {first} and {second}")
        self.vertex_id = vertex_id
        self.first = first
        self.second = second


# groups


class UnknownGenerator(PlumbingError):
    def __init__(self, name: str) -> None:
        super().__init__(f"Generator {name} is not part of the presentation")
        self.name = name


class NotElliptic(PlumbingError):
    def __init__(self, vertex_id: int, genus: int) -> None:
        super().__init__(f"Vertex {vertex_id} has genus {genus}, genus 1 is needed")
        self.vertex_id = vertex_id
        self.genus = genus


# files


class GraphFileError(PlumbingError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
