import enum
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Tuple

from plumbing.analysis.orders import Order, OrderKind, TraceStep
from plumbing.errors import VerdictConflict
from plumbing.group.intalg import lcm


class Status(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL_ORDER_UNKNOWN = "nontrivial_order_unknown"
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


NONTRIVIAL = (Status.NONTRIVIAL_ORDER_UNKNOWN, Status.FINITE, Status.INFINITE)


@dataclass(frozen=True)
class GammaVerdict:
    vertex: int
    status: Status
    order: Optional[int] = None
    order_multiple_of: Optional[int] = None
    trace: Tuple[TraceStep, ...] = ()

    @classmethod
    def unknown(cls, vertex: int, *steps: TraceStep) -> "GammaVerdict":
        return cls(vertex, Status.UNKNOWN, trace=steps)

    @classmethod
    def from_order(cls, vertex: int, order: Order, trace: Iterable[TraceStep] = ()) -> "GammaVerdict":
        trace = tuple(trace)
        if order.kind == OrderKind.TRIVIAL:
            return cls(vertex, Status.TRIVIAL, 1, trace=trace)
        if order.kind == OrderKind.FINITE:
            return cls(vertex, Status.FINITE, order.value, trace=trace)
        if order.kind == OrderKind.INFINITE:
            return cls(vertex, Status.INFINITE, trace=trace)
        if order.kind == OrderKind.AT_LEAST and order.value >= 2:
            return cls(vertex, Status.NONTRIVIAL_ORDER_UNKNOWN, order_multiple_of=order.multiple_of, trace=trace)
        return cls(vertex, Status.UNKNOWN, trace=trace)

    @property
    def is_nontrivial(self) -> bool:
        return self.status in NONTRIVIAL

    def with_steps(self, *steps: TraceStep, before: bool = False) -> "GammaVerdict":
        trace = steps + self.trace if before else self.trace + steps
        return replace(self, trace=trace)

    def lifted(self, step: TraceStep) -> "GammaVerdict":
        """Transfer along a homomorphism from the group of the verdict's own graph.

        An element of infinite order stays infinite and a finite order ``k``
        becomes a divisor of the unknown order. A trivial image says nothing.
        """
        if self.status == Status.INFINITE:
            return self.with_steps(step)
        if self.status == Status.FINITE:
            return GammaVerdict(
                self.vertex, Status.NONTRIVIAL_ORDER_UNKNOWN, None, self.order, self.trace + (step,)
            )
        if self.status == Status.NONTRIVIAL_ORDER_UNKNOWN:
            return self.with_steps(step)
        return GammaVerdict.unknown(self.vertex, *self.trace, step)

    def json(self) -> dict:
        return {
            "vertex": self.vertex,
            "status": self.status.value,
            "order": self.order,
            "order_multiple_of": self.order_multiple_of,
            "trace": [step.json() for step in self.trace],
        }

    def __str__(self) -> str:
        if self.status == Status.FINITE:
            return f"Finite({self.order})"
        if self.status == Status.NONTRIVIAL_ORDER_UNKNOWN and self.order_multiple_of:
            return f"NontrivialOrderUnknown(multiple of {self.order_multiple_of})"
        return "".join(part.capitalize() for part in self.status.value.split("_"))


def merge(first: GammaVerdict, second: GammaVerdict) -> GammaVerdict:
    """Combine two verdicts on the same loop, keeping the more informative one."""
    assert first.vertex == second.vertex
    a, b = first, second
    if a.status == Status.UNKNOWN:
        return b
    if b.status == Status.UNKNOWN:
        return a
    if b.status == Status.TRIVIAL:
        a, b = b, a
    if a.status == Status.TRIVIAL:
        if b.status == Status.TRIVIAL:
            return a
        raise VerdictConflict(a.vertex, a, b)

    if b.status == Status.FINITE:
        a, b = b, a
    if a.status == Status.FINITE:
        if b.status == Status.FINITE and b.order != a.order:
            raise VerdictConflict(a.vertex, a, b)
        if b.status == Status.INFINITE:
            raise VerdictConflict(a.vertex, a, b)
        if b.status == Status.NONTRIVIAL_ORDER_UNKNOWN and b.order_multiple_of:
            if a.order % b.order_multiple_of:
                raise VerdictConflict(a.vertex, a, b)
        return a

    if a.status == Status.INFINITE:
        return a
    if b.status == Status.INFINITE:
        return b

    multiple = lcm(a.order_multiple_of or 1, b.order_multiple_of or 1)
    if multiple == (a.order_multiple_of or 1):
        return a
    if multiple == (b.order_multiple_of or 1):
        return b
    return GammaVerdict(a.vertex, Status.NONTRIVIAL_ORDER_UNKNOWN, None, multiple, a.trace + b.trace)
