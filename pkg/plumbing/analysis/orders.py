import enum
from dataclasses import dataclass, field
from typing import Optional


class OrderKind(enum.Enum):
    TRIVIAL = "trivial"
    FINITE = "finite"
    INFINITE = "infinite"
    AT_LEAST = "at_least"
    UNKNOWN = "unknown"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Order:
    """Order of a group element or of a group.

    ``value`` is the order for ``FINITE``, the lower bound for ``AT_LEAST``
    and the coset high-water mark for ``EXHAUSTED``. ``multiple_of`` is set
    when the order is known to be divisible by it.
    """

    kind: OrderKind
    value: Optional[int] = None
    multiple_of: Optional[int] = None

    @classmethod
    def finite(cls, k: int) -> "Order":
        assert k >= 1
        return cls(OrderKind.TRIVIAL, 1) if k == 1 else cls(OrderKind.FINITE, k)

    @classmethod
    def infinite(cls) -> "Order":
        return cls(OrderKind.INFINITE)

    @classmethod
    def at_least(cls, k: int, multiple_of: Optional[int] = None) -> "Order":
        return cls(OrderKind.AT_LEAST, k, multiple_of)

    @classmethod
    def unknown(cls) -> "Order":
        return cls(OrderKind.UNKNOWN)

    @classmethod
    def exhausted(cls, high_water: int) -> "Order":
        return cls(OrderKind.EXHAUSTED, high_water)

    @classmethod
    def from_int(cls, k: int) -> "Order":
        """``0`` stands for infinite, as in the invariant factors of an abelian group."""
        return cls.infinite() if k == 0 else cls.finite(abs(k))

    @property
    def is_finite(self) -> bool:
        return self.kind in (OrderKind.TRIVIAL, OrderKind.FINITE)

    @property
    def is_trivial(self) -> bool:
        return self.kind == OrderKind.TRIVIAL

    @property
    def is_infinite(self) -> bool:
        return self.kind == OrderKind.INFINITE

    def __str__(self) -> str:
        if self.kind in (OrderKind.FINITE, OrderKind.TRIVIAL):
            return f"Finite({self.value})"
        if self.kind == OrderKind.AT_LEAST:
            suffix = f", multiple of {self.multiple_of}" if self.multiple_of else ""
            return f"AtLeast({self.value}{suffix})"
        if self.kind == OrderKind.EXHAUSTED:
            return f"Exhausted({self.value})"
        return self.kind.name.capitalize()

    def json(self) -> dict:
        record = {"kind": self.kind.value}
        if self.value is not None:
            record["value"] = self.value
        if self.multiple_of is not None:
            record["multiple_of"] = self.multiple_of
        return record


@dataclass(frozen=True)
class TraceStep:
    """One applied fact of a verdict's justification, with its parameters."""

    fact: str
    params: dict = field(default_factory=dict)

    def json(self) -> dict:
        return {"fact": self.fact, **{k: _plain(v) for k, v in self.params.items()}}

    def __str__(self) -> str:
        if not self.params:
            return self.fact
        return f"{self.fact}({', '.join(f'{k}={v}' for k, v in self.params.items())})"


def _plain(value):
    if hasattr(value, "json"):
        return value.json()
    if isinstance(value, (list, tuple)):
        return [_plain(x) for x in value]
    return value
