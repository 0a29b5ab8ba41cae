import enum
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union


class GenKind(enum.IntEnum):
    GAMMA = 0
    LAMBDA = 1
    A = 2
    B = 3
    BETA = 4


@dataclass(frozen=True, order=True)
class Generator:
    """A named generator.

    ``GAMMA(i)`` is the loop around curve ``i``; ``LAMBDA(i, j, c)`` the
    loop closed by the ``c``-th non-tree edge between ``i < j``; ``A(i, h)``
    and ``B(i, h)`` the ``h``-th handle of curve ``i``. ``BETA(h)`` names the
    string loops of an abstract comb group.
    """

    kind: GenKind
    i: int
    j: int = 0
    copy: int = 1

    @property
    def sort_key(self) -> Tuple[int, ...]:
        if self.kind in (GenKind.A, GenKind.B):
            return (2, self.i, self.j, self.kind - GenKind.A)
        return (int(self.kind) if self.kind < GenKind.A else 3, self.i, self.j, self.copy)

    @property
    def name(self) -> str:
        if self.kind == GenKind.GAMMA:
            return f"g{self.i}"
        if self.kind == GenKind.LAMBDA:
            suffix = f"_{self.copy}" if self.copy > 1 else ""
            return f"l{self.i}_{self.j}{suffix}"
        if self.kind == GenKind.A:
            return f"a{self.i}_{self.j}"
        if self.kind == GenKind.B:
            return f"b{self.i}_{self.j}"
        return f"beta{self.i}"

    def __str__(self) -> str:
        return self.name


def gamma(i: int) -> Generator:
    return Generator(GenKind.GAMMA, i)


Letter = Tuple[Generator, int]


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for generator, exponent in letters:
        assert exponent in (1, -1)
        if stack and stack[-1][0] == generator and stack[-1][1] == -exponent:
            stack.pop()
        else:
            stack.append((generator, exponent))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word in generators and their inverses."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def of(cls, generator: Generator, power: int = 1) -> "Word":
        exponent = 1 if power > 0 else -1
        return cls(((generator, exponent),) * abs(power))

    @classmethod
    def product(cls, words: Iterable["Word"]) -> "Word":
        letters = []
        for word in words:
            letters.extend(word.letters)
        return cls(tuple(letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, power: int) -> "Word":
        base = self if power >= 0 else self.inverse()
        return Word.product([base] * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> List[Generator]:
        return sorted({g for g, _ in self.letters}, key=lambda g: g.sort_key)

    def exponent_sum(self, generator: Generator) -> int:
        return sum(e for g, e in self.letters if g == generator)

    def cyclically_reduced(self) -> "Word":
        letters = list(self.letters)
        while len(letters) > 1 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return Word(tuple(letters))

    def substitute(self, images: dict) -> "Word":
        """Replace generators by words; generators missing from ``images`` stay."""
        parts = []
        for g, e in self.letters:
            image = images.get(g, Word.of(g))
            parts.append(image if e == 1 else image.inverse())
        return Word.product(parts)

    def __str__(self) -> str:
        return format_letters(self.letters) or "1"


def commutator(x: Word, y: Word) -> Word:
    return x * y * x.inverse() * y.inverse()


def conjugate(x: Word, by: Word) -> Word:
    """``by * x * by^-1``."""
    return by * x * by.inverse()


def format_letters(letters: Sequence[Letter]) -> str:
    """Collapse runs of one generator into ``name^k`` factors."""
    factors = []
    k = 0
    while k < len(letters):
        generator, exponent = letters[k]
        run = 1
        while k + run < len(letters) and letters[k + run] == (generator, exponent):
            run += 1
        power = run * exponent
        factors.append(generator.name if power == 1 else f"{generator.name}^{power}")
        k += run
    return " ".join(factors)


@dataclass(frozen=True)
class Power:
    """``word^k`` kept as written for export."""

    word: Word
    power: int = 1

    def expand(self) -> Word:
        return self.word ** self.power

    def __str__(self) -> str:
        if len(self.word) == 1 and self.word.letters[0][1] == 1:
            name = self.word.letters[0][0].name
            return name if self.power == 1 else f"{name}^{self.power}"
        return format_letters(self.expand().letters)


@dataclass(frozen=True)
class Commutator:
    x: Generator
    y: Generator

    def expand(self) -> Word:
        return commutator(Word.of(self.x), Word.of(self.y))

    def __str__(self) -> str:
        return f"[{self.x.name},{self.y.name}]"


Factor = Union[Power, Commutator]
