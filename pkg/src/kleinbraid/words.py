"""Exact arithmetic on reduced words in the free group F(u, v).

Words are run-length encoded: a tuple of (generator, exponent) pairs with
nonzero exponents and distinct adjacent generators.  The empty tuple is the
identity.  Construction always re-reduces, so two words represent the same
group element iff they compare equal as values.

``B`` abbreviates the fixed word u v u v^-1.  Input text may use it as
shorthand (with an optional exponent); canonical output never emits it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

Run = Tuple[str, int]


class WordParseError(ValueError):
    """Malformed word text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _reduce(runs: Iterable[Run]) -> tuple[Run, ...]:
    out: list[Run] = []
    for gen, exp in runs:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (gen, merged)
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A reduced word over {u, v}; all operations are exact and pure."""

    runs: tuple[Run, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "runs", _reduce(self.runs))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.runs + other.runs)

    def inv(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.runs)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inv()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def conj(self, x: "Word") -> "Word":
        """self * x * self.inv()."""
        return self * x * self.inv()

    @property
    def is_identity(self) -> bool:
        return not self.runs

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.runs)

    def exponent_sums(self) -> tuple[int, int]:
        """(total u-exponent, total v-exponent) of the word."""
        pu = sum(e for g, e in self.runs if g == "u")
        pv = sum(e for g, e in self.runs if g == "v")
        return pu, pv

    def __str__(self) -> str:
        if not self.runs:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.runs)


ONE = Word()
U = Word((("u", 1),))
V = Word((("v", 1),))
BIG_B = Word((("u", 1), ("v", 1), ("u", 1), ("v", -1)))


def big_b() -> Word:
    """The fixed word u v u v^-1."""
    return BIG_B


def mul(x: Word, y: Word) -> Word:
    return x * y


def inv(x: Word) -> Word:
    return x.inv()


def conj(t: Word, x: Word) -> Word:
    return t.conj(x)


def comm(x: Word, y: Word) -> Word:
    """Commutator x y x^-1 y^-1."""
    return x * y * x.inv() * y.inv()


def power(x: Word, n: int) -> Word:
    return x ** n


_TERM = re.compile(r"([uvB1])(\^(-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse ``term*`` where ``term := ("u"|"v"|"B"|"1") ("^" integer)?``."""
    out = ONE
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TERM.match(text, pos)
        if m is None:
            raise WordParseError(
                f"expected 'u', 'v', 'B' or '1', found {text[pos]!r}", pos
            )
        sym = m.group(1)
        exp = 1 if m.group(3) is None else int(m.group(3))
        if sym in ("u", "v"):
            out = out * Word(((sym, exp),))
        elif sym == "B":
            out = out * BIG_B ** exp
        pos = m.end()
    return out


def format_word(w: Word) -> str:
    return str(w)
