"""Positive braid words read around a boundary circle."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from ..utils.errors import InputError

_LETTER = re.compile(r"s(\d+)(?:\^(\d+))?")


@dataclass(frozen=True)
class BraidWord:
    """Word in the generators s1..s(N-1) of the positive N-strand braid monoid."""

    strands: int
    letters: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise InputError(f"A braid needs at least 2 strands, got {self.strands}")
        for letter in self.letters:
            if not 1 <= letter < self.strands:
                raise InputError(f"Generator s{letter} is out of range for {self.strands} strands")

    @classmethod
    def of(cls, strands: int, letters: Iterable[int]) -> "BraidWord":
        return cls(strands, tuple(int(v) for v in letters))

    @classmethod
    def from_string(cls, text: str, strands: Optional[int] = None) -> "BraidWord":
        """Parse ``"s2 s1^3 s2"``; the strand count defaults to one more than the largest generator."""
        letters: List[int] = []
        for token in text.replace(",", " ").split():
            match = _LETTER.fullmatch(token)
            if match is None:
                raise InputError(f"Cannot parse braid letter {token!r}", fix_hint="Write letters as s1, s2^3, ...")
            letters.extend([int(match.group(1))] * int(match.group(2) or 1))
        if strands is None:
            strands = max(letters, default=1) + 1
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def rotate(self, steps: int) -> "BraidWord":
        """Cyclic shift: position k of the result holds letter (k - steps) of this word."""
        if not self.letters:
            return self
        L = len(self.letters)
        return BraidWord(self.strands, tuple(self.letters[(k - steps) % L] for k in range(L)))

    def swapped(self) -> "BraidWord":
        """Exchange s_i and s_(N-i)."""
        return BraidWord(self.strands, tuple(self.strands - v for v in self.letters))

    def cyclic_offsets(self, other: "BraidWord") -> List[int]:
        """All offsets d with ``self.letters[k] == other.letters[(k + d) % L]`` for every k."""
        if self.strands != other.strands or len(self) != len(other):
            return []
        L = len(self)
        if L == 0:
            return [0]
        return [d for d in range(L) if all(self.letters[k] == other.letters[(k + d) % L] for k in range(L))]

    def is_rotation_invariant(self, steps: int) -> bool:
        return self.rotate(steps) == self

    def to_json(self) -> Dict[str, object]:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "BraidWord":
        return cls.of(int(data["strands"]), data["letters"])

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        runs: List[str] = []
        current, count = self.letters[0], 0
        for letter in self.letters + (0,):
            if letter == current:
                count += 1
                continue
            runs.append(f"s{current}" if count == 1 else f"s{current}^{count}")
            current, count = letter, 1
        return " ".join(runs)


def tripod_word(a: int, b: int, c: int) -> BraidWord:
    """s2 s1^(a+1) s2 s1^(b+1) s2 s1^(c+1)."""
    letters: List[int] = []
    for p in (a, b, c):
        letters.append(2)
        letters.extend([1] * (p + 1))
    return BraidWord(3, tuple(letters))


def linear_word(n: int) -> BraidWord:
    """s1^(n+3)."""
    return BraidWord(2, (1,) * (n + 3))
