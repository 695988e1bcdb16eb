"""Quivers read off brick diagrams of positive braid words."""

from __future__ import annotations

from typing import Iterable, List, Tuple

from .matrix import Quiver

Brick = Tuple[int, int, int]  # (row, left letter position, right letter position)


def bricks(letters: Iterable[int]) -> List[Brick]:
    """Bounded regions between consecutive occurrences of the same generator, ordered by left end."""
    positions = {}
    for index, letter in enumerate(letters):
        positions.setdefault(letter, []).append(index)
    found = [
        (row, left, right)
        for row, spots in positions.items()
        for left, right in zip(spots, spots[1:])
    ]
    return sorted(found, key=lambda brick: (brick[1], brick[0]))


def quiver_from_brick(word: Iterable[int]) -> Quiver:
    """Brick quiver of a positive braid word.

    Consecutive bricks of one row get an arrow left to right. Bricks of
    adjacent rows whose spans interleave get an arrow from the brick that
    starts later to the one that starts earlier; nested spans give nothing.
    ``word`` is a BraidWord or a plain sequence of generator indices.
    """
    letters = list(getattr(word, "letters", word))
    found = bricks(letters)
    index = {brick: number for number, brick in enumerate(found, start=1)}
    arrows = []
    for brick in found:
        row, left, right = brick
        for other in found:
            o_row, o_left, o_right = other
            if o_row == row and o_left == right:
                arrows.append((index[brick], index[other]))
            elif abs(o_row - row) == 1 and left < o_left < right < o_right:
                arrows.append((index[other], index[brick]))
    return Quiver.from_arrows(len(found), arrows)
