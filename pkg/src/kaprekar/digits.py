"""Digit-level core of the Kaprekar routine.

A step maps a fixed-width digit word to the difference between its digits
sorted descending and sorted ascending, keeping leading zeros. Words whose
digits are all equal map to zero and are excluded from the working sets.

Supported widths are 2 through 5.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

SUPPORTED_WIDTHS = (2, 3, 4, 5)


@dataclass(frozen=True, slots=True)
class DigitWord:
    """A fixed-width decimal word, leading zeros significant."""

    width: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.width not in SUPPORTED_WIDTHS:
            raise ValueError(f"unsupported width {self.width}")
        if len(self.digits) != self.width:
            raise ValueError(f"expected {self.width} digits, got {len(self.digits)}")
        if any(d < 0 or d > 9 for d in self.digits):
            raise ValueError(f"digits out of range: {self.digits}")
        if len(set(self.digits)) == 1:
            raise ValueError(f"all digits equal in {self.text()}: word has no image")

    @classmethod
    def parse(cls, text: str, width: int | None = None) -> "DigitWord":
        """Build from a digit string. Width defaults to the string length."""
        if width is None:
            width = len(text)
        if len(text) != width:
            raise ValueError(f"expected {width} characters, got {text!r}")
        if not text.isdigit():
            raise ValueError(f"not a digit string: {text!r}")
        return cls(width, tuple(int(ch) for ch in text))

    @classmethod
    def from_int(cls, value: int, width: int) -> "DigitWord":
        if value < 0 or value >= 10**width:
            raise ValueError(f"{value} does not fit in {width} digits")
        return cls.parse(str(value).zfill(width), width)

    def value(self) -> int:
        return int(self.text())

    def text(self) -> str:
        return "".join(str(d) for d in self.digits)

    def __str__(self) -> str:
        return self.text()


def kaprekar_step(word: DigitWord) -> DigitWord:
    """One routine step: descending arrangement minus ascending arrangement."""
    asc = sorted(word.digits)
    desc = list(reversed(asc))
    hi = int("".join(str(d) for d in desc))
    lo = int("".join(str(d) for d in asc))
    return DigitWord.from_int(hi - lo, word.width)


@dataclass(frozen=True, slots=True)
class Terminal:
    """How an orbit closed: a cycle of length >= 1 inside the step trail.

    kind is "fixed_point" exactly when cycle_length == 1. entry_index is
    the position in the trail where the repeating part begins.
    """

    kind: str
    entry_index: int
    cycle_length: int


@dataclass(frozen=True, slots=True)
class Orbit:
    """Trail of distinct words from a start until the first repetition.

    steps[0] is the starting word, so "reaches x at step k" means
    steps[k] == x.
    """

    steps: tuple[DigitWord, ...]
    terminal: Terminal

    def cycle(self) -> tuple[DigitWord, ...]:
        return self.steps[self.terminal.entry_index:]


def orbit(word: DigitWord, max_iter: int = 64) -> Orbit:
    """Iterate kaprekar_step until a word repeats.

    max_iter bounds the trail length; 64 is far above the worst case for
    the supported widths (the longest trail is 10 words, at width 5).
    """
    seen: dict[tuple[int, ...], int] = {word.digits: 0}
    steps = [word]
    for _ in range(max_iter):
        word = kaprekar_step(word)
        if word.digits in seen:
            entry = seen[word.digits]
            length = len(steps) - entry
            kind = "fixed_point" if length == 1 else "cycle"
            return Orbit(tuple(steps), Terminal(kind, entry, length))
        seen[word.digits] = len(steps)
        steps.append(word)
    raise RuntimeError(f"orbit did not close within {max_iter} steps")


@functools.lru_cache(maxsize=None)
def enumerate_words(width: int) -> tuple[DigitWord, ...]:
    """All width-digit words with at least two distinct digits, ascending."""
    if width not in SUPPORTED_WIDTHS:
        raise ValueError(f"unsupported width {width}")
    out = []
    for value in range(10**width):
        text = str(value).zfill(width)
        if len(set(text)) > 1:
            out.append(DigitWord.parse(text, width))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def enumerate_images(width: int) -> tuple[DigitWord, ...]:
    """The distinct step images over all admissible words, ascending."""
    images = {kaprekar_step(word).digits for word in enumerate_words(width)}
    return tuple(DigitWord(width, d) for d in sorted(images))


def iter_orbits(width: int) -> Iterator[Orbit]:
    """Orbits of every admissible word of the given width."""
    for word in enumerate_words(width):
        yield orbit(word)
