"""Braid words and the combinatorics of their closure diagrams.

A braid word on ``n`` strands is a sequence of nonzero integers; ``e > 0``
stands for the generator sigma_e and ``e < 0`` for its inverse. The closure
diagram has one crossing per letter and one Seifert circle per strand.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np


class BraidParseError(ValueError):
    """Malformed braid text. ``position`` is the offending token's index."""

    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        self.token = token
        self.position = position
        if token is not None:
            message = f"{message}: token {token!r} at position {position}"
        super().__init__(message)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(e) for e in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for e in self.letters:
            if e == 0 or abs(e) > self.strands - 1:
                raise ValueError(f"letter {e} is not a generator of B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __add__(self, other: BraidWord) -> BraidWord:
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def conjugate(self, by: BraidWord) -> BraidWord:
        """``by^-1 * self * by``."""
        return by.inverse() + self + by

    def rotate(self, k: int) -> BraidWord:
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def array(self) -> np.ndarray:
        return np.asarray(self.letters, dtype=np.int64)


@dataclass(frozen=True)
class ClosureStats:
    components: int
    seifert_circles: int
    crossings: int
    euler_char: int | None
    betti: int | None
    connected_surface: bool


_PREFIX = re.compile(r"^\s*B\s*(\d+)\s*:(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"[B<n>:] e1 e2 ..."``.

    Without a prefix the strand count is ``max|e| + 1`` (at least 2).
    """
    declared = None
    body = text
    m = _PREFIX.match(text)
    if m:
        declared = int(m.group(1))
        body = m.group(2)
        if declared < 1:
            raise BraidParseError("strand count must be positive", f"B{declared}:", 0)
    tokens = body.split()
    if not tokens and declared is None:
        raise BraidParseError("empty braid word without a strand prefix")
    letters = []
    for pos, tok in enumerate(tokens):
        try:
            e = int(tok)
        except ValueError:
            raise BraidParseError("not an integer", tok, pos) from None
        if e == 0:
            raise BraidParseError("zero is not a generator", tok, pos)
        if declared is not None and abs(e) >= declared:
            raise BraidParseError(f"generator out of range for B_{declared}", tok, pos)
        letters.append(e)
    strands = declared if declared is not None else max([abs(e) for e in letters] + [1]) + 1
    return BraidWord(strands, tuple(letters))


def format_braid(w: BraidWord) -> str:
    body = " ".join(str(e) for e in w.letters)
    return f"B{w.strands}: {body}" if body else f"B{w.strands}:"


def permutation(w: BraidWord) -> list[int]:
    """Image of each starting strand position after traversing ``w``."""
    pos = list(range(w.strands))
    # track where the strand currently at slot s started
    slot = list(range(w.strands))
    for e in w.letters:
        i = abs(e) - 1
        slot[i], slot[i + 1] = slot[i + 1], slot[i]
    for s, start in enumerate(slot):
        pos[start] = s
    return pos


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * w.strands
    cycles = 0
    for s in range(w.strands):
        if not seen[s]:
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return cycles


def is_connected(w: BraidWord) -> bool:
    """True iff every column 1..n-1 carries at least one letter."""
    used = {abs(e) for e in w.letters}
    return all(i in used for i in range(1, w.strands))


def closure_stats(w: BraidWord) -> ClosureStats:
    s, c = w.strands, len(w.letters)
    connected = is_connected(w)
    return ClosureStats(
        components=closure_components(w),
        seifert_circles=s,
        crossings=c,
        euler_char=s - c if connected else None,
        betti=c - s + 1 if connected else None,
        connected_surface=connected,
    )


def split_blocks(w: BraidWord) -> list[BraidWord]:
    """Split a word along unused columns into words on consecutive strand blocks.

    Each block is re-indexed to start at strand 1. A strand with no crossings
    becomes the empty word on one strand.
    """
    used = {abs(e) for e in w.letters}
    blocks = []
    lo = 1
    for col in range(1, w.strands + 1):
        if col == w.strands or col not in used:
            hi = col
            letters = tuple(
                (abs(e) - lo + 1) * (1 if e > 0 else -1) for e in w.letters if lo <= abs(e) < hi
            )
            blocks.append(BraidWord(hi - lo + 1, letters))
            lo = col + 1
    return blocks


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-e for e in w.letters))


def word_flags(w: BraidWord) -> tuple[bool, bool, int]:
    """``(positive, homogeneous, exponent_sum)``."""
    positive = all(e > 0 for e in w.letters)
    signs: dict[int, int] = {}
    homogeneous = True
    for e in w.letters:
        s = 1 if e > 0 else -1
        if signs.setdefault(abs(e), s) != s:
            homogeneous = False
    return positive, homogeneous, sum(1 if e > 0 else -1 for e in w.letters)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def free_reduce(w: BraidWord, cyclic: bool = False) -> BraidWord:
    """Cancel adjacent ``e, -e`` pairs; with ``cyclic`` also across the seam."""
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    if cyclic:
        lo, hi = 0, len(stack)
        while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
            lo += 1
            hi -= 1
        stack = stack[lo:hi]
    return BraidWord(w.strands, tuple(stack))


def delta_word(power: int) -> BraidWord:
    """Delta^power in B_3."""
    unit = (1, 2, 1) if power >= 0 else (-1, -2, -1)
    return BraidWord(3, unit * abs(power))


def markov_reduce(w: BraidWord) -> list[BraidWord]:
    """Shrink a closure by cyclic cancellation and outer-strand destabilisation.

    Returns the split blocks that remain. A single empty word on one strand
    certifies the unknot; several blocks certify a split link. The reduction
    is sound but not complete.
    """
    pending = [w]
    done = []
    while pending:
        b = free_reduce(pending.pop(), cyclic=True)
        blocks = split_blocks(b)
        if len(blocks) > 1:
            pending.extend(blocks)
            continue
        n = b.strands
        if n >= 2:
            outer = next((g for g in (n - 1, 1) if sum(1 for e in b.letters if abs(e) == g) == 1), None)
            if outer is not None:
                at = next(k for k, e in enumerate(b.letters) if abs(e) == outer)
                rest = b.letters[at + 1 :] + b.letters[:at]
                if outer == 1:
                    # flip strand order so the removed strand is the last one
                    rest = tuple((n - abs(e)) * (1 if e > 0 else -1) for e in rest)
                pending.append(BraidWord(n - 1, rest))
                continue
        done.append(b)
    return done
