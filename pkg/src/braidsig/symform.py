"""Exact signature and nullity of symmetric integer bilinear forms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .kernels import int_signature

_KERNEL_LIMIT = 1 << 20


class NotSymmetricError(ValueError):
    pass


@dataclass(frozen=True)
class SymBilinearForm:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("form must be square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise NotSymmetricError(f"entry ({i},{j}) differs from ({j},{i})")

    @classmethod
    def from_array(cls, arr) -> SymBilinearForm:
        arr = np.asarray(arr)
        if arr.size == 0:
            return cls(())
        return cls(tuple(tuple(int(x) for x in row) for row in arr.tolist()))

    @property
    def size(self) -> int:
        return len(self.entries)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object).reshape(self.size, self.size)

    def __neg__(self) -> SymBilinearForm:
        return SymBilinearForm(tuple(tuple(-x for x in row) for row in self.entries))


def _as_form(f) -> SymBilinearForm:
    return f if isinstance(f, SymBilinearForm) else SymBilinearForm.from_array(f)


def diagonalize(f) -> list[Fraction]:
    """Diagonal of an exact rational congruence diagonalization of ``f``.

    A 2x2 hyperbolic block ``[[0, b], [b, 0]]`` met when every remaining
    diagonal entry vanishes is recorded as the pair ``b, -b``; that pair is
    congruent to the block.
    """
    f = _as_form(f)
    a = [[Fraction(x) for x in row] for row in f.entries]
    n = len(a)
    diag: list[Fraction] = []
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            diag.append(p)
            rest = [i for i in active if i != piv]
            col = {i: a[i][piv] for i in rest}
            for i in rest:
                if col[i]:
                    for j in rest:
                        a[i][j] -= col[i] * a[piv][j] / p
            active = rest
            continue
        pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
        if pair is None:
            diag.extend(Fraction(0) for _ in active)
            break
        i0, j0 = pair
        b = a[i0][j0]
        diag.extend((b, -b))
        rest = [i for i in active if i not in pair]
        ci = {i: a[i][i0] for i in rest}
        cj = {i: a[i][j0] for i in rest}
        for i in rest:
            for j in rest:
                a[i][j] -= (ci[i] * cj[j] + cj[i] * ci[j]) / b
        active = rest
    return diag


def _counts(diag) -> tuple[int, int]:
    pos = sum(1 for x in diag if x > 0)
    neg = sum(1 for x in diag if x < 0)
    return pos - neg, len(diag) - pos - neg


def signature_nullity(f) -> tuple[int, int]:
    """``(signature, nullity)`` of a symmetric integer matrix, exactly."""
    f = _as_form(f)
    if f.size == 0:
        return 0, 0
    if max(abs(x) for row in f.entries for x in row) < _KERNEL_LIMIT:
        sig, null, ok = int_signature(np.array(f.entries, dtype=np.int64))
        if ok:
            return int(sig), int(null)
    return _counts(diagonalize(f))


def format_diagonal(f) -> str:
    """Debug view: the diagonalized form, one entry per line."""
    return "\n".join(str(x) for x in diagonalize(f))


def format_grid(arr) -> str:
    arr = np.asarray(arr)
    if arr.size == 0:
        return "[]"
    width = max(len(str(int(x))) for x in arr.flat)
    return "\n".join(" ".join(str(int(x)).rjust(width) for x in row) for row in arr)
