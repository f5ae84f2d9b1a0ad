"""Seifert matrices of braid closures and the signatures they give.

The canonical surface of a closed braid is a stack of one disk per strand
joined by a half-twisted band at each crossing. Its homology has one loop for
each pair of consecutive letters in the same column, so the matrix has size
``cr(D) - s(D) + 1`` when the surface is connected.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .braid import BraidWord, ClosureStats, closure_stats, split_blocks
from .symform import SymBilinearForm, format_grid, signature_nullity


class DisconnectedSurfaceError(ValueError):
    """The canonical surface is disconnected; the closure is split."""


@dataclass(frozen=True)
class SeifertData:
    matrix: np.ndarray
    stats: ClosureStats
    symmetrized: SymBilinearForm

    def __str__(self) -> str:
        return f"M =\n{format_grid(self.matrix)}\nM + M^T =\n{format_grid(self.matrix + self.matrix.T)}"


def _raw_matrix(w: BraidWord) -> np.ndarray:
    if w.strands < 2:
        return np.zeros((0, 0), dtype=np.int64)
    return kernels.seifert_matrix_kernel(w.array(), w.strands)


def seifert_matrix(w: BraidWord) -> SeifertData:
    stats = closure_stats(w)
    if not stats.connected_surface:
        pieces = " | ".join(str(b) for b in split_blocks(w))
        raise DisconnectedSurfaceError(
            f"canonical surface of {w} is disconnected; split it into {pieces}"
        )
    mat = _raw_matrix(w)
    return SeifertData(mat, stats, SymBilinearForm.from_array(mat + mat.T))


def signature_nullity_of_closure(w: BraidWord) -> tuple[int, int]:
    return signature_nullity(seifert_matrix(w).symmetrized)


def link_signature(w: BraidWord) -> tuple[int, int]:
    """(signature, nullity) of any closure, split or not.

    A split closure is the split union of its blocks: signatures add, and
    every extra split piece adds one to the nullity.
    """
    blocks = split_blocks(w)
    sig = null = 0
    for b in blocks:
        s, n = signature_nullity_of_closure(b)
        sig += s
        null += n
    return sig, null + len(blocks) - 1


def batch_link_signature(words, strands: int) -> tuple[np.ndarray, np.ndarray]:
    """Signatures and nullities of many words on the same strand count.

    ``words`` is a list of letter sequences. Rows that overflow the int64
    kernel are recomputed exactly.
    """
    count = len(words)
    width = max((len(w) for w in words), default=0)
    arr = np.zeros((count, max(width, 1)), dtype=np.int8)
    lengths = np.zeros(count, dtype=np.int64)
    for r, w in enumerate(words):
        arr[r, : len(w)] = w
        lengths[r] = len(w)
    return batch_from_array(arr, lengths, strands)


def batch_from_array(arr: np.ndarray, lengths: np.ndarray, strands: int):
    sigs, nulls, oks = kernels.batch_closure_signature(arr, lengths, strands)
    for r in np.flatnonzero(~oks):
        w = BraidWord(strands, tuple(int(x) for x in arr[r, : lengths[r]]))
        sigs[r], nulls[r] = link_signature(w)
    return sigs, nulls
