"""Hot integer kernels: Seifert forms of braid closures and exact signatures.

Every function here is numba-compilable and also runs unchanged as plain
Python (see ``_jit``). Arithmetic is int64 with an explicit overflow guard;
callers that get ``ok == False`` must redo the work with Python integers.
"""
import numpy as np

from ._jit import njit

# Entries above this bound could overflow int64 in a single Schur update.
_GUARD = 1 << 30


@njit
def _gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


@njit
def seifert_generators(letters, strands):
    """Homology basis of the canonical surface.

    Returns an ``(m, 5)`` array with one row per generator:
    ``(column, start, stop, sign_start, sign_stop)`` where ``start`` and
    ``stop`` are the word positions of two consecutive letters of the same
    column.
    """
    n_letters = letters.shape[0]
    counts = np.zeros(strands, dtype=np.int64)
    for k in range(n_letters):
        counts[abs(letters[k])] += 1
    m = 0
    for col in range(1, strands):
        if counts[col] > 1:
            m += counts[col] - 1
    gens = np.zeros((m, 5), dtype=np.int64)
    row = 0
    for col in range(1, strands):
        prev = -1
        for k in range(n_letters):
            e = letters[k]
            if abs(e) != col:
                continue
            if prev >= 0:
                gens[row, 0] = col
                gens[row, 1] = prev
                gens[row, 2] = k
                gens[row, 3] = 1 if letters[prev] > 0 else -1
                gens[row, 4] = 1 if e > 0 else -1
                row += 1
            prev = k
    return gens


@njit
def seifert_matrix_kernel(letters, strands):
    """Seifert matrix of the canonical surface of the closed braid.

    Generators follow ``seifert_generators``; rows of one column are
    contiguous and ordered by position.
    """
    gens = seifert_generators(letters, strands)
    m = gens.shape[0]
    mat = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        col = gens[a, 0]
        start = gens[a, 1]
        stop = gens[a, 2]
        mat[a, a] = -(gens[a, 3] + gens[a, 4]) // 2
        for b in range(m):
            col2 = gens[b, 0]
            start2 = gens[b, 1]
            stop2 = gens[b, 2]
            if col2 == col and start2 == stop:
                # consecutive loops share the band at ``stop``
                if gens[a, 4] > 0:
                    mat[a, b] += 1
                else:
                    mat[b, a] -= 1
            elif col2 == col + 1:
                if start < start2 < stop < stop2:
                    mat[a, b] += 1
                elif start2 < start < stop2 < stop:
                    mat[a, b] -= 1
    return mat


@njit
def strand_blocks(letters, strands):
    """Number of connected components of the strand graph (edges i -- i+1)."""
    used = np.zeros(strands, dtype=np.bool_)
    for k in range(letters.shape[0]):
        used[abs(letters[k])] = True
    blocks = 1
    for col in range(1, strands):
        if not used[col]:
            blocks += 1
    return blocks


@njit
def int_signature(form):
    """Signature and nullity of a symmetric int64 matrix.

    Fraction-free symmetric elimination: the active block is always a
    (signed) positive multiple of the true Schur complement, and is divided
    by its content after each step. A 2x2 hyperbolic pivot is split off when
    the remaining diagonal vanishes. Returns ``(signature, nullity, ok)``;
    ``ok`` is False when an entry exceeded the overflow guard.
    """
    a = form.copy()
    size = a.shape[0]
    sig = 0
    sign = 1
    k = 0
    while k < size:
        biggest = 0
        for i in range(k, size):
            for j in range(k, size):
                v = abs(a[i, j])
                if v > biggest:
                    biggest = v
        if biggest == 0:
            return sig, size - k, True
        if biggest > _GUARD:
            return sig, 0, False
        piv = -1
        best = 0
        for i in range(k, size):
            v = abs(a[i, i])
            if v != 0 and (piv < 0 or v < best):
                piv = i
                best = v
        if piv >= 0:
            if piv != k:
                for j in range(size):
                    a[piv, j], a[k, j] = a[k, j], a[piv, j]
                for i in range(size):
                    a[i, piv], a[i, k] = a[i, k], a[i, piv]
            p = a[k, k]
            ps = 1 if p > 0 else -1
            sig += ps * sign
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    a[i, j] = p * a[i, j] - a[i, k] * a[k, j]
            sign *= ps
            k += 1
        else:
            pi = -1
            pj = -1
            for i in range(k, size):
                for j in range(i + 1, size):
                    if a[i, j] != 0:
                        pi = i
                        pj = j
                        break
                if pi >= 0:
                    break
            # move (pi, pj) to (k, k+1)
            if pi != k:
                for j in range(size):
                    a[pi, j], a[k, j] = a[k, j], a[pi, j]
                for i in range(size):
                    a[i, pi], a[i, k] = a[i, k], a[i, pi]
                if pj == k:
                    pj = pi
            if pj != k + 1:
                for j in range(size):
                    a[pj, j], a[k + 1, j] = a[k + 1, j], a[pj, j]
                for i in range(size):
                    a[i, pj], a[i, k + 1] = a[i, k + 1], a[i, pj]
            b = a[k, k + 1]
            # hyperbolic block contributes +1 and -1
            for i in range(k + 2, size):
                for j in range(k + 2, size):
                    a[i, j] = b * a[i, j] - a[i, k] * a[k + 1, j] - a[i, k + 1] * a[k, j]
            sign *= 1 if b > 0 else -1
            k += 2
        g = 0
        for i in range(k, size):
            for j in range(k, size):
                g = _gcd(g, a[i, j])
        if g > 1:
            for i in range(k, size):
                for j in range(k, size):
                    a[i, j] //= g
    return sig, 0, True


@njit
def closure_signature(letters, strands):
    """Split-aware (signature, nullity, ok) of the closure of one word."""
    mat = seifert_matrix_kernel(letters, strands)
    sym = mat + mat.T
    sig, null, ok = int_signature(sym)
    return sig, null + strand_blocks(letters, strands) - 1, ok


@njit
def batch_closure_signature(words, lengths, strands):
    """Signatures of many closures. ``words`` is a zero-padded 2-D array."""
    count = words.shape[0]
    sigs = np.zeros(count, dtype=np.int64)
    nulls = np.zeros(count, dtype=np.int64)
    oks = np.ones(count, dtype=np.bool_)
    for r in range(count):
        letters = words[r, : lengths[r]].astype(np.int64)
        sig, null, ok = closure_signature(letters, strands)
        sigs[r] = sig
        nulls[r] = null
        oks[r] = ok
    return sigs, nulls, oks


@njit
def batch_deletion_signature(words, lengths, strands):
    """Signature of every single-letter deletion of every word.

    Returns an array of shape ``(count, max_len)``; unused slots hold 0 and
    ``oks`` flags rows that needed the overflow fallback.
    """
    count = words.shape[0]
    width = words.shape[1]
    sigs = np.zeros((count, width), dtype=np.int64)
    oks = np.ones(count, dtype=np.bool_)
    for r in range(count):
        length = lengths[r]
        full = words[r, :length].astype(np.int64)
        buf = np.zeros(max(length - 1, 0), dtype=np.int64)
        for pos in range(length):
            idx = 0
            for k in range(length):
                if k != pos:
                    buf[idx] = full[k]
                    idx += 1
            sig, null, ok = closure_signature(buf, strands)
            sigs[r, pos] = sig
            if not ok:
                oks[r] = False
    return sigs, oks
