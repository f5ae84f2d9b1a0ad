"""Closed-form invariants of 3-braid closures and finite checks of the classification results.

Every ``verify_*`` function returns a JSON-ready report::

    {"claim": str, "parameters": {...}, "checked": int,
     "violations": [...], "details": {...}}

Verifiers that enumerate can be sharded: ``shard_index`` of ``shards``
handles the words whose first letters fall in its residue class, and
``merge_reports`` combines the shards into the report of the full run.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import asdict, dataclass

import numpy as np

from .braid import (
    BraidWord,
    closure_components,
    free_reduce,
    is_connected,
    markov_reduce,
    mirror,
    split_blocks,
    word_flags,
)
from .garside3 import MurasugiClass, conjugacy_test, conjugate_to_positive, murasugi_class
from .seifert import batch_from_array, link_signature
from .twobridge import BraidWitness, ConwayDiagram, alternating_crossing_number, fraction, geography_realizer, gl_signature
from .kernels import batch_deletion_signature

EXCEPTIONS = frozenset({(1, 0), (2, 0), (3, 0), (3, 1), (3, -1), (5, 0)})


@dataclass(frozen=True)
class CrossingData:
    cr: int
    braid_index: int | None
    name: str
    status: str
    # a word on braid_index strands with the same closure, when known
    reduced: BraidWord | None = None


@dataclass(frozen=True)
class LinkReport:
    name: str
    sigma: int
    nullity: int
    components: int
    crossing_number: int | None
    status: str
    braid_index: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def murasugi_erle_sigma(cls: MurasugiClass) -> int:
    """Signature of the closure of a family representative."""
    n, even = cls.n, cls.n % 2 == 0
    f = cls.family
    if f == 0:
        return -4 * n
    if f == 1:
        return -4 * n if even else -4 * n - 2
    if f == 2:
        return -4 * n - 2 if even else -4 * n - 4
    if f == 3:
        return -4 * n - 1 if even else -4 * n - 3
    if f == 4:
        return cls.p - 4 * n - 1 if even else cls.p - 4 * n
    if f == 5:
        return -cls.q - 4 * n + 1 if even else -cls.q - 4 * n
    return sum(p - q for p, q in cls.pairs) - 4 * n


def positive_predicate(cls: MurasugiClass) -> bool:
    """Closed-form test for being conjugate to a positive braid."""
    if cls.family == 4:
        return 2 * cls.n >= cls.p
    if cls.family == 6:
        return 2 * cls.n >= cls.p_total
    return cls.n >= 0


def _two_braid(k: int) -> CrossingData:
    if abs(k) <= 1:
        return CrossingData(0, 1, "Unknot", "exact", BraidWord(1, ()))
    return CrossingData(abs(k), 2, f"T(2,{k})", "exact", BraidWord(2, (1 if k > 0 else -1,) * abs(k)))


def _positive_class(cls: MurasugiClass, e: int) -> CrossingData:
    """Crossing data of a closure conjugate to a positive word with exponent sum ``e``."""
    n, f = cls.n, cls.family
    if f == 1 and n == 0:
        return _two_braid(1)
    if f == 2 and n == 0:
        return _two_braid(3)
    if f == 3 and n == 0:
        return _two_braid(2)
    if f == 4 and n == 1 and cls.p == 1:
        return _two_braid(4)
    if f == 6 and n == 1 and len(cls.pairs) == 1 and cls.pairs[0][0] == 1:
        return _two_braid(cls.pairs[0][1] + 4)
    name = "Unknown"
    if f in (0, 1, 2):
        name = f"T(3,{3 * n + f})"
    elif f == 3 and n == 1:
        name = "DeltaCubed"
    elif f == 4 and n == 1 and cls.p == 2:
        name = "ConnectedSum(T(2,2),T(2,2))"
    elif f == 5 and n == 1:
        name = f"Pretzel(-2,2,{cls.q + 2})"
    elif f == 6 and n == 1:
        if len(cls.pairs) == 1 and cls.pairs[0][0] == 2:
            name = f"ConnectedSum(T(2,2),T(2,{cls.pairs[0][1] + 2}))"
        elif len(cls.pairs) == 2 and all(p == 1 for p, _ in cls.pairs):
            a, b = sorted(q + 2 for _, q in cls.pairs)
            name = f"ConnectedSum(T(2,{a}),T(2,{b}))"
    return CrossingData(e, 3, name, "exact")


def _mirror_data(d: CrossingData) -> CrossingData:
    if d.name.startswith("T(2,"):
        k = -int(d.name[4:-1])
        return _two_braid(k)
    name = d.name if d.name in ("Unknot", "Unknown") else "mirror " + d.name
    reduced = mirror(d.reduced) if d.reduced is not None else None
    return CrossingData(d.cr, d.braid_index, name, d.status, reduced)


def crossing_number_3braid(w: BraidWord) -> CrossingData:
    """Crossing number, braid index and name of a non-split closed 3-braid.

    A generator met once is removed by destabilisation. A closure conjugate
    to a positive (or negative) word has as many crossings as that word,
    except for the few classes whose closure has braid index below 3.
    Other homogeneous words are reduced alternating diagrams. Anything else
    only gets an upper bound.
    """
    if w.strands != 3:
        raise ValueError("crossing_number_3braid needs a word on 3 strands")
    w = free_reduce(w, cyclic=True)
    if not is_connected(w):
        raise ValueError(f"closure of {w} is split")
    count = {1: 0, 2: 0}
    for e in w.letters:
        count[abs(e)] += 1
    for gen, other in ((1, 2), (2, 1)):
        if count[gen] == 1:
            return _two_braid(sum(1 if e > 0 else -1 for e in w.letters if abs(e) == other))
    positive, homogeneous, e = word_flags(w)
    if conjugate_to_positive(w)[0]:
        return _positive_class(murasugi_class(w), e)
    m = mirror(w)
    if conjugate_to_positive(m)[0]:
        return _mirror_data(_positive_class(murasugi_class(m), -e))
    if homogeneous:
        return CrossingData(len(w), 3, "Unknown", "exact")
    return CrossingData(len(w), None, "Unknown", "upper_bound")


def _block_data(b: BraidWord) -> CrossingData:
    if b.strands == 1:
        return CrossingData(0, 1, "Unknot", "exact", b)
    if b.strands == 2:
        return _two_braid(sum(1 if e > 0 else -1 for e in b.letters))
    if b.strands == 3:
        return crossing_number_3braid(b)
    return CrossingData(len(b), None, "Unknown", "upper_bound")


def link_report(w: BraidWord | ConwayDiagram) -> LinkReport:
    """Identified name and invariants of a braid closure or a Conway diagram."""
    if isinstance(w, ConwayDiagram):
        sig, null = gl_signature(w) if w.family != "generic" or fraction(w)[0] % 2 else gl_signature(w, (False, False))
        num, den = fraction(w)
        name = f"TwoBridge({num}/{den})"
        try:
            cr, status = alternating_crossing_number(w), "exact"
        except ValueError:
            cr, status = len(w.coeffs), "upper_bound"
        return LinkReport("mirror " + name if w.mirrored else name, sig, null, 2 - num % 2, cr, status)
    sig, null = link_signature(w)
    blocks = split_blocks(free_reduce(w, cyclic=True))
    data = [_block_data(b) for b in blocks]
    status = "exact" if all(d.status == "exact" for d in data) else "upper_bound"
    cr = sum(d.cr for d in data)
    if len(data) == 1:
        name, index = data[0].name, data[0].braid_index
    else:
        name = "SplitSum(" + ",".join(d.name for d in data) + ")"
        index = None
    return LinkReport(name, sig, null, closure_components(w), cr, status, index)


def smooth(w: BraidWord, position: int) -> BraidWord:
    """Coherent smoothing of one crossing: delete the letter at ``position``."""
    if not 0 <= position < len(w):
        raise IndexError(f"position {position} outside word of length {len(w)}")
    return BraidWord(w.strands, w.letters[:position] + w.letters[position + 1 :])


# ----------------------------------------------------------------- reports


def _report(claim: str, parameters: dict, checked: int, violations: list, details: dict) -> dict:
    return {
        "claim": claim,
        "parameters": parameters,
        "checked": int(checked),
        "violations": sorted(violations, key=_violation_key),
        "details": details,
    }


def _violation_key(v: dict) -> str:
    return repr(sorted(v.items()))


def _in_shard(key: int, shards: int, shard_index: int) -> bool:
    if not 0 <= shard_index < shards:
        raise ValueError(f"shard index {shard_index} outside 0..{shards - 1}")
    return key % shards == shard_index


def _alphabet(strands: int, positive: bool = False) -> np.ndarray:
    if positive:
        return np.arange(1, strands, dtype=np.int8)
    return np.array([s * i for i in range(1, strands) for s in (1, -1)], dtype=np.int8)


def all_words(strands: int, length: int, positive: bool = False) -> np.ndarray:
    """Every word of the given length as rows of an int8 array."""
    alpha = _alphabet(strands, positive)
    if length == 0:
        return np.zeros((1, 0), dtype=np.int8)
    idx = np.indices((len(alpha),) * length).reshape(length, -1).T
    return alpha[idx]


def _connected_mask(words: np.ndarray, strands: int) -> np.ndarray:
    mask = np.ones(len(words), dtype=bool)
    for col in range(1, strands):
        mask &= (np.abs(words) == col).any(axis=1)
    return mask


def _prefix_key(words: np.ndarray, strands: int) -> np.ndarray:
    """Shard key from the first two letters."""
    base = 2 * (strands - 1) + 1
    key = np.zeros(len(words), dtype=np.int64)
    for k in range(min(2, words.shape[1])):
        col = words[:, k].astype(np.int64)
        digit = np.where(col > 0, 2 * col - 1, -2 * col)
        key = key * base + digit
    return key + words.shape[1]


def _fmt(letters) -> str:
    return " ".join(str(int(e)) for e in letters)


def verify_inequality(
    max_len: int, strands: int, samples: int = 100_000, seed: int = 0, shards: int = 1, shard_index: int = 0
) -> dict:
    """Check ``|sigma| + nullity + strands <= length + 1`` on connected-surface words.

    Exhaustive for ``strands <= 3``; ``samples`` seeded random
    connected-surface words on 4 strands. Every word is checked. Equality
    cases are counted only for closures not certified trivial or split,
    since the statement excludes those.
    """
    if strands not in (2, 3, 4):
        raise ValueError("strands must be 2, 3 or 4")
    violations: list = []
    checked = 0
    equality = 0
    excluded = 0
    equality_words: list[str] = []

    def run(words: np.ndarray, lengths: np.ndarray):
        nonlocal checked, equality, excluded
        sigs, nulls = batch_from_array(words, lengths, strands)
        lhs = np.abs(sigs) + nulls + strands
        for r in np.flatnonzero(lhs > lengths + 1):
            violations.append({"word": _fmt(words[r, : lengths[r]]), "sigma": int(sigs[r]), "nullity": int(nulls[r])})
        checked += len(words)
        for r in np.flatnonzero(lhs == lengths + 1):
            letters = tuple(int(x) for x in words[r, : lengths[r]])
            if _trivial_or_split(BraidWord(strands, letters)):
                excluded += 1
                continue
            equality += 1
            if strands == 2:
                equality_words.append(_fmt(letters))

    if strands <= 3:
        for length in range(1, max_len + 1):
            for words in iter_words(strands, length):
                keep = _connected_mask(words, strands) & _in_shard_mask(words, strands, shards, shard_index)
                if keep.any():
                    run(words[keep], np.full(int(keep.sum()), length, dtype=np.int64))
        mode = "exhaustive"
    else:
        words, lengths = sample_connected_words(strands, max_len, samples, seed)
        keep = _in_shard_mask(words, strands, shards, shard_index)
        run(words[keep], lengths[keep])
        mode = "sampled"
    details = {"mode": mode, "equality_cases": equality, "equality_excluded": excluded}
    if strands == 2:
        details["equality_words"] = sorted(equality_words, key=lambda s: (len(s), s))
    params = {"max_len": max_len, "strands": strands, "samples": samples if strands == 4 else 0, "seed": seed}
    return _report("inequality", params, checked, violations, details)


def _trivial_or_split(w: BraidWord) -> bool:
    blocks = markov_reduce(w)
    return len(blocks) > 1 or blocks[0].strands == 1


def iter_words(strands: int, length: int, positive: bool = False, chunk: int = 8):
    """All words of one length, in lexicographic blocks of at most ``|alphabet|**chunk`` rows."""
    alpha = _alphabet(strands, positive)
    tail = all_words(strands, min(length, chunk), positive)
    head = length - tail.shape[1]
    for prefix in itertools.product(alpha, repeat=head):
        block = np.empty((len(tail), length), dtype=np.int8)
        block[:, :head] = prefix
        block[:, head:] = tail
        yield block


def sample_connected_words(strands: int, max_len: int, samples: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """``samples`` seeded words with connected canonical surface, zero padded."""
    if max_len < strands - 1:
        raise ValueError("words this short cannot have a connected surface")
    rng = np.random.default_rng(seed)
    alpha = _alphabet(strands)
    got_w, got_l = [], []
    total = 0
    while total < samples:
        lengths = rng.integers(strands - 1, max_len + 1, size=samples)
        words = alpha[rng.integers(0, len(alpha), size=(samples, max_len))]
        words[np.arange(max_len)[None, :] >= lengths[:, None]] = 0
        keep = _connected_mask(words, strands)
        got_w.append(words[keep])
        got_l.append(lengths[keep].astype(np.int64))
        total += int(keep.sum())
    return np.concatenate(got_w)[:samples], np.concatenate(got_l)[:samples]


def _in_shard_mask(words: np.ndarray, strands: int, shards: int, shard_index: int) -> np.ndarray:
    if not 0 <= shard_index < shards:
        raise ValueError(f"shard index {shard_index} outside 0..{shards - 1}")
    if shards == 1:
        return np.ones(len(words), dtype=bool)
    return _prefix_key(words, strands) % shards == shard_index


def verify_smoothing_lemma(
    max_len: int = 8, samples: int = 2000, seed: int = 0, strands: int = 3, shards: int = 1, shard_index: int = 0
) -> dict:
    """``|sigma(w) - sigma(w')| <= c`` when ``w'`` drops ``c`` letters of ``w``.

    Every single deletion of every word up to ``max_len`` is checked
    exhaustively; ``samples`` seeded words then check deletions of 2 and 3
    letters at once.
    """
    violations: list = []
    checked = 0
    for length, words in ((n, b) for n in range(1, max_len + 1) for b in iter_words(strands, n)):
        words = words[_in_shard_mask(words, strands, shards, shard_index)]
        if not len(words):
            continue
        lengths = np.full(len(words), length, dtype=np.int64)
        base, _ = batch_from_array(words, lengths, strands)
        dels, oks = batch_deletion_signature(words, lengths, strands)
        for r in np.flatnonzero(~oks):
            w = BraidWord(strands, tuple(int(x) for x in words[r]))
            for pos in range(length):
                dels[r, pos] = link_signature(smooth(w, pos))[0]
        diff = np.abs(dels[:, :length] - base[:, None])
        for r, pos in zip(*np.nonzero(diff > 1)):
            violations.append({"word": _fmt(words[r]), "position": int(pos), "c": 1})
        checked += diff.size
    rng = np.random.default_rng(seed)
    alpha = _alphabet(strands)
    multi = 0
    for k in range(samples):
        length = int(rng.integers(4, max(max_len, 4) + 1))
        if not _in_shard(k, shards, shard_index):
            rng.integers(0, len(alpha), size=length)
            rng.permutation(length)
            continue
        letters = tuple(int(x) for x in alpha[rng.integers(0, len(alpha), size=length)])
        order = rng.permutation(length)
        w = BraidWord(strands, letters)
        sig = link_signature(w)[0]
        for c in (2, 3):
            drop = set(int(x) for x in order[:c])
            smaller = BraidWord(strands, tuple(e for i, e in enumerate(letters) if i not in drop))
            multi += 1
            if abs(link_signature(smaller)[0] - sig) > c:
                violations.append({"word": _fmt(letters), "positions": sorted(drop), "c": c})
    chain = [link_signature(BraidWord(2, (1,) * c))[0] for c in range(1, 13)]
    details = {
        "single_deletions": checked,
        "multi_deletions": multi,
        "t2c_chain_sigma": chain,
    }
    params = {"max_len": max_len, "samples": samples, "seed": seed, "strands": strands}
    return _report("smoothing", params, checked + multi, violations, details)


def positive_necklaces(max_len: int, shards: int = 1, shard_index: int = 0) -> list[tuple[int, ...]]:
    """Connected positive 3-braid words up to rotation and the 1<->2 swap."""
    out = []
    for length in range(2, max_len + 1):
        for bits in itertools.product((1, 2), repeat=length):
            if 1 not in bits or 2 not in bits:
                continue
            swapped = tuple(3 - e for e in bits)
            forms = [bits[i:] + bits[:i] for i in range(length)]
            forms += [swapped[i:] + swapped[:i] for i in range(length)]
            if bits == min(forms):
                out.append(bits)
    return [w for k, w in enumerate(out) if _in_shard(k, shards, shard_index)]


def _listed_forms(e: int) -> list[tuple[str, BraidWord]]:
    """Representatives of the listed sigma = 2 - cr links with exponent sum ``e``."""
    d2 = (1, 2, 1, 1, 2, 1)
    forms = []
    fixed = {6: ("(i) T(3,3)", d2), 8: ("(ii) T(3,4)", d2 + (1, 2)), 10: ("(iii) T(3,5)", d2 + (1, 2, 1, 2)),
             9: ("(iv) DeltaCubed", d2 + (1, 2, 1))}
    if e in fixed:
        label, letters = fixed[e]
        forms.append((label, BraidWord(3, letters)))
    if e >= 7:
        forms.append((f"(v) q={e - 6}", BraidWord(3, d2 + (2,) * (e - 6))))
    for q1 in range(2, e // 2 + 1):
        forms.append((f"(vi) q1={q1},q2={e - q1}", BraidWord(3, (1,) * q1 + (2,) * (e - q1))))
    return forms


def _listed_values(max_crossings: int) -> dict[str, tuple[int, int]]:
    """Label -> (cr, sigma) as stated for each member of the list."""
    out = {}
    for c, label in ((6, "(i) T(3,3)"), (8, "(ii) T(3,4)"), (10, "(iii) T(3,5)"), (9, "(iv) DeltaCubed")):
        if c <= max_crossings:
            out[label] = (c, 2 - c)
    for q in range(1, max_crossings - 5):
        out[f"(v) q={q}"] = (q + 6, -q - 4)
    for q1 in range(2, max_crossings // 2 + 1):
        for q2 in range(q1, max_crossings - q1 + 1):
            out[f"(vi) q1={q1},q2={q2}"] = (q1 + q2, 2 - q1 - q2)
    return out


def _signatures(words: list[tuple[int, ...]], strands: int) -> np.ndarray:
    if not words:
        return np.zeros(0, dtype=np.int64)
    width = max(len(w) for w in words)
    arr = np.zeros((len(words), width), dtype=np.int8)
    lengths = np.zeros(len(words), dtype=np.int64)
    for r, w in enumerate(words):
        arr[r, : len(w)] = w
        lengths[r] = len(w)
    return batch_from_array(arr, lengths, strands)[0]


def verify_main_theorem(max_crossings: int = 12, shards: int = 1, shard_index: int = 0) -> dict:
    """Closures with ``sigma = 2 - cr`` among positive 3-braids are exactly the listed links."""
    words = positive_necklaces(max_crossings, shards, shard_index)
    sigs = _signatures(words, 3)
    found: dict[str, list[str]] = {}
    violations: list = []
    for letters, sig in zip(words, sigs):
        w = BraidWord(3, letters)
        data = crossing_number_3braid(w)
        if sig != 2 - data.cr:
            continue
        label = next((lab for lab, f in _listed_forms(len(letters)) if conjugacy_test(w, f)), None)
        if label is None:
            violations.append({"kind": "extra", "word": _fmt(letters), "cr": data.cr, "sigma": int(sig)})
        else:
            found.setdefault(label, []).append(_fmt(letters))
    raw = _report("main", {"max_crossings": max_crossings}, len(words), violations, {"found": found})
    return _finish_main(raw) if shards == 1 else raw


def _finish_main(raw: dict) -> dict:
    expected = _listed_values(raw["parameters"]["max_crossings"])
    found = raw["details"]["found"]
    violations = list(raw["violations"])
    values = {}
    for label, (cr, sig) in expected.items():
        if label not in found:
            violations.append({"kind": "missing", "label": label})
        rep = _representative(label)
        got = (crossing_number_3braid(rep).cr, link_signature(rep)[0])
        values[label] = {"cr": got[0], "sigma": got[1]}
        if got != (cr, sig):
            violations.append({"kind": "value", "label": label, "expected": [cr, sig], "got": list(got)})
    for label in found:
        if label not in expected:
            violations.append({"kind": "unexpected-label", "label": label})
    details = {"found": {k: sorted(v) for k, v in sorted(found.items())}, "values": values}
    return _report("main", raw["parameters"], raw["checked"], violations, details)


def _representative(label: str) -> BraidWord:
    for e in range(4, 64):
        for lab, w in _listed_forms(e):
            if lab == label:
                return w
    raise KeyError(label)


def _homogeneous_mixed(max_len: int) -> list[tuple[int, ...]]:
    """Connected words with positive s1 and negative s2, up to rotation."""
    out = []
    for length in range(2, max_len + 1):
        for bits in itertools.product((1, -2), repeat=length):
            if 1 not in bits or -2 not in bits:
                continue
            if bits == min(bits[i:] + bits[:i] for i in range(length)):
                out.append(bits)
    return out


def verify_t2c_theorem(max_crossings: int = 12, shards: int = 1, shard_index: int = 0) -> dict:
    """Closures with ``sigma = 1 - cr`` are exactly the torus links T(2,c).

    Covers ``s1^c`` on two strands and the homogeneous 3-braids with s1
    positive; the remaining sign patterns are mirrors or swaps of these.
    """
    pool = [(2, (1,) * c) for c in range(1, max_crossings + 1)]
    pool += [(3, w) for w in positive_necklaces(max_crossings)]
    pool += [(3, w) for w in _homogeneous_mixed(max_crossings)]
    pool = [item for k, item in enumerate(pool) if _in_shard(k, shards, shard_index)]
    violations: list = []
    found: dict[str, int] = {}
    for strands, letters in pool:
        w = BraidWord(strands, letters)
        sig = link_signature(w)[0]
        data = crossing_number_3braid(w) if strands == 3 else _two_braid(len(letters))
        passes = data.cr >= 1 and sig == 1 - data.cr
        named = data.name == f"T(2,{data.cr})"
        if passes != named:
            violations.append({"word": _fmt(letters), "strands": strands, "cr": data.cr, "sigma": sig, "name": data.name})
            continue
        if not passes:
            continue
        ok = _destabilises_to_t2c(w, data.cr)
        if not ok:
            violations.append({"word": _fmt(letters), "strands": strands, "reason": "not conjugate to s1^c"})
        found[data.name] = found.get(data.name, 0) + 1
    chain = {c: link_signature(BraidWord(2, (1,) * c))[0] for c in range(2, max_crossings + 1)}
    for c, sig in chain.items():
        if sig != 1 - c:
            violations.append({"word": _fmt((1,) * c), "strands": 2, "sigma": sig, "expected": 1 - c})
    details = {"found": dict(sorted(found.items(), key=lambda kv: int(kv[0][4:-1]))), "t2c_sigma": chain}
    return _report("t2c", {"max_crossings": max_crossings}, len(pool), violations, details)


def _destabilises_to_t2c(w: BraidWord, c: int) -> bool:
    if w.strands == 2:
        return free_reduce(w, cyclic=True).letters == (1,) * c
    r = free_reduce(w, cyclic=True)
    for gen, other in ((1, 2), (2, 1)):
        if sum(1 for e in r.letters if abs(e) == gen) == 1:
            return sum(1 if e > 0 else -1 for e in r.letters if abs(e) == other) == c
    return conjugacy_test(w, BraidWord(3, (1,) * c + (2,)))


def merge_reports(reports: list[dict]) -> dict:
    """Combine shard reports of one claim into the report of the full run."""
    if not reports:
        raise ValueError("nothing to merge")
    claim = reports[0]["claim"]
    if any(r["claim"] != claim for r in reports):
        raise ValueError("reports are for different claims")
    checked = sum(r["checked"] for r in reports)
    violations = [v for r in reports for v in r["violations"]]
    params = reports[0]["parameters"]
    if claim == "main":
        found: dict[str, list[str]] = {}
        for r in reports:
            for k, v in r["details"]["found"].items():
                found.setdefault(k, []).extend(v)
        return _finish_main(_report(claim, params, checked, violations, {"found": found}))
    details = _merge_details([r["details"] for r in reports])
    return _report(claim, params, checked, violations, details)


def _merge_details(items: list[dict]) -> dict:
    out: dict = {}
    for d in items:
        for k, v in d.items():
            if k not in out:
                out[k] = v
            elif isinstance(v, bool) or isinstance(v, str):
                continue
            elif isinstance(v, int):
                out[k] += v
            elif isinstance(v, list) and k.endswith("_words"):
                out[k] = sorted(set(out[k]) | set(v), key=lambda s: (len(s), s))
            elif isinstance(v, dict) and k == "found":
                out[k] = {n: out[k].get(n, 0) + v.get(n, 0) for n in sorted(set(out[k]) | set(v))}
    return out


# ------------------------------------------------------- family formulas


def family_grid(n_range=range(-2, 3), k_range=range(1, 4), max_pairs: int = 2) -> list[MurasugiClass]:
    """Every family member with parameters in the given ranges."""
    out = []
    for n in n_range:
        out += [MurasugiClass(f, n) for f in (0, 1, 2, 3)]
        out += [MurasugiClass(4, n, p=k) for k in k_range]
        out += [MurasugiClass(5, n, q=k) for k in k_range]
        for r in range(1, max_pairs + 1):
            for flat in itertools.product(k_range, repeat=2 * r):
                out.append(MurasugiClass(6, n, pairs=tuple(zip(flat[::2], flat[1::2]))))
    return out


def verify_signature_formula(shards: int = 1, shard_index: int = 0) -> dict:
    """Closed-form family signatures against Seifert-matrix signatures, and classification round trips."""
    violations: list = []
    grid = [c for k, c in enumerate(family_grid()) if _in_shard(k, shards, shard_index)]
    round_trip = 0
    for cls in grid:
        w = cls.word()
        sig = link_signature(w)[0]
        if sig != murasugi_erle_sigma(cls):
            violations.append({"class": str(cls), "seifert": sig, "formula": murasugi_erle_sigma(cls)})
        back = murasugi_class(w)
        if back == cls:
            round_trip += 1
        else:
            violations.append({"class": str(cls), "classified_as": str(back)})
    return _report("signature-formula", {"n": [-2, 2], "k": [1, 3], "pairs": [1, 2]}, len(grid), violations,
                   {"round_trips": round_trip})


def verify_positivity(shards: int = 1, shard_index: int = 0) -> dict:
    """Conjugate-to-positive decisions against the closed-form predicates."""
    violations: list = []
    grid = [c for k, c in enumerate(family_grid()) if _in_shard(k, shards, shard_index)]
    positive = boundary = 0
    for cls in grid:
        w = cls.word()
        answer, witness = conjugate_to_positive(w)
        if answer != positive_predicate(cls):
            violations.append({"class": str(cls), "decided": answer, "predicate": positive_predicate(cls)})
            continue
        if cls.family in (4, 6) and 2 * cls.n == (cls.p if cls.family == 4 else cls.p_total):
            boundary += 1
        if answer:
            positive += 1
            if witness is None or any(e < 0 for e in witness.letters) or not conjugacy_test(witness, w):
                violations.append({"class": str(cls), "witness": str(witness)})
    details = {"positive": positive, "boundary_cases": boundary}
    return _report("positivity", {"n": [-2, 2], "k": [1, 3], "pairs": [1, 2]}, len(grid), violations, details)


def verify_two_bridge(max_param: int = 4) -> dict:
    """Family formulas against the Goeritz signature and the reduced alternating crossing count."""
    from .twobridge import components, conway_pd, family_invariants, from_family

    violations: list = []
    checked = 0
    rng = range(1, max_param + 1)
    for family in ("pqr", "pq2r", "5p"):
        arity = 4 if family == "5p" else 3
        for params in itertools.product(rng, repeat=arity):
            d = from_family(family, *params)
            p, q, r = params[:3]
            stated = {
                "pqr": (p + 2 * q + r, 1 - p - r),
                "pq2r": (p + 2 * (q + r) - 1, 1 - p),
                "5p": (2 * sum(params) - 1, 0),
            }[family]
            knot = {"pqr": (p + r) % 2 == 1, "pq2r": p % 2 == 1, "5p": True}[family]
            got = (alternating_crossing_number(d), gl_signature(d)[0])
            checked += 1
            entry = {"diagram": str(d), "stated": list(stated)}
            if family_invariants(d) != stated or got != stated:
                violations.append({**entry, "closed_form": list(family_invariants(d)), "computed": list(got)})
            if (components(d) == 1) != knot or conway_pd(d).num_components() != components(d):
                violations.append({**entry, "components": components(d)})
    return _report("two-bridge", {"max_param": max_param}, checked, violations, {})


# --------------------------------------------------------------- geography


def _witness_text(w) -> str:
    if isinstance(w, ConwayDiagram):
        return str(w)
    return f"{w.name} [{w.word}]"


def _check_witness(w) -> tuple[int | None, int]:
    """Independently recomputed (crossing number, signature)."""
    if isinstance(w, ConwayDiagram):
        return alternating_crossing_number(w), gl_signature(w)[0]
    rep = link_report(w.word)
    return (rep.crossing_number if rep.status == "exact" else None), rep.sigma


def _source(c: int, d: int) -> str:
    if abs(d) == c - 1:
        return "torus"
    if abs(d) == c - 2:
        return "positive-3-braid"
    return "two-bridge"


def geography_table(max_c: int = 12) -> dict:
    """Which (crossing number, signature) pairs are realised, with re-checked witnesses."""
    cells = []
    violations: list = []
    for c in range(1, max_c + 1):
        for d in range(1 - c, c):
            w = geography_realizer(c, d)
            row = {"c": c, "d": d, "realizable": w is not None, "witness": _witness_text(w) if w else ""}
            if w is not None:
                cr, sig = _check_witness(w)
                row["source"] = _source(c, d)
                row["verified"] = cr == c and sig == d
                if not row["verified"]:
                    violations.append({"c": c, "d": d, "witness": row["witness"], "cr": cr, "sigma": sig})
            if (w is None) != ((c, d) in EXCEPTIONS):
                violations.append({"c": c, "d": d, "reason": "realizability differs from the exception list"})
            cells.append(row)
    realized = {(r["c"], r["d"]) for r in cells if r["realizable"]} | {(0, 0)}
    split = []
    for c, d in sorted(EXCEPTIONS):
        if c > max_c:
            continue
        parts = [
            [list(a), list(b)]
            for a in realized
            for b in realized
            if a <= b and a[0] + b[0] == c and a[1] + b[1] == d and a[0] > 0 and b[0] > 0
        ]
        split.append({"c": c, "d": d, "split_sums": parts})
        if parts:
            violations.append({"c": c, "d": d, "reason": "split sum realises an exception"})
    details = {"cells": cells, "split_sums_at_exceptions": split}
    return _report("geography", {"max_c": max_c}, len(cells), violations, details)


def geography_csv(table: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["c", "d", "realizable", "witness"])
    for row in table["details"]["cells"]:
        writer.writerow([row["c"], row["d"], str(row["realizable"]).lower(), row["witness"]])
    return buf.getvalue()


# --------------------------------------------------------------- smoothing


def t2c_smoothing_candidates(c: int) -> dict:
    """Links reachable from T(2,c) by one smoothing, each realised on a concrete diagram.

    T(2,c-1) comes from deleting a letter of ``s1^c``. For ``c1 + c2 = c``
    the word ``s1 s2 s1^(c1-1) s2^c2`` is conjugate to ``s1^c s2``, so it
    also closes to T(2,c); deleting its first ``s2`` leaves
    ``s1^c1 s2^c2``, whose closure is T(2,c1) # T(2,c2).
    """
    if c <= 1:
        raise ValueError("c must be at least 2")
    out = []
    base = BraidWord(2, (1,) * c)
    res = smooth(base, 0)
    rep = link_report(res)
    out.append(_candidate(f"T(2,{c - 1})" if c > 2 else "Unknot", base, 0, res, rep, (1 - (c - 1)) if c > 2 else 0))
    for c1 in range(2, c // 2 + 1):
        c2 = c - c1
        word = BraidWord(3, (1, 2) + (1,) * (c1 - 1) + (2,) * c2)
        start_ok = conjugacy_test(word, BraidWord(3, (1,) * c + (2,)))
        res = smooth(word, 1)
        rep = link_report(res)
        name = f"ConnectedSum(T(2,{c1}),T(2,{c2}))"
        cand = _candidate(name, word, 1, res, rep, 2 - c)
        cand["diagram_is_t2c"] = start_ok
        cand["realized"] = cand["realized"] and start_ok
        out.append(cand)
    return {"c": c, "candidates": out}


def _candidate(name: str, word: BraidWord, pos: int, res: BraidWord, rep: LinkReport, sigma: int) -> dict:
    return {
        "name": name,
        "from_word": str(word),
        "position": pos,
        "result_word": str(res),
        "sigma": rep.sigma,
        "crossing_number": rep.crossing_number,
        "identified_as": rep.name,
        "realized": rep.name == name and rep.sigma == sigma,
    }


def verify_smoothing_candidates(max_c: int = 12) -> dict:
    """Every candidate for ``2 <= c <= max_c`` is realised by a letter deletion."""
    lists = [t2c_smoothing_candidates(c) for c in range(2, max_c + 1)]
    bad = [x for item in lists for x in item["candidates"] if not x["realized"]]
    checked = sum(len(item["candidates"]) for item in lists)
    return _report("candidates", {"max_c": max_c}, checked, bad, {"lists": lists})
