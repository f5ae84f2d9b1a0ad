"""Garside machinery for the 3-strand braid group.

Elements are written ``Delta^r P_1 ... P_k`` with each ``P_i`` one of the
permutation braids ``a = s1``, ``b = s2``, ``ab = s1 s2``, ``ba = s2 s1``.
Equality, conjugacy and the Murasugi classification are all decided through
this left-canonical form; no matrix representation is involved.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .braid import BraidWord, exponent_sum

# permutation braids, indexed
E, A, B, AB, BA, D = range(6)

NAMES = ("e", "a", "b", "ab", "ba", "D")
SIMPLE_WORDS = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1))
START = (frozenset(), frozenset({1}), frozenset({2}), frozenset({1}), frozenset({2}), frozenset({1, 2}))
FINISH = (frozenset(), frozenset({1}), frozenset({2}), frozenset({2}), frozenset({1}), frozenset({1, 2}))
TAU = (E, B, A, BA, AB, D)
# RIGHT_MUL[x][i] = x * s_i when that is again a permutation braid
RIGHT_MUL = ({1: A, 2: B}, {2: AB}, {1: BA}, {1: D}, {2: D}, {})
# LEFT_DIV[y][i] = s_i^-1 * y for i in START[y]
LEFT_DIV = ({}, {1: E}, {2: E}, {1: B}, {2: A}, {1: BA, 2: AB})
# Delta * s_i^-1
DELTA_OVER = {1: AB, 2: BA}

SUMMIT_CAP = 10**6


class StrandCountError(ValueError):
    pass


class SummitSetOverflow(RuntimeError):
    pass


def _need3(w: BraidWord) -> None:
    if w.strands != 3:
        raise StrandCountError(f"B_3 operation applied to a word on {w.strands} strands")


@dataclass(frozen=True)
class GarsideNormalForm:
    delta_power: int
    factors: tuple[int, ...] = ()

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def word(self) -> BraidWord:
        unit = (1, 2, 1) if self.delta_power >= 0 else (-1, -2, -1)
        letters = list(unit * abs(self.delta_power))
        for f in self.factors:
            letters.extend(SIMPLE_WORDS[f])
        return BraidWord(3, tuple(letters))

    def __str__(self) -> str:
        return f"D^{self.delta_power} | {'.'.join(NAMES[f] for f in self.factors)}".rstrip()


def tau(w: BraidWord) -> BraidWord:
    _need3(w)
    return BraidWord(3, tuple(3 * (1 if e > 0 else -1) - e for e in w.letters))


def _tau_power(x: int, r: int) -> int:
    return TAU[x] if r % 2 else x


def _normalize(r: int, factors: list[int]) -> GarsideNormalForm:
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            x, y = factors[i], factors[i + 1]
            moved = False
            while True:
                free = START[y] - FINISH[x]
                if not free:
                    break
                g = min(free)
                x, y = RIGHT_MUL[x][g], LEFT_DIV[y][g]
                moved = True
            if moved:
                factors[i], factors[i + 1] = x, y
                changed = True
    lead = 0
    while lead < len(factors) and factors[lead] == D:
        lead += 1
    end = len(factors)
    while end > lead and factors[end - 1] == E:
        end -= 1
    return GarsideNormalForm(r + lead, tuple(factors[lead:end]))


def _from_letters(letters) -> GarsideNormalForm:
    r = 0
    factors: list[int] = []
    flipped = False  # factors stored untwisted; apply TAU lazily
    for e in letters:
        if e > 0:
            factors.append(TAU[e] if flipped else e)
        else:
            # Delta^r P s^-1 = Delta^(r-1) tau(P) (Delta s^-1)
            r -= 1
            flipped = not flipped
            x = DELTA_OVER[-e]
            factors.append(TAU[x] if flipped else x)
    if flipped:
        factors = [TAU[f] for f in factors]
    return _normalize(r, factors)


def left_canonical_form(w: BraidWord) -> GarsideNormalForm:
    _need3(w)
    return _from_letters(w.letters)


def normal_form_of(nf_or_word) -> GarsideNormalForm:
    if isinstance(nf_or_word, GarsideNormalForm):
        return nf_or_word
    return left_canonical_form(nf_or_word)


def equal(a: BraidWord, b: BraidWord) -> bool:
    """Equality in B_3 (the word problem)."""
    return left_canonical_form(a) == left_canonical_form(b)


def inf_sup(w: BraidWord) -> tuple[int, int]:
    nf = left_canonical_form(w)
    return nf.inf, nf.sup


def _cycle(nf: GarsideNormalForm) -> GarsideNormalForm:
    first, rest = nf.factors[0], list(nf.factors[1:])
    return _normalize(nf.delta_power, rest + [_tau_power(first, nf.delta_power)])


def _decycle(nf: GarsideNormalForm) -> GarsideNormalForm:
    # conjugating by P_k^-1 moves the last factor to the front, past Delta^r
    last, rest = nf.factors[-1], list(nf.factors[:-1])
    return _normalize(nf.delta_power, [_tau_power(last, nf.delta_power)] + rest)


def cycling(w: BraidWord) -> BraidWord:
    nf = left_canonical_form(w)
    if not nf.factors:
        raise ValueError("delta power, cycling undefined")
    return _cycle(nf).word()


def decycling(w: BraidWord) -> BraidWord:
    """Sup-reducing dual of cycling; used by the conjugacy test."""
    nf = left_canonical_form(w)
    if not nf.factors:
        raise ValueError("delta power, decycling undefined")
    return _decycle(nf).word()


def _max_inf(nf: GarsideNormalForm) -> GarsideNormalForm:
    best = nf
    seen = {nf}
    cur = nf
    while cur.factors:
        cur = _cycle(cur)
        if cur.inf > best.inf:
            best = cur
            seen = {cur}
        elif cur in seen:
            break
        else:
            seen.add(cur)
    return best


def _min_sup(nf: GarsideNormalForm) -> GarsideNormalForm:
    best = nf
    seen = {nf}
    cur = nf
    while cur.factors:
        cur = _decycle(cur)
        if cur.sup < best.sup:
            best = cur
            seen = {cur}
        elif cur in seen:
            break
        else:
            seen.add(cur)
    return best


def summit_inf(w: BraidWord) -> tuple[int, BraidWord]:
    """Maximal inf over the conjugacy class and a conjugate attaining it."""
    best = _max_inf(left_canonical_form(w))
    return best.inf, best.word()


def summit_element(w) -> GarsideNormalForm:
    """A member of the super summit set (maximal inf, then minimal sup)."""
    return _min_sup(_max_inf(normal_form_of(w)))


def _conjugate_nf(nf: GarsideNormalForm, s: int) -> GarsideNormalForm:
    word = SIMPLE_WORDS[s]
    letters = tuple(-e for e in reversed(word)) + nf.word().letters + word
    return _from_letters(letters)


@lru_cache(maxsize=4096)
def _super_summit_set(start: GarsideNormalForm) -> frozenset:
    inf, sup = start.inf, start.sup
    found = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for s in (A, B, AB, BA, D):
            y = _conjugate_nf(x, s)
            if y.inf == inf and y.sup == sup and y not in found:
                found.add(y)
                if len(found) > SUMMIT_CAP:
                    raise SummitSetOverflow("super summit set exceeded the exploration cap")
                queue.append(y)
    return frozenset(found)


def super_summit_set(w: BraidWord) -> frozenset:
    _need3(w)
    return _super_summit_set(summit_element(w))


def conjugacy_test(a: BraidWord, b: BraidWord) -> bool:
    _need3(a)
    _need3(b)
    if exponent_sum(a) != exponent_sum(b):
        return False
    sa = summit_element(a)
    sb = summit_element(b)
    if (sa.inf, sa.sup) != (sb.inf, sb.sup):
        return False
    return sb in _super_summit_set(sa)


def conjugate_to_positive(w: BraidWord) -> tuple[bool, BraidWord | None]:
    _need3(w)
    best = _max_inf(left_canonical_form(w))
    if best.inf >= 0:
        return True, best.word()
    return False, None


@dataclass(frozen=True)
class MurasugiClass:
    """One of Murasugi's seven conjugacy families of 3-braids.

    ``n`` is the Delta^2 exponent; ``p`` belongs to family 4, ``q`` to
    family 5 and ``pairs`` (p_i, q_i) to family 6.
    """

    family: int
    n: int
    p: int | None = None
    q: int | None = None
    pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        need = {4: "p", 5: "q"}.get(self.family)
        if self.family not in range(7):
            raise ValueError("family must be 0..6")
        if need == "p" and (self.p is None or self.p < 1):
            raise ValueError("family 4 needs p >= 1")
        if need == "q" and (self.q is None or self.q < 1):
            raise ValueError("family 5 needs q >= 1")
        if self.family == 6:
            if not self.pairs or any(pi < 1 or qi < 1 for pi, qi in self.pairs):
                raise ValueError("family 6 needs positive pairs")
            object.__setattr__(self, "pairs", _min_rotation(tuple(self.pairs)))

    def word(self) -> BraidWord:
        """The family's representative braid word."""
        n = self.n
        if self.family == 3:
            body: list[int] = []
            delta = 2 * n + 1
        else:
            delta = 2 * n
            body = {
                0: [],
                1: [1, 2],
                2: [1, 2, 1, 2],
                4: [-1] * (self.p or 0),
                5: [2] * (self.q or 0),
            }.get(self.family, [])
            if self.family == 6:
                for pi, qi in self.pairs:
                    body += [-1] * pi + [2] * qi
        unit = [1, 2, 1] if delta >= 0 else [-1, -2, -1]
        return BraidWord(3, tuple(unit * abs(delta) + body))

    @property
    def p_total(self) -> int:
        return sum(pi for pi, _ in self.pairs)

    def __str__(self) -> str:
        extra = {4: f", p={self.p}", 5: f", q={self.q}", 6: f", pairs={list(self.pairs)}"}
        return f"Omega_{self.family}(n={self.n}{extra.get(self.family, '')})"


def _min_rotation(pairs: tuple) -> tuple:
    return min(pairs[i:] + pairs[:i] for i in range(len(pairs)))


def _compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _omega6_candidates(n: int, p: int, q: int):
    for r in range(1, min(p, q) + 1):
        seen = set()
        for ps in _compositions(p, r):
            for qs in _compositions(q, r):
                pairs = _min_rotation(tuple(zip(ps, qs)))
                if pairs not in seen:
                    seen.add(pairs)
                    yield MurasugiClass(6, n, pairs=pairs)


def _candidates(inf: int, sup: int, e: int):
    if inf == sup:
        if inf % 2 == 0 and e == 3 * inf:
            yield MurasugiClass(0, inf // 2)
        if inf % 2 == 1 and e == 3 * inf:
            yield MurasugiClass(3, (inf - 1) // 2)
        return
    if sup == inf + 1 and inf % 2 == 0 and e == 3 * inf + 2:
        yield MurasugiClass(1, inf // 2)
    if sup == inf + 1 and inf % 2 == 1 and e == 3 * inf + 1:
        yield MurasugiClass(2, (inf - 1) // 2)
    if inf % 2 == 0 and e == 3 * inf + (sup - inf):
        yield MurasugiClass(5, inf // 2, q=sup - inf)
    if sup % 2 == 0 and e == 3 * sup - (sup - inf):
        yield MurasugiClass(4, sup // 2, p=sup - inf)
    if (e - inf - sup) % 2 == 0:
        n = (e - inf - sup) // 2
        p, q = 2 * n - inf, sup - 2 * n
        if p >= 1 and q >= 1:
            yield from _omega6_candidates(n, p, q)


class ClassificationError(RuntimeError):
    """No Murasugi family matched; this indicates a bug, never bad input."""


def murasugi_class(w: BraidWord) -> MurasugiClass:
    _need3(w)
    top = summit_element(w)
    sss = _super_summit_set(top)
    e = exponent_sum(w)
    for cls in _candidates(top.inf, top.sup, e):
        if summit_element(cls.word()) in sss:
            return cls
    raise ClassificationError(f"no Murasugi family found for {w} (inf={top.inf}, sup={top.sup}, e={e})")
