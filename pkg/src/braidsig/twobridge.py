"""Oriented 2-bridge links from Conway notation.

``C(a1, ..., am)`` is drawn as the plat closure of the 4-braid
``s2^a1 s1^-a2 s2^a3 ...`` (caps join strands 1-2 and 3-4 at both ends).
The diagram is alternating, and reduced when every coefficient is positive.
Its chirality matches the braid convention, so ``C(c)`` is the closure of
``s1^c`` and ``C(3)`` has signature -2.

A 2-component link needs an orientation. The tagged families use one fixed
rule: the two strands of the first twist region run parallel, both upward
through its first crossing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, mirror
from .diagram import PlanarDiagram, gordon_litherland, letter_crossing, upward_slots

FAMILIES = ("pqr", "pq2r", "5p", "generic")
ALIASES = {"C_pqr": "pqr", "C_pq2r": "pq2r", "C_5param": "5p"}


class ConwayError(ValueError):
    """Malformed Conway text or coefficients that do not fit the family."""

    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        self.token = token
        self.position = position
        if token is not None:
            message = f"{message}: token {token!r} at position {position}"
        super().__init__(message)


@dataclass(frozen=True)
class ConwayDiagram:
    coeffs: tuple[int, ...]
    family: str = "generic"
    mirrored: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        object.__setattr__(self, "family", ALIASES.get(self.family, self.family))
        if not self.coeffs:
            raise ConwayError("empty coefficient list")
        if any(a < 1 for a in self.coeffs):
            raise ConwayError(f"coefficients must be positive, got {self.coeffs}")
        if self.family not in FAMILIES:
            raise ConwayError(f"unknown family {self.family!r}")
        if self.family != "generic" and not _fits(self.family, self.coeffs):
            raise ConwayError(f"C{self.coeffs} does not have the shape of family {self.family}")

    def __str__(self) -> str:
        body = "C(" + ",".join(str(a) for a in self.coeffs) + ")"
        if self.family != "generic":
            body += "@" + self.family
        return "mirror " + body if self.mirrored else body

    def params(self) -> tuple[int, ...]:
        """Family parameters: (p, q, r) or (p, q, r, s)."""
        a = self.coeffs
        if self.family == "pqr":
            return a[0], a[1] // 2, a[2]
        if self.family == "pq2r":
            return a[0], (a[1] + 1) // 2, a[2] // 2
        if self.family == "5p":
            return a[0] // 2, (a[1] + 1) // 2, (a[3] + 1) // 2, a[4] // 2
        raise ConwayError("generic diagrams have no family parameters")

    def mirror(self) -> ConwayDiagram:
        return ConwayDiagram(self.coeffs, self.family, not self.mirrored)


def _fits(family: str, a: tuple[int, ...]) -> bool:
    if family in ("pqr", "pq2r"):
        if len(a) != 3:
            return False
        return a[1] % 2 == 0 if family == "pqr" else (a[1] % 2 == 1 and a[2] % 2 == 0)
    return (
        len(a) == 5
        and a[0] % 2 == 0
        and a[1] % 2 == 1
        and a[2] == 1
        and a[3] % 2 == 1
        and a[4] % 2 == 0
    )


def from_family(family: str, p: int, q: int, r: int, s: int | None = None) -> ConwayDiagram:
    if family == "pqr":
        return ConwayDiagram((p, 2 * q, r), "pqr")
    if family == "pq2r":
        return ConwayDiagram((p, 2 * q - 1, 2 * r), "pq2r")
    if family == "5p":
        if s is None:
            raise ConwayError("family 5p takes four parameters")
        return ConwayDiagram((2 * p, 2 * q - 1, 1, 2 * r - 1, 2 * s), "5p")
    raise ConwayError(f"no parametrised family {family!r}")


_CONWAY = re.compile(r"^\s*C\s*\((.*)\)\s*(?:@\s*(\w+))?\s*$")


def parse_conway(text: str) -> ConwayDiagram:
    """Parse ``"C(a1,a2,...)"`` with an optional ``@pqr``, ``@pq2r`` or ``@5p`` suffix.

    ``@C_pqr``, ``@C_pq2r`` and ``@C_5param`` are accepted as long names.
    """
    m = _CONWAY.match(text)
    if not m:
        raise ConwayError("expected C(a1,a2,...)", text.strip(), 0)
    coeffs = []
    for pos, tok in enumerate(m.group(1).split(",")):
        try:
            a = int(tok)
        except ValueError:
            raise ConwayError("not an integer", tok.strip(), pos) from None
        if a < 1:
            raise ConwayError("coefficient must be positive", tok.strip(), pos)
        coeffs.append(a)
    family = ALIASES.get(m.group(2), m.group(2)) or "generic"
    if family not in FAMILIES:
        raise ConwayError("unknown family", "@" + family, len(coeffs))
    return ConwayDiagram(tuple(coeffs), family)


def fraction(d: ConwayDiagram) -> tuple[int, int]:
    """``a1 + 1/(a2 + 1/(...))`` in lowest terms."""
    x = Fraction(d.coeffs[-1])
    for a in reversed(d.coeffs[:-1]):
        x = a + 1 / x
    return x.numerator, x.denominator


def components(d: ConwayDiagram) -> int:
    return 2 if fraction(d)[0] % 2 == 0 else 1


def _odd_length(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    # [.., a] = [.., a-1, 1] keeps the fraction and the crossing count
    if len(coeffs) % 2:
        return coeffs
    if coeffs[-1] > 1:
        return coeffs[:-1] + (coeffs[-1] - 1, 1)
    return coeffs[:-2] + (coeffs[-2] + 1,)


def plat_letters(d: ConwayDiagram) -> list[int]:
    letters: list[int] = []
    for k, a in enumerate(_odd_length(d.coeffs)):
        letters += [2 if k % 2 == 0 else -1] * a
    return letters


def conway_pd(d: ConwayDiagram) -> PlanarDiagram:
    """Plat diagram of ``d``, seeded with the first-twist-parallel orientation."""
    letters = plat_letters(d)
    touches: dict[int, list[int]] = {p: [] for p in range(1, 5)}
    for t, e in enumerate(letters):
        touches[abs(e)].append(t)
        touches[abs(e) + 1].append(t)

    # segment (p, k) runs on position p above its k-th crossing; caps glue ends
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    def join(a, b):
        parent[find(a)] = find(b)

    join((1, 0), (2, 0))
    join((3, 0), (4, 0))
    join((1, len(touches[1])), (2, len(touches[2])))
    join((3, len(touches[3])), (4, len(touches[4])))
    label: dict[tuple[int, int], int] = {}

    def edge(p, k):
        return label.setdefault(find((p, k)), len(label))

    crossings = []
    for t, e in enumerate(letters):
        i = abs(e)
        ki, kj = touches[i].index(t), touches[i + 1].index(t)
        crossings.append(letter_crossing(e, edge(i, ki), edge(i + 1, kj), edge(i, ki + 1), edge(i + 1, kj + 1)))
    pd = PlanarDiagram(tuple(crossings), tuple(upward_slots(0, letters[0])))
    return pd.mirror() if d.mirrored else pd


def family_invariants(d: ConwayDiagram) -> tuple[int, int]:
    """Closed-form (crossing number, signature) of a tagged family member."""
    if d.family == "generic":
        raise ConwayError("no closed form; use gl_signature")
    if d.family == "pqr":
        p, q, r = d.params()
        cr, sig = p + 2 * q + r, 1 - p - r
    elif d.family == "pq2r":
        p, q, r = d.params()
        cr, sig = p + 2 * (q + r) - 1, 1 - p
    else:
        p, q, r, s = d.params()
        cr, sig = 2 * (p + q + r + s) - 1, 0
    return cr, -sig if d.mirrored else sig


def gl_signature(d: ConwayDiagram, orientation: tuple[bool, ...] | None = None) -> tuple[int, int]:
    """(signature, nullity) from the Goeritz matrix plus the Gordon-Litherland correction.

    ``orientation`` flips components relative to the default rule. A generic
    2-component diagram has no default and must pass one.
    """
    pd = conway_pd(d)
    if orientation is None and d.family == "generic" and pd.num_components() > 1:
        raise ConwayError("generic link diagram needs an explicit orientation")
    return gordon_litherland(pd, orientation)


def alternating_crossing_number(d: ConwayDiagram) -> int:
    """Crossing count of the diagram, which is the crossing number once it is reduced alternating."""
    pd = conway_pd(d)
    if not pd.is_alternating() or pd.nugatory_crossings():
        raise ConwayError(f"{d} is not drawn reduced alternating")
    return len(pd)


@dataclass(frozen=True)
class BraidWitness:
    name: str
    word: BraidWord


def _delta_word(*tail: int, power: int = 2) -> BraidWord:
    return BraidWord(3, (1, 2, 1) * power + tail)


def positive_3braid_witness(c: int) -> BraidWitness | None:
    """A closure with crossing number ``c`` and signature ``2 - c``."""
    fixed = {
        6: BraidWitness("T(3,3)", _delta_word()),
        8: BraidWitness("T(3,4)", _delta_word(1, 2)),
        9: BraidWitness("DeltaCubed", _delta_word(power=3)),
        10: BraidWitness("T(3,5)", _delta_word(1, 2, 1, 2)),
    }
    if c in fixed:
        return fixed[c]
    if c >= 7:
        q = c - 6
        return BraidWitness(f"Pretzel(-2,2,{q + 2})", _delta_word(*([2] * q)))
    if c >= 4:
        return BraidWitness(f"ConnectedSum(T(2,2),T(2,{c - 2}))", BraidWord(3, (1, 1) + (2,) * (c - 2)))
    return None


def geography_realizer(c: int, d: int):
    """A link with crossing number ``c`` and signature ``d``, or None.

    Returns a ConwayDiagram or a BraidWitness.
    """
    if d > 0:
        w = geography_realizer(c, -d)
        if isinstance(w, ConwayDiagram):
            return w.mirror()
        if isinstance(w, BraidWitness):
            return BraidWitness(_mirror_name(w.name), mirror(w.word))
        return None
    if c < 1 or d < 1 - c:
        return None
    if d == 1 - c:
        return BraidWitness(f"T(2,{c})", BraidWord(2, (1,) * c)) if c >= 2 else None
    if d == 2 - c:
        return positive_3braid_witness(c)
    if (c + d) % 2 == 1 and d < 0:
        return from_family("pqr", 1, (c - 1 + d) // 2, -d)
    if d == 0 and c % 2 == 1:
        return from_family("5p", 1, 1, 1, (c + 1) // 2 - 3) if c >= 7 else None
    if (c + d) % 2 == 0:
        return from_family("pq2r", 1 - d, 1, (c + d) // 2 - 1)
    return None


def _mirror_name(name: str) -> str:
    if name.startswith("T(2,"):
        return "T(2,-" + name[4:]
    return "mirror " + name
