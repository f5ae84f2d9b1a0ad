"""Planar diagrams (PD codes) and the Goeritz / Gordon-Litherland signature.

A crossing is a 4-tuple of edge labels listed counterclockwise; slots 0-2
carry the under strand and slots 1-3 the over strand. Orientation is not part
of the code: seeds give a default, and per-component flags flip it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braid import BraidWord, is_connected
from .symform import signature_nullity


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    # (crossing, slot) pairs known to be incoming; they fix the default
    # direction of the components passing through them
    seeds: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen: dict[int, int] = {}
        for x in self.crossings:
            for e in x:
                seen[e] = seen.get(e, 0) + 1
        bad = [e for e, k in seen.items() if k != 2]
        if bad:
            raise DiagramError(f"edges {bad} do not appear exactly twice")

    def __len__(self) -> int:
        return len(self.crossings)

    def mirror(self) -> PlanarDiagram:
        return PlanarDiagram(
            tuple((b, c, d, a) for a, b, c, d in self.crossings),
            tuple((x, (slot - 1) % 4) for x, slot in self.seeds),
        )

    def _ends(self) -> dict[int, list[tuple[int, int]]]:
        ends: dict[int, list[tuple[int, int]]] = {}
        for x, cr in enumerate(self.crossings):
            for s, e in enumerate(cr):
                ends.setdefault(e, []).append((x, s))
        return ends

    def _other_end(self, ends, x: int, s: int) -> tuple[int, int]:
        a, b = ends[self.crossings[x][s]]
        return b if a == (x, s) else a

    def component_traces(self) -> list[list[tuple[int, int]]]:
        """Each component as its list of (crossing, entry slot).

        A component through a seed runs in the seed's direction; any other
        starts from its first slot in crossing order.
        """
        ends = self._ends()
        visited: set[tuple[int, int]] = set()
        traces = []
        starts = list(self.seeds) + [(x, s) for x in range(len(self.crossings)) for s in range(4)]
        for x, s in starts:
            if (x, s) in visited:
                continue
            trace = []
            cur = (x, s)
            while cur not in visited:
                cx, cs = cur
                out = (cx, (cs + 2) % 4)
                visited.add(cur)
                visited.add(out)
                trace.append(cur)
                cur = self._other_end(ends, *out)
            traces.append(trace)
        return traces

    def num_components(self) -> int:
        return len(self.component_traces())

    def incoming(self, reverse: tuple[bool, ...] | None = None) -> list[tuple[int, int]]:
        """Incoming (under, over) slots at each crossing for an orientation.

        ``reverse[i]`` flips component ``i`` of ``component_traces``.
        """
        traces = self.component_traces()
        reverse = reverse or (False,) * len(traces)
        if len(reverse) != len(traces):
            raise DiagramError(f"orientation needs {len(traces)} flags")
        into = [[False] * 4 for _ in self.crossings]
        for trace, flip in zip(traces, reverse):
            for x, s in trace:
                into[x][(s + 2) % 4 if flip else s] = True
        result = []
        for x in range(len(self.crossings)):
            u = 0 if into[x][0] else 2
            o = 1 if into[x][1] else 3
            result.append((u, o))
        return result

    def signs(self, reverse=None) -> list[int]:
        return [1 if o == (u + 3) % 4 else -1 for u, o in self.incoming(reverse)]

    def writhe(self, reverse=None) -> int:
        return sum(self.signs(reverse))

    def is_alternating(self) -> bool:
        for trace in self.component_traces():
            kinds = [slot % 2 for _, slot in trace]
            if any(kinds[i] == kinds[i - 1] for i in range(len(kinds))):
                return False
        return True

    def nugatory_crossings(self) -> list[int]:
        """Crossings that touch one face at two opposite corners."""
        corner, _ = self.faces()
        return [x for x, c in enumerate(corner) if c[0] == c[2] or c[1] == c[3]]

    def faces(self) -> tuple[list[list[int]], int]:
        """Face id of every corner (corner i sits between slots i and i+1)."""
        ends = self._ends()
        corner = [[-1] * 4 for _ in self.crossings]
        count = 0
        for x in range(len(self.crossings)):
            for c in range(4):
                if corner[x][c] >= 0:
                    continue
                # arrive through slot c+1, leave through slot c
                cx, cc = x, c
                while corner[cx][cc] < 0:
                    corner[cx][cc] = count
                    nx, ns = self._other_end(ends, cx, cc)
                    cx, cc = nx, (ns - 1) % 4
                count += 1
        return corner, count

    def checkerboard(self) -> tuple[list[list[int]], list[int]]:
        corner, count = self.faces()
        if count != len(self.crossings) + 2:
            raise DiagramError("diagram is not connected")
        adj: list[set[int]] = [set() for _ in range(count)]
        for x in range(len(self.crossings)):
            for c in range(4):
                f, g = corner[x][c], corner[x][(c + 1) % 4]
                adj[f].add(g)
                adj[g].add(f)
        color = [-1] * count
        color[0] = 0
        stack = [0]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if color[g] < 0:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    raise DiagramError("faces cannot be checkerboard coloured")
        return corner, color


def goeritz(pd: PlanarDiagram, shaded: int = 1) -> tuple[np.ndarray, list[int], list[int]]:
    """Goeritz matrix of the unshaded regions, with each crossing's eta and unshaded corner.

    Regions of colour ``shaded`` form the spanning surface. ``eta`` is +1
    when the unshaded corners are the ones counterclockwise after the under
    strand's slots (corners 0 and 2).
    """
    corner, color = pd.checkerboard()
    white = sorted({corner[x][c] for x in range(len(pd)) for c in range(4) if color[corner[x][c]] != shaded})
    index = {f: i for i, f in enumerate(white)}
    full = np.zeros((len(white), len(white)), dtype=np.int64)
    etas, whites = [], []
    for x in range(len(pd)):
        c = 0 if color[corner[x][0]] != shaded else 1
        eta = 1 if c == 0 else -1
        etas.append(eta)
        whites.append(c)
        i, j = index[corner[x][c]], index[corner[x][c + 2]]
        if i != j:
            full[i, i] += eta
            full[j, j] += eta
            full[i, j] -= eta
            full[j, i] -= eta
    return full[1:, 1:], etas, whites


def gordon_litherland(pd: PlanarDiagram, reverse=None, shaded: int = 1) -> tuple[int, int]:
    """(signature, nullity) of the oriented link from any connected diagram."""
    g, etas, whites = goeritz(pd, shaded)
    sig, null = signature_nullity(g)
    correction = 0
    for (u, o), eta, c in zip(pd.incoming(reverse), etas, whites):
        # the oriented smoothing opens the corners between the two incoming
        # slots and between the two outgoing ones
        opened = {u, o}
        first = 3 if opened == {0, 3} else min(opened)
        merged_unshaded = (first % 2) == (c % 2)
        if not merged_unshaded:
            correction += eta
    return sig - correction, null


def braid_to_pd(w: BraidWord) -> PlanarDiagram:
    """Planar diagram of the closure of a braid with a connected surface."""
    if not is_connected(w) or not w.letters:
        raise DiagramError("braid closure diagram must be connected and non-empty")
    touches: dict[int, list[int]] = {p: [] for p in range(1, w.strands + 1)}
    for t, e in enumerate(w.letters):
        touches[abs(e)].append(t)
        touches[abs(e) + 1].append(t)
    label: dict[tuple[int, int], int] = {}
    for p, ts in touches.items():
        for t in ts:
            label[(p, t)] = len(label)

    def outgoing(p, t):
        return label[(p, t)]

    def incoming(p, t):
        ts = touches[p]
        return label[(p, ts[ts.index(t) - 1])]

    crossings = []
    seeds = []
    for t, e in enumerate(w.letters):
        i = abs(e)
        bl, br = incoming(i, t), incoming(i + 1, t)
        tl, tr = outgoing(i, t), outgoing(i + 1, t)
        crossings.append(letter_crossing(e, bl, br, tl, tr))
        seeds += upward_slots(t, e)
    return PlanarDiagram(tuple(crossings), tuple(seeds))


def letter_crossing(e: int, bl: int, br: int, tl: int, tr: int) -> tuple[int, int, int, int]:
    """Crossing tuple of one braid letter from its four edge labels."""
    return (br, tr, tl, bl) if e > 0 else (bl, br, tr, tl)


def upward_slots(x: int, e: int) -> list[tuple[int, int]]:
    """The two bottom slots of letter crossing ``x``, i.e. where upward strands enter."""
    return [(x, 0), (x, 3)] if e > 0 else [(x, 0), (x, 1)]
