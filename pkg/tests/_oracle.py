"""Brute-force reference computations used to freeze expected test values.

Everything here works on plain integers and digit strings. No imports from
the package under test, so results obtained this way are an independent
route against which the parametric implementation is checked.

Run as a script to dump the derived constants:

    python tests/_oracle.py
"""

from __future__ import annotations

import functools
from collections import defaultdict


WIDTHS = (2, 3, 4, 5)


def step_value(value: int, width: int) -> int:
    digits = sorted(str(value).zfill(width))
    asc = int("".join(digits))
    desc = int("".join(reversed(digits)))
    return desc - asc


@functools.lru_cache(maxsize=None)
def admissible(width: int) -> tuple[int, ...]:
    out = []
    for value in range(10**width):
        text = str(value).zfill(width)
        if len(set(text)) > 1:
            out.append(value)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def step_table(width: int) -> dict[int, int]:
    return {value: step_value(value, width) for value in admissible(width)}


def spread_params(value: int, width: int) -> tuple[int, ...]:
    d = sorted((int(ch) for ch in str(value).zfill(width)), reverse=True)
    if width in (2, 3):
        return (d[0] - d[-1],)
    return (d[0] - d[-1], d[1] - d[-2])


def orbit_values(value: int, width: int, limit: int = 64) -> tuple[list[int], int]:
    """Iterate until repetition. Returns (steps, index of first repeat)."""
    table = step_table(width)
    seen = {value: 0}
    steps = [value]
    for _ in range(limit):
        value = table[value]
        if value in seen:
            return steps, seen[value]
        seen[value] = len(steps)
        steps.append(value)
    raise RuntimeError("orbit did not close within limit")


@functools.lru_cache(maxsize=None)
def class_table(width: int) -> dict[tuple[int, ...], int]:
    """Map each inhabited parameter class to one representative number."""
    reps: dict[tuple[int, ...], int] = {}
    for value in admissible(width):
        reps.setdefault(spread_params(value, width), value)
    return reps


@functools.lru_cache(maxsize=None)
def class_step(width: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Class successor map, derived by stepping a representative number.

    Well defined only because all members of a class share an image; the
    package verifies that separately and exhaustively.
    """
    return {
        cls: spread_params(step_value(rep, width), width)
        for cls, rep in class_table(width).items()
    }


def class_partition(width: int, order: int) -> list[list[tuple[int, ...]]]:
    """Blocks of classes sharing the same (order-1)-fold class image."""
    succ = class_step(width)
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for cls in sorted(succ):
        image = cls
        for _ in range(order - 1):
            image = succ[image]
        buckets[image].append(cls)
    return sorted(buckets.values())


@functools.lru_cache(maxsize=None)
def cycles(width: int) -> list[list[tuple[int, ...]]]:
    succ = class_step(width)
    on_cycle = set()
    for start in succ:
        trail = []
        seen = {}
        node = start
        while node not in seen:
            seen[node] = len(trail)
            trail.append(node)
            node = succ[node]
        on_cycle.update(trail[seen[node]:])
    out = []
    done = set()
    for node in sorted(on_cycle):
        if node in done:
            continue
        cyc = [node]
        done.add(node)
        nxt = succ[node]
        while nxt != node:
            cyc.append(nxt)
            done.add(nxt)
            nxt = succ[nxt]
        out.append(cyc)
    return out


def dist_to_cycle(width: int) -> dict[tuple[int, ...], int]:
    succ = class_step(width)
    cyc_nodes = {node for cyc in cycles(width) for node in cyc}
    dist: dict[tuple[int, ...], int] = {node: 0 for node in cyc_nodes}

    def walk(node):
        if node not in dist:
            dist[node] = walk(succ[node]) + 1
        return dist[node]

    for node in succ:
        walk(node)
    return dist


def nodal_assignment(width: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], int]]:
    """For each class: (cycle node it keeps landing on, steps to first land there)."""
    succ = class_step(width)
    cycle_of = {}
    for cyc in cycles(width):
        for node in cyc:
            cycle_of[node] = cyc
    out = {}
    for node in succ:
        image = node
        hops = 0
        while image not in cycle_of:
            image = succ[image]
            hops += 1
        length = len(cycle_of[image])
        # advance to the phase-stable node: total hops must be 0 mod length
        while hops % length:
            image = succ[image]
            hops += 1
        out[node] = (image, hops)
    return out


def dump() -> None:
    for width in WIDTHS:
        words = admissible(width)
        print(f"width {width}: |A|={len(words)}")
        images = sorted({step_value(v, width) for v in words})
        print(f"  |B|={len(images)}")
        if width == 3:
            mids = {str(v).zfill(width)[1] for v in images}
            print(f"  middle digits of images: {sorted(mids)}")
        max_steps = 0
        terminals = set()
        cycle_lengths = set()
        for v in words:
            steps, entry = orbit_values(v, width)
            length = len(steps) - entry
            cycle_lengths.add(length)
            if length == 1:
                terminals.add(steps[entry])
            max_steps = max(max_steps, len(steps) - 1)
        print(f"  max distinct steps before repeat: {max_steps}")
        print(f"  cycle lengths seen: {sorted(cycle_lengths)}; fixed points: {sorted(terminals)}")
        counts = []
        prev = None
        order = 1
        while True:
            blocks = class_partition(width, order)
            counts.append(len(blocks))
            if prev is not None and len(blocks) == prev:
                break
            prev = len(blocks)
            order += 1
            if order > 12:
                break
        print(f"  class block counts from order 1: {counts}")
        print(f"  class cycles: {cycles(width)}")
        dist = dist_to_cycle(width)
        print(f"  max class distance to cycle: {max(dist.values())}")
        nod = nodal_assignment(width)
        stab = defaultdict(list)
        for cls, (node, _) in nod.items():
            stab[node].append(cls)
        print(f"  stabilized blocks (by nodal class): {len(stab)}")
        if width == 5:
            cycle_id = {}
            for cyc in cycles(width):
                for node in cyc:
                    cycle_id[node] = min(cyc)
            succ = class_step(width)
            comp = defaultdict(list)
            for cls in succ:
                image = cls
                while image not in cycle_id:
                    image = succ[image]
                comp[cycle_id[image]].append(cls)
            print(f"  tree sizes: { {k: len(v) for k, v in sorted(comp.items())} }")
            print(f"  (1,0): nodal={nod[(1, 0)]}, dist={dist[(1, 0)]}")


if __name__ == "__main__":
    dump()
