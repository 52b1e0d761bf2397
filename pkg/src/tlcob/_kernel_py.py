"""Pure-Python loop-walking kernel.

The same API is provided by the compiled twin ``_kernel_c``; see ``kernel``
for the selection logic.  All functions work on involution arrays:

* ``match[i]`` is the other endpoint of the string at point ``i``;
* ``glue[i]`` is the point identified with ``i`` by a splice, or -1.

Splicing concatenates strings across glued points; alternating cycles that
never reach a free point are closed loops.
"""

from __future__ import annotations

from typing import Sequence

IMPLEMENTATION = "python"


def splice(match: Sequence[int], glue: Sequence[int]) -> tuple[list[int], int]:
    """Concatenate strings across glued points.

    Returns the induced matching on free points (-1 entries on glued ones)
    and the number of closed loops swallowed by the splice.
    """
    n = len(match)
    out = [-1] * n
    seen = [False] * n
    loops = 0
    for s in range(n):
        if glue[s] >= 0 or out[s] >= 0:
            continue
        v = match[s]
        while glue[v] >= 0:
            seen[v] = True
            v = glue[v]
            seen[v] = True
            v = match[v]
        out[s] = v
        out[v] = s
    for s in range(n):
        if glue[s] < 0 or seen[s]:
            continue
        v = s
        while not seen[v]:
            seen[v] = True
            v = glue[v]
            seen[v] = True
            v = match[v]
        loops += 1
    return out, loops


def count_loops(match: Sequence[int], glue: Sequence[int]) -> int:
    """Loop count of a fully glued (closed) network."""
    n = len(match)
    seen = [False] * n
    loops = 0
    for s in range(n):
        if seen[s]:
            continue
        v = s
        while not seen[v]:
            seen[v] = True
            v = glue[v]
            seen[v] = True
            v = match[v]
        loops += 1
    return loops


def network_loop_counts(
    base_match: Sequence[int],
    glue: Sequence[int],
    block_offsets: Sequence[int],
    block_tables: Sequence[Sequence[Sequence[int]]],
) -> list[int]:
    """Loop counts of a closed network over all basis substitutions.

    ``base_match`` holds the fixed strings, with -1 placeholders inside the
    substitution blocks; block ``b`` starts at ``block_offsets[b]`` and is
    overwritten by one of ``block_tables[b]`` (local pairings).  Every point
    must be glued.  The result is indexed odometer-style with the last block
    varying fastest.
    """
    n = len(base_match)
    match = list(base_match)
    nb = len(block_offsets)
    sizes = [len(t) for t in block_tables]
    total = 1
    for s in sizes:
        total *= s
    counts = [0] * total
    idx = [0] * nb
    stamp = [0] * n
    cur = 0

    def write(b: int, choice: int) -> None:
        off = block_offsets[b]
        for j, p in enumerate(block_tables[b][choice]):
            match[off + j] = off + p

    for b in range(nb):
        write(b, 0)
    for pos in range(total):
        cur += 1
        loops = 0
        for s in range(n):
            if stamp[s] == cur:
                continue
            v = s
            while stamp[v] != cur:
                stamp[v] = cur
                v = glue[v]
                stamp[v] = cur
                v = match[v]
            loops += 1
        counts[pos] = loops
        b = nb - 1
        while b >= 0:
            idx[b] += 1
            if idx[b] < sizes[b]:
                write(b, idx[b])
                break
            idx[b] = 0
            write(b, 0)
            b -= 1
    return counts
