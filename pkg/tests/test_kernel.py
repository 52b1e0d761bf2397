"""The splice kernel against the union-find oracle, on both implementations."""

from __future__ import annotations

import random

import pytest

import tlcob._kernel_py as kpy
from oracles import naive_loop_count

try:
    import tlcob._kernel_c as kc

    KERNELS = [kpy, kc]
except ImportError:
    KERNELS = [kpy]


def random_instance(rng: random.Random, n_strings: int, n_glued_pairs: int):
    n = 2 * n_strings
    points = list(range(n))
    rng.shuffle(points)
    match = [-1] * n
    for i in range(0, n, 2):
        a, b = points[i], points[i + 1]
        match[a], match[b] = b, a
    glue = [-1] * n
    free = list(range(n))
    rng.shuffle(free)
    for _ in range(n_glued_pairs):
        a, b = free.pop(), free.pop()
        glue[a], glue[b] = b, a
    return match, glue


@pytest.mark.parametrize("kern", KERNELS, ids=lambda k: k.IMPLEMENTATION)
def test_splice_loops_match_oracle(kern):
    rng = random.Random(13)
    for _ in range(300):
        ns = rng.randint(1, 8)
        match, glue = random_instance(rng, ns, rng.randint(0, ns))
        out, loops = kern.splice(match, glue)
        assert loops == naive_loop_count(match, glue)
        # the result is an involution on free points
        for i, j in enumerate(out):
            if glue[i] >= 0:
                assert j == -1
            else:
                assert out[j] == i and glue[j] == -1


@pytest.mark.parametrize("kern", KERNELS, ids=lambda k: k.IMPLEMENTATION)
def test_count_loops_closed(kern):
    rng = random.Random(29)
    for _ in range(200):
        ns = rng.randint(1, 8)
        match, glue = random_instance(rng, ns, ns)  # fully glued
        assert kern.count_loops(match, glue) == naive_loop_count(match, glue)


@pytest.mark.parametrize("kern", KERNELS, ids=lambda k: k.IMPLEMENTATION)
def test_network_loop_counts_odometer(kern):
    rng = random.Random(47)
    for _ in range(40):
        # one fixed string pair plus two substitution blocks of 2 points each
        base = [1, 0, -1, -1, -1, -1]
        glue = [2, 4, 0, 5, 1, 3]
        tables = [[[1, 0]], [[1, 0]]]
        offsets = [2, 4]
        counts = kern.network_loop_counts(base, glue, offsets, tables)
        match = list(base)
        match[2], match[3] = 3, 2
        match[4], match[5] = 5, 4
        assert counts == [naive_loop_count(match, glue)]


@pytest.mark.parametrize("kern", KERNELS, ids=lambda k: k.IMPLEMENTATION)
def test_network_loop_counts_agree_with_single_calls(kern):
    rng = random.Random(61)
    for _ in range(30):
        nblocks = rng.randint(1, 3)
        block_sizes = [2 * rng.randint(1, 2) for _ in range(nblocks)]
        fixed = 2 * rng.randint(1, 3)
        n = fixed + sum(block_sizes)
        # fixed strings on the first `fixed` points
        perm = list(range(fixed))
        rng.shuffle(perm)
        base = [-1] * n
        for i in range(0, fixed, 2):
            a, b = perm[i], perm[i + 1]
            base[a], base[b] = b, a
        # glue: random perfect involution over all points
        pts = list(range(n))
        rng.shuffle(pts)
        glue = [-1] * n
        for i in range(0, n, 2):
            a, b = pts[i], pts[i + 1]
            glue[a], glue[b] = b, a
        offsets = []
        tables = []
        off = fixed
        for size in block_sizes:
            offsets.append(off)
            choices = []
            for _ in range(rng.randint(1, 3)):
                local = list(range(size))
                rng.shuffle(local)
                tab = [-1] * size
                for i in range(0, size, 2):
                    a, b = local[i], local[i + 1]
                    tab[a], tab[b] = b, a
                choices.append(tab)
            tables.append(choices)
            off += size
        counts = kern.network_loop_counts(base, glue, offsets, tables)
        # cross-check each entry against the oracle
        import itertools

        pos = 0
        for combo in itertools.product(*[range(len(t)) for t in tables]):
            match = list(base)
            for b, choice in enumerate(combo):
                o = offsets[b]
                for j, p in enumerate(tables[b][choice]):
                    match[o + j] = o + p
            assert counts[pos] == naive_loop_count(match, glue)
            pos += 1
