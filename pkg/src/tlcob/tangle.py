"""Combinatorial planar tangles: genus-0 decorated surface pieces.

A piece is a disc with holes.  Each boundary circle carries a colour (its
reading with respect to the induced boundary orientation: unbarred colours are
"bad", barred ones "good"), and 2|k| marked points listed from the basepoint.
The listing runs anticlockwise on internal circles and clockwise on the
external one, which makes the listings a consistent rotation system on the
sphere obtained by capping every circle: faces are the orbits of
``p -> match(next(p))`` and the planarity certificate is Euler characteristic
2 on every connected component of that map.

Shading is derived, not stored: the arc from point i to point i+1 (listing
order) is white exactly when ``i`` is even on a barred circle or odd on an
unbarred one; circles of size 0 demand a white (0+) or black (0-) ambient
region.  Checkerboard consistency across strings is then equivalent to each
face seeing a single shade.

All circle-against-circle identifications (substituting a diagram, sticking a
tangle into a hole, gluing pieces) use the same aligned-reversal point map
``j <-> (2k - j) mod 2k`` with basepoints matched.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .colors import Color, ZERO_MINUS, ZERO_PLUS, color
from .tl import TLDiagram, TLElement, diagrams


class TangleError(ValueError):
    """A tangle operation was applied outside its domain."""


@dataclass(frozen=True)
class BoundaryCircle:
    """A boundary circle: colour in Col plus the implied 2|k| marked points."""

    color: Color

    @property
    def size(self) -> int:
        return 2 * self.color.size

    @property
    def good(self) -> bool:
        return self.color.barred


def circle(spec: int | str | Color) -> BoundaryCircle:
    return BoundaryCircle(color(spec))


def rev(j: int, n: int) -> int:
    """The aligned-reversal point map (basepoints fixed)."""
    return (n - j) % n


@dataclass(frozen=True)
class PlanarTangle:
    """A genus-0 piece: external circle, holes, strings, free closed loops."""

    external: BoundaryCircle
    internals: tuple[BoundaryCircle, ...]
    strings: tuple[int, ...]
    free_loops: int = 0

    def __post_init__(self) -> None:
        n = self.total_points
        if len(self.strings) != n:
            raise TangleError(f"string table has {len(self.strings)} entries for {n} points")
        for i, j in enumerate(self.strings):
            if not 0 <= j < n or j == i or self.strings[j] != i:
                raise TangleError("strings are not a fixed-point-free involution")
        if self.free_loops < 0:
            raise TangleError("free loop count must be >= 0")

    # -- point bookkeeping -------------------------------------------------

    @property
    def circles(self) -> tuple[BoundaryCircle, ...]:
        return (self.external, *self.internals)

    @property
    def total_points(self) -> int:
        return sum(c.size for c in self.circles)

    def offset(self, ci: int) -> int:
        return sum(c.size for c in self.circles[:ci])

    def point(self, ci: int, local: int) -> int:
        return self.offset(ci) + local

    def locate(self, p: int) -> tuple[int, int]:
        off = 0
        for ci, c in enumerate(self.circles):
            if p < off + c.size:
                return ci, p - off
            off += c.size
        raise IndexError(p)

    def circle_points(self, ci: int) -> range:
        off = self.offset(ci)
        return range(off, off + self.circles[ci].size)

    def next_point(self, p: int) -> int:
        ci, local = self.locate(p)
        size = self.circles[ci].size
        return self.point(ci, (local + 1) % size)

    # -- derived structure -------------------------------------------------

    def faces(self) -> list[list[int]]:
        """Face orbits of the rotation system; a face holds the points p whose
        arc (p -> next p) it touches."""
        done = [False] * self.total_points
        out: list[list[int]] = []
        for start in range(self.total_points):
            if done[start]:
                continue
            face = []
            p = start
            while not done[p]:
                done[p] = True
                face.append(p)
                p = self.strings[self.next_point(p)]
            out.append(face)
        return out

    def arc_is_white(self, p: int) -> bool:
        ci, local = self.locate(p)
        return (local % 2 == 0) == self.circles[ci].good

    def components(self) -> list[list[int]]:
        """Connected components of the circle/string map, as circle indices."""
        nc = len(self.circles)
        parent = list(range(nc))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p, q in enumerate(self.strings):
            a, _ = self.locate(p)
            b, _ = self.locate(q)
            parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for ci in range(nc):
            groups.setdefault(find(ci), []).append(ci)
        return list(groups.values())


def validate(t: PlanarTangle) -> tuple[str, str] | None:
    """Check the piece invariants; None when valid, else (code, message)."""
    faces = t.faces()
    face_of: dict[int, int] = {}
    for fi, face in enumerate(faces):
        for p in face:
            face_of[p] = fi

    # genus: every component of the capped map must be a sphere
    comps = t.components()
    for comp in comps:
        v = len(comp)
        pts = [p for ci in comp for p in t.circle_points(ci)]
        e = len(pts) // 2
        if e == 0:
            continue  # isolated circle: V=1, E=0, F=1
        f = len({face_of[p] for p in pts})
        if v - e + f != 2:
            names = ", ".join(str(ci) for ci in comp)
            return ("genus", f"component with circles [{names}] has Euler characteristic {v - e + f}, not 2")

    # shading: each face sees one shade
    shades: list[bool] = []
    for fi, face in enumerate(faces):
        w = {t.arc_is_white(p) for p in face}
        if len(w) != 1:
            ci, _ = t.locate(face[0])
            return ("shading", f"face at circle {ci} mixes black and white arcs")
        shades.append(w.pop())

    # hosting: every size-0 circle needs an ambient region of its shade
    available = set(shades)
    if t.free_loops:
        available = {True, False}
    zero_circles = [(ci, c) for ci, c in enumerate(t.circles) if c.size == 0]
    for ci, c in zero_circles:
        want_white = c.color.sign == "+"
        if available:
            if want_white not in available:
                return ("shading", f"circle {ci} of colour {c.color} needs a {'white' if want_white else 'black'} region")
        else:
            # no strings, no loops: the only region has the external's shade
            ext_white = t.external.color.sign == "+"
            if want_white != ext_white:
                return ("shading", f"circle {ci} of colour {c.color} disagrees with the ambient shade")
    return None


def require_valid(t: PlanarTangle) -> PlanarTangle:
    diag = validate(t)
    if diag is not None:
        raise TangleError(f"{diag[0]}: {diag[1]}")
    return t


def _relabelled(t: PlanarTangle, new_local: dict[int, tuple[int, int]], circles: tuple[BoundaryCircle, ...], loops: int) -> PlanarTangle:
    """Rebuild a tangle from an old-point -> (new circle, new local) map."""
    external, *internals = circles
    sizes = [c.size for c in circles]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    old_to_new = {old: offsets[ci] + local for old, (ci, local) in new_local.items()}
    strings = [-1] * sum(sizes)
    for old_p, old_q in enumerate(t.strings):
        if old_p in old_to_new and old_q in old_to_new:
            strings[old_to_new[old_p]] = old_to_new[old_q]
    return PlanarTangle(external, tuple(internals), tuple(strings), loops)


def mirror(t: PlanarTangle) -> PlanarTangle:
    """Orientation reversal: reverse every listing about its basepoint and bar
    every colour.  Shading values are kept; goodness flips."""
    new_local = {}
    for ci, c in enumerate(t.circles):
        n = c.size
        for local in range(n):
            new_local[t.point(ci, local)] = (ci, rev(local, n))
    circles = tuple(BoundaryCircle(c.color.bar()) for c in t.circles)
    return _relabelled(t, new_local, circles, t.free_loops)


def rotate_star(t: PlanarTangle, ci: int, steps: int) -> PlanarTangle:
    """Move a circle's basepoint `steps` points along the induced orientation.

    One step is the improving rotation of a bad circle; odd step counts flip
    the colour bar (for size-0 circles they flip the basepoint shade flag)."""
    c = t.circles[ci]
    n = c.size
    new_local = {t.point(cj, local): (cj, local) for cj in range(len(t.circles)) for local in range(t.circles[cj].size)}
    if n:
        for local in range(n):
            new_local[t.point(ci, local)] = (ci, (local - steps) % n)
    circles = list(t.circles)
    if steps % 2:
        circles[ci] = BoundaryCircle(c.color.bar())
    return _relabelled(t, new_local, tuple(circles), t.free_loops)


def adjoint(t: PlanarTangle) -> PlanarTangle:
    """The adjoint tangle: rotate every basepoint one step backwards along the
    induced orientation, then reverse orientation.  Involutive, and it keeps
    the colour of every circle."""
    rotated = t
    for ci in range(len(t.circles)):
        rotated = rotate_star(rotated, ci, -1)
    return mirror(rotated)


def compose(t: PlanarTangle, i: int, s: PlanarTangle) -> PlanarTangle:
    """Stick s into the i-th hole of t (0-based), basepoints aligned."""
    hole = t.internals[i]
    if hole.color != s.external.color.bar():
        raise TangleError(
            f"hole colour {hole.color} cannot receive external colour {s.external.color}"
        )
    nt, ns = t.total_points, s.total_points
    match = list(t.strings) + [p + nt for p in s.strings]
    glue = [-1] * (nt + ns)
    n = hole.size
    for j in range(n):
        a = t.point(1 + i, j)
        b = nt + s.point(0, rev(j, n))
        glue[a], glue[b] = b, a
    out, loops = kernel.splice(match, glue)

    circles = (t.external, *t.internals[:i], *s.internals, *t.internals[i + 1 :])
    sizes = [c.size for c in circles]
    offsets = [sum(sizes[:m]) for m in range(len(sizes))]
    old_to_new: dict[int, int] = {}
    for local in range(t.external.size):
        old_to_new[t.point(0, local)] = offsets[0] + local
    for m, _ in enumerate(t.internals[:i]):
        for local in range(t.internals[m].size):
            old_to_new[t.point(1 + m, local)] = offsets[1 + m] + local
    for m, _ in enumerate(s.internals):
        for local in range(s.internals[m].size):
            old_to_new[nt + s.point(1 + m, local)] = offsets[1 + i + m] + local
    for m in range(i + 1, len(t.internals)):
        for local in range(t.internals[m].size):
            old_to_new[t.point(1 + m, local)] = offsets[len(s.internals) + m] + local

    strings = [-1] * sum(sizes)
    for old_p, new_p in old_to_new.items():
        strings[new_p] = old_to_new[out[old_p]]
    return PlanarTangle(
        t.external,
        tuple(circles[1:]),
        tuple(strings),
        t.free_loops + s.free_loops + loops,
    )


def is_jones_form(t: PlanarTangle) -> bool:
    """External circle bad (unbarred), every hole good (barred)."""
    return not t.external.color.barred and all(c.color.barred for c in t.internals)


def substitution_glue(t: PlanarTangle) -> tuple[list[int], list[int], list[int]]:
    """Gluing data for closing the piece into networks.

    Returns (base_match, glue, block_offsets): the first `t.total_points`
    entries are the tangle strings, followed by one block per circle holding
    the substituted diagram; point m of a good circle is identified with
    diagram point rev(m), of a bad circle (after the improving basepoint
    rotation) with diagram point 2k-1-m.
    """
    nt = t.total_points
    base = list(t.strings) + [-1] * nt
    glue = [-1] * (2 * nt)
    offsets = []
    off = nt
    for ci, c in enumerate(t.circles):
        offsets.append(off)
        n = c.size
        for m in range(n):
            a = t.point(ci, m)
            b = off + (rev(m, n) if c.good else n - 1 - m)
            glue[a], glue[b] = b, a
        off += n
    return base, glue, offsets


def action(t: PlanarTangle, inputs: tuple[TLElement, ...], backend) -> TLElement:
    """The multilinear operator of a Jones-form tangle on its hole inputs."""
    if not is_jones_form(t):
        raise TangleError("action needs a Jones-form tangle (bad external, good holes)")
    if len(inputs) != len(t.internals):
        raise TangleError(f"expected {len(t.internals)} inputs, got {len(inputs)}")
    for c, x in zip(t.internals, inputs):
        if x.k != c.color.size:
            raise TangleError(f"input of size {x.k} fed to a colour-{c.color} hole")

    k0 = t.external.color.size
    nt = t.total_points
    acc: dict[TLDiagram, Fraction] = {}
    for combo in itertools.product(*(x.terms for x in inputs)):
        match = list(t.strings)
        glue = [-1] * nt
        off = nt
        for (d, _), c, ci in zip(combo, t.internals, range(1, len(t.circles))):
            n = c.size
            match.extend(p + off for p in d.pairing)
            glue.extend([-1] * n)
            for m in range(n):
                a = t.point(ci, m)
                b = off + rev(m, n)
                glue[a], glue[b] = b, a
            off += n
        out, loops = kernel.splice(match, glue)
        seq = tuple(out[p] for p in range(2 * k0))
        result = TLDiagram(k0, seq)
        coeff = backend.delta_pow(loops + t.free_loops)
        for (_, c), _x in zip(combo, inputs):
            coeff *= c
        acc[result] = acc.get(result, Fraction(0)) + coeff
    return TLElement(k0, tuple(acc.items()))


def evaluate_network(t: PlanarTangle, backend) -> Fraction:
    """Value of a closed network: no holes, size-0 external circle."""
    if t.internals:
        raise TangleError("network has internal circles; close it with action()")
    if t.external.color.size != 0:
        raise TangleError("network is not closed: the external circle carries points")
    return backend.delta_pow(t.free_loops)


# -- the named tangle library ---------------------------------------------


def _box_top(n: int, t: int, hole: bool) -> int:
    """Local index of the t-th top point (left to right) of a k-box circle."""
    return rev(t, n) if hole else t


def _box_bot(n: int, t: int, hole: bool) -> int:
    """Local index of the t-th bottom point (left to right)."""
    return (t + 1) % n if hole else n - 1 - t


def _from_pairs(external: BoundaryCircle, internals: tuple[BoundaryCircle, ...], pairs, loops: int = 0) -> PlanarTangle:
    sizes = [external.size] + [c.size for c in internals]
    total = sum(sizes)
    strings = [-1] * total
    for a, b in pairs:
        strings[a], strings[b] = b, a
    return PlanarTangle(external, internals, tuple(strings), loops)


def identity_tangle(k: int | str | Color) -> PlanarTangle:
    """The cylinder: hole point rev(j) joined straight to external point j."""
    c = color(k)
    if c.barred:
        raise TangleError("named tangles take colours in C")
    n = 2 * c.size
    pairs = [(j, n + rev(j, n)) for j in range(n)]
    return _from_pairs(BoundaryCircle(c), (BoundaryCircle(c.bar()),), pairs)


def multiplication_tangle(k: int | str | Color) -> PlanarTangle:
    """Two stacked holes wired in series to the external box."""
    c = color(k)
    if c.barred:
        raise TangleError("named tangles take colours in C")
    kk = c.size
    n = 2 * kk
    ext = BoundaryCircle(c)
    d = BoundaryCircle(c.bar())
    off1, off2 = n, 2 * n
    pairs = []
    for t in range(kk):
        pairs.append((_box_top(n, t, False), off1 + _box_top(n, t, True)))
        pairs.append((off1 + _box_bot(n, t, True), off2 + _box_top(n, t, True)))
        pairs.append((off2 + _box_bot(n, t, True), _box_bot(n, t, False)))
    return _from_pairs(ext, (d, d), pairs)


def trace_tangle(k: int | str | Color) -> PlanarTangle:
    """One hole whose box columns are closed off around the side; the external
    circle is the matching empty colour (0+ unless tracing P_{0-})."""
    c = color(k)
    if c.barred:
        raise TangleError("named tangles take colours in C")
    kk = c.size
    n = 2 * kk
    ext = BoundaryCircle(ZERO_MINUS if c == ZERO_MINUS else ZERO_PLUS)
    pairs = [(ext.size + _box_top(n, t, True), ext.size + _box_bot(n, t, True)) for t in range(kk)]
    return _from_pairs(ext, (BoundaryCircle(c.bar()),), pairs)


def unit_tangle(k: int | str | Color) -> PlanarTangle:
    """No holes; vertical strands only.  Its action is the unit of P_k."""
    c = color(k)
    if c.barred:
        raise TangleError("named tangles take colours in C")
    n = 2 * c.size
    pairs = [(t, n - 1 - t) for t in range(c.size)]
    return _from_pairs(BoundaryCircle(c), (), pairs)


def rotation_tangle(k: int | str | Color) -> PlanarTangle:
    """The cylinder with the external basepoint advanced one step: the piece
    whose evaluation is the duality map P_k -> P_k*."""
    c = color(k)
    if c.size < 1:
        raise TangleError("the rotation piece needs |k| >= 1")
    return rotate_star(identity_tangle(c), 0, 1)


def rotation_inverse_tangle(k: int | str | Color) -> PlanarTangle:
    """Orientation reversal of the rotation piece: evaluates to the inverse
    duality map P_k* -> P_k."""
    return mirror(rotation_tangle(k))


def jones_projection_tangle(k: int | str | Color) -> PlanarTangle:
    """No holes; strands except a cup/cap on the last two columns."""
    c = color(k)
    if c.barred or c.size < 2:
        raise TangleError("the projection tangle needs a colour k >= 2 in C")
    kk = c.size
    n = 2 * kk
    pairs = [(t, n - 1 - t) for t in range(kk - 2)]
    pairs.append((kk - 2, kk - 1))
    pairs.append((kk + 1, kk))
    return _from_pairs(BoundaryCircle(c), (), pairs)


def conditional_expectation_tangle(k: int | str | Color) -> PlanarTangle:
    """One colour-k hole; the last column is closed off, the rest pass through
    to a colour-(k-1) external box."""
    c = color(k)
    if c.barred or c.size < 1:
        raise TangleError("conditional expectation needs a colour k >= 1 in C")
    kk = c.size
    next_color = ZERO_PLUS if kk == 1 else Color(kk - 1)
    ext = BoundaryCircle(next_color)
    ne, nd = ext.size, 2 * kk
    pairs = []
    for t in range(kk - 1):
        pairs.append((_box_top(ne, t, False), ne + _box_top(nd, t, True)))
        pairs.append((_box_bot(ne, t, False), ne + _box_bot(nd, t, True)))
    pairs.append((ne + _box_top(nd, kk - 1, True), ne + _box_bot(nd, kk - 1, True)))
    return _from_pairs(ext, (BoundaryCircle(c.bar()),), pairs)


NAMED_TANGLES = {
    "I": identity_tangle,
    "M": multiplication_tangle,
    "tr": trace_tangle,
    "unit": unit_tangle,
    "S": rotation_tangle,
    "Sbar": rotation_inverse_tangle,
    "E": jones_projection_tangle,
    "CE": conditional_expectation_tangle,
}


def named_tangle(name: str, k: int | str | Color) -> PlanarTangle:
    try:
        ctor = NAMED_TANGLES[name]
    except KeyError:
        raise TangleError(f"unknown named tangle {name!r}") from None
    return ctor(k)
