"""The Temperley-Lieb algebras P_k with exact rational scalars.

A basis diagram of P_k is a non-crossing perfect matching of 2k points on a
circle, numbered 0..2k-1 clockwise from the basepoint.  In box form the points
run 0..k-1 left-to-right along the top and k..2k-1 right-to-left along the
bottom, so the point below top point t is 2k-1-t.  Odd 0-based points sit at
black-to-white transitions of the checkerboard shading (white-to-black at the
even ones, reading clockwise).

The backend fixes a rational loop value delta >= 2, which keeps every trace
form positive definite, and memoizes the Gram and trace-form matrices per k.
P_{0+} and P_{0-} are both carried by the k = 0 diagram space (they are one
dimensional; the shading difference lives at the surface level).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from . import kernel, linalg

Rational = Fraction | int


@dataclass(frozen=True, order=True)
class TLDiagram:
    """A non-crossing perfect matching of 2k circle points (an involution)."""

    k: int
    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        n = 2 * self.k
        p = self.pairing
        if len(p) != n:
            raise ValueError(f"pairing length {len(p)} != 2k = {n}")
        for i in range(n):
            j = p[i]
            if not 0 <= j < n or j == i or p[j] != i:
                raise ValueError("pairing is not a fixed-point-free involution")
            if (j - i) % 2 == 0:
                raise ValueError("pairs must join an odd point to an even point")
        if not _is_noncrossing(p):
            raise ValueError("pairing has a crossing")

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, j in enumerate(self.pairing) if i < j)

    def __str__(self) -> str:
        return "[" + " ".join(f"{i + 1}-{j + 1}" for i, j in self.pairs()) + "]"


def _is_noncrossing(p: tuple[int, ...]) -> bool:
    stack: list[int] = []
    for i in range(len(p)):
        if p[i] > i:
            stack.append(i)
        elif not stack or stack.pop() != p[i]:
            return False
    return True


def dimension(k: int) -> int:
    """Number of basis diagrams of P_k: the k-th Catalan number."""
    return math.comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def diagrams(k: int) -> tuple[TLDiagram, ...]:
    """The diagram basis of P_k, sorted by pairing tuple."""
    n = 2 * k
    out: list[TLDiagram] = []

    def build(points: tuple[int, ...]) -> Iterable[dict[int, int]]:
        if not points:
            yield {}
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            mate = points[idx]
            inside = points[1:idx]
            outside = points[idx + 1 :]
            for m1 in build(inside):
                for m2 in build(outside):
                    yield {first: mate, mate: first, **m1, **m2}

    for m in build(tuple(range(n))):
        seq = tuple(m[i] for i in range(n))
        out.append(TLDiagram(k, seq))
    out.sort()
    return tuple(out)


def diagram_index(d: TLDiagram) -> int:
    return diagrams(d.k).index(d)


def identity_diagram(k: int) -> TLDiagram:
    """Vertical strands: top t joined to bottom t."""
    return TLDiagram(k, tuple(2 * k - 1 - i for i in range(2 * k)))


def cup_cap_diagram(k: int, t: int) -> TLDiagram:
    """Strands everywhere except a cup joining top t, t+1 and the matching cap."""
    if not 0 <= t < k - 1:
        raise ValueError("cup position out of range")
    n = 2 * k
    seq = [n - 1 - i for i in range(n)]
    seq[t], seq[t + 1] = t + 1, t
    a, b = n - 1 - t, n - 2 - t
    seq[a], seq[b] = b, a
    return TLDiagram(k, tuple(seq))


def star_diagram(d: TLDiagram) -> TLDiagram:
    """Mirror reflection: reverses the cyclic order (swaps top and bottom rows)."""
    n = 2 * d.k
    m = lambda i: n - 1 - i
    return TLDiagram(d.k, tuple(m(d.pairing[m(i)]) for i in range(n)))


@dataclass(frozen=True)
class TLElement:
    """A rational linear combination of basis diagrams of fixed k."""

    k: int
    terms: tuple[tuple[TLDiagram, Fraction], ...]

    def __post_init__(self) -> None:
        for d, c in self.terms:
            if d.k != self.k:
                raise ValueError("mixed k in one element")
        pruned = tuple(sorted(((d, c) for d, c in self.terms if c), key=lambda t: t[0]))
        object.__setattr__(self, "terms", pruned)

    @staticmethod
    def of(k: int, coeffs: Mapping[TLDiagram, Rational]) -> TLElement:
        return TLElement(k, tuple((d, Fraction(c)) for d, c in coeffs.items()))

    @staticmethod
    def basis_vector(d: TLDiagram) -> TLElement:
        return TLElement(d.k, ((d, Fraction(1)),))

    @staticmethod
    def unit(k: int) -> TLElement:
        return TLElement.basis_vector(identity_diagram(k))

    @staticmethod
    def zero(k: int) -> TLElement:
        return TLElement(k, ())

    def coeff(self, d: TLDiagram) -> Fraction:
        for dd, c in self.terms:
            if dd == d:
                return c
        return Fraction(0)

    def vector(self) -> np.ndarray:
        """Coefficient column in the canonical basis order."""
        basis = diagrams(self.k)
        out = linalg.zeros((len(basis),))
        for d, c in self.terms:
            out[basis.index(d)] = c
        return out

    @staticmethod
    def from_vector(k: int, vec) -> TLElement:
        basis = diagrams(k)
        return TLElement(k, tuple((basis[i], Fraction(vec[i])) for i in range(len(basis))))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: TLElement) -> TLElement:
        if self.k != other.k:
            raise ValueError("mismatched k")
        acc = {d: c for d, c in self.terms}
        for d, c in other.terms:
            acc[d] = acc.get(d, Fraction(0)) + c
        return TLElement(self.k, tuple(acc.items()))

    def __neg__(self) -> TLElement:
        return TLElement(self.k, tuple((d, -c) for d, c in self.terms))

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def __rmul__(self, scalar: Rational) -> TLElement:
        c = Fraction(scalar)
        return TLElement(self.k, tuple((d, c * cc) for d, cc in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{d}" for d, c in self.terms)


@dataclass(frozen=True)
class DualTLElement:
    """An element of P_k*, stored as coefficients of the dual basis e^D."""

    k: int
    terms: tuple[tuple[TLDiagram, Fraction], ...]

    def __post_init__(self) -> None:
        for d, c in self.terms:
            if d.k != self.k:
                raise ValueError("mixed k in one functional")
        pruned = tuple(sorted(((d, c) for d, c in self.terms if c), key=lambda t: t[0]))
        object.__setattr__(self, "terms", pruned)

    def coeff(self, d: TLDiagram) -> Fraction:
        for dd, c in self.terms:
            if dd == d:
                return c
        return Fraction(0)

    def __call__(self, x: TLElement) -> Fraction:
        """Evaluate the functional (plain index pairing with the dual basis)."""
        return sum((self.coeff(d) * c for d, c in x.terms), Fraction(0))

    def vector(self) -> np.ndarray:
        basis = diagrams(self.k)
        out = linalg.zeros((len(basis),))
        for d, c in self.terms:
            out[basis.index(d)] = c
        return out

    @staticmethod
    def from_vector(k: int, vec) -> DualTLElement:
        basis = diagrams(k)
        return DualTLElement(k, tuple((basis[i], Fraction(vec[i])) for i in range(len(basis))))


def star(x: TLElement) -> TLElement:
    """The involution: mirror each diagram; rational coefficients are fixed."""
    return TLElement(x.k, tuple((star_diagram(d), c) for d, c in x.terms))


def _closure_loops(d: TLDiagram) -> int:
    """Loops of the trace closure (top t joined to bottom t around the side)."""
    n = 2 * d.k
    if n == 0:
        return 0
    glue = [n - 1 - i for i in range(n)]
    return kernel.count_loops(list(d.pairing), glue)


def _stack_loops(x: TLDiagram, y: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack x above y (glue x's bottom row to y's top row)."""
    k = x.k
    n = 2 * k
    match = list(x.pairing) + [p + n for p in y.pairing]
    glue = [-1] * (2 * n)
    for t in range(k):
        glue[n - 1 - t] = n + t
        glue[n + t] = n - 1 - t
    out, loops = kernel.splice(match, glue)
    seq = [-1] * n
    # free points: x's top row keeps its index, y's bottom row maps to the result's
    remap = {i: i for i in range(k)}
    remap.update({n + j: j for j in range(k, n)})
    for a, b in remap.items():
        target = out[a]
        seq[b] = remap[target]
    return TLDiagram(k, tuple(seq)), loops


class TLBackend:
    """P_k spaces at a fixed rational modulus delta >= 2 (default 2)."""

    def __init__(self, delta: Rational | str = 2) -> None:
        d = Fraction(delta)
        if d < 2:
            raise ValueError(f"delta must be >= 2 for positivity, got {d}")
        self.delta = d
        self._gram: dict[int, np.ndarray] = {}
        self._gram_inv: dict[int, np.ndarray] = {}
        self._trace_form: dict[int, np.ndarray] = {}
        self._trace_form_inv: dict[int, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"TLBackend(delta={self.delta})"

    def delta_pow(self, n: int) -> Fraction:
        return self.delta**n

    def multiply(self, x: TLElement, y: TLElement) -> TLElement:
        if x.k != y.k:
            raise ValueError("mismatched k in multiply")
        acc: dict[TLDiagram, Fraction] = {}
        for dx, cx in x.terms:
            for dy, cy in y.terms:
                d, loops = _stack_loops(dx, dy)
                acc[d] = acc.get(d, Fraction(0)) + cx * cy * self.delta_pow(loops)
        return TLElement(x.k, tuple(acc.items()))

    def trace(self, x: TLElement) -> Fraction:
        """The normalised trace: tau(1) = 1."""
        total = Fraction(0)
        for d, c in x.terms:
            total += c * self.delta_pow(_closure_loops(d))
        return total * self.delta_pow(-x.k)

    def inner(self, x: TLElement, y: TLElement) -> Fraction:
        """<x, y> = tau(y* x); symmetric and positive definite over Q."""
        if x.k != y.k:
            raise ValueError("mismatched k in inner product")
        return self.trace(self.multiply(star(y), x))

    def gram_matrix(self, k: int) -> np.ndarray:
        if k not in self._gram:
            basis = diagrams(k)
            els = [TLElement.basis_vector(d) for d in basis]
            self._gram[k] = linalg.from_rows(
                [[self.inner(els[i], els[j]) for j in range(len(basis))] for i in range(len(basis))]
            )
        return self._gram[k]

    def gram_inverse(self, k: int) -> np.ndarray:
        if k not in self._gram_inv:
            self._gram_inv[k] = linalg.inverse(self.gram_matrix(k))
        return self._gram_inv[k]

    def trace_form(self, k: int) -> np.ndarray:
        """The matrix tau(e_i e_j); the coordinate form of the duality map."""
        if k not in self._trace_form:
            basis = diagrams(k)
            els = [TLElement.basis_vector(d) for d in basis]
            self._trace_form[k] = linalg.from_rows(
                [
                    [self.trace(self.multiply(els[i], els[j])) for j in range(len(basis))]
                    for i in range(len(basis))
                ]
            )
        return self._trace_form[k]

    def trace_form_inverse(self, k: int) -> np.ndarray:
        if k not in self._trace_form_inv:
            self._trace_form_inv[k] = linalg.inverse(self.trace_form(k))
        return self._trace_form_inv[k]

    def beta(self, x: TLElement) -> DualTLElement:
        """The duality isomorphism x -> tau(x ._), in dual-basis coordinates."""
        vec = np.dot(self.trace_form(x.k), x.vector())
        return DualTLElement.from_vector(x.k, vec)

    def beta_inv(self, phi: DualTLElement) -> TLElement:
        vec = np.dot(self.trace_form_inverse(phi.k), phi.vector())
        return TLElement.from_vector(phi.k, vec)
