"""Colours of decorated circles and multiplicity signatures of objects.

A colour is an element of ``{0+, 0-, 1, 2, 3, ...}`` together with a bar flag.
The bar is the involution induced by orientation reversal; barred colours are
the ones whose circles are read against the surface orientation ("good"
boundary circles), unbarred ones are read with it ("bad").  The size ``|k|``
is 0 for both zero colours and the integer otherwise; a circle of colour k
carries ``2|k|`` marked points.

Objects are finitely supported multiplicity functions on colours.  Colour
strings are ``"0+"``, ``"0-"``, ``"k"`` with a ``"~"`` suffix for the bar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True)
class Color:
    """A circle colour: base size (0 with a sign, or an integer >= 1) + bar flag."""

    base: int
    sign: str = ""  # "+" or "-" when base == 0, "" otherwise
    barred: bool = False

    def __post_init__(self) -> None:
        if self.base < 0:
            raise ValueError(f"colour base must be >= 0, got {self.base}")
        if self.base == 0:
            if self.sign not in ("+", "-"):
                raise ValueError("zero colours need a '+' or '-' sign")
        elif self.sign != "":
            raise ValueError("positive colours carry no sign")

    @property
    def size(self) -> int:
        """|k|: the number of marked-point pairs on a circle of this colour."""
        return self.base

    def bar(self) -> Color:
        return Color(self.base, self.sign, not self.barred)

    def unbarred(self) -> Color:
        """The representative of this colour in C (drop the bar)."""
        return Color(self.base, self.sign, False)

    def sort_key(self) -> tuple[int, int, int]:
        # 0+ < 0- < 1 < 2 < ... < 0+~ < 0-~ < 1~ < ...
        return (int(self.barred), self.base, 0 if self.sign != "-" else (1 if self.base == 0 else 0))

    def __str__(self) -> str:
        body = f"0{self.sign}" if self.base == 0 else str(self.base)
        return body + ("~" if self.barred else "")

    @staticmethod
    def parse(text: str) -> Color:
        s = text.strip()
        barred = s.endswith("~")
        if barred:
            s = s[:-1]
        if s in ("0+", "0-"):
            return Color(0, s[1], barred)
        if not s.isdigit():
            raise ValueError(f"bad colour string {text!r}")
        n = int(s)
        if n == 0:
            raise ValueError("the zero colour needs a sign: '0+' or '0-'")
        return Color(n, "", barred)


def color(spec: int | str | Color) -> Color:
    """Coerce an int (>= 1), string, or Color into a Color."""
    if isinstance(spec, Color):
        return spec
    if isinstance(spec, int):
        return Color(spec)
    return Color.parse(spec)


ZERO_PLUS = Color(0, "+")
ZERO_MINUS = Color(0, "-")


def bar_color(k: Color) -> Color:
    """The colour involution (toggle the bar, keep the base)."""
    return k.bar()


@dataclass(frozen=True)
class ObjectSignature:
    """Finitely supported multiplicity function Color -> Z+, i.e. an object.

    Stored as colour/count pairs in canonical colour order, so signatures are
    hashable and iteration order is deterministic.
    """

    counts: tuple[tuple[Color, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for c, n in self.counts:
            if n <= 0:
                raise ValueError("multiplicities must be positive")
            if c in seen:
                raise ValueError(f"duplicate colour {c} in signature")
            seen.add(c)
        ordered = tuple(sorted(self.counts, key=lambda cn: cn[0].sort_key()))
        object.__setattr__(self, "counts", ordered)

    @staticmethod
    def of(mapping: Mapping[int | str | Color, int] | Iterable[tuple[int | str | Color, int]] = ()) -> ObjectSignature:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        merged: dict[Color, int] = {}
        for k, n in items:
            c = color(k)
            merged[c] = merged.get(c, 0) + int(n)
        return ObjectSignature(tuple((c, n) for c, n in merged.items() if n))

    def __getitem__(self, k: int | str | Color) -> int:
        c = color(k)
        for cc, n in self.counts:
            if cc == c:
                return n
        return 0

    def __bool__(self) -> bool:
        return bool(self.counts)

    def items(self) -> tuple[tuple[Color, int], ...]:
        return self.counts

    def slots(self) -> Iterator[Color]:
        """The slot colours in canonical order, one entry per multiplicity unit."""
        for c, n in self.counts:
            yield from (c,) * n

    @property
    def total(self) -> int:
        return sum(n for _, n in self.counts)

    @property
    def norm(self) -> int:
        """Sum of f(k)|k| over the support; the total marked-point pair count."""
        return sum(n * c.size for c, n in self.counts)

    def __str__(self) -> str:
        if not self.counts:
            return "0"
        return " ".join(f"{c}:{n}" for c, n in self.counts)


EMPTY_SIGNATURE = ObjectSignature()


def disjoint_union(a: ObjectSignature, b: ObjectSignature) -> ObjectSignature:
    """Pointwise sum of multiplicities; the empty signature is the identity."""
    merged: dict[Color, int] = dict(a.counts)
    for c, n in b.counts:
        merged[c] = merged.get(c, 0) + n
    return ObjectSignature(tuple(merged.items()))


def bar_signature(f: ObjectSignature) -> ObjectSignature:
    """Precompose the multiplicities with the colour involution."""
    return ObjectSignature(tuple((c.bar(), n) for c, n in f.counts))
