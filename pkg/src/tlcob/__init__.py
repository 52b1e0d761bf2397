"""tlcob: exact evaluation of decorated 1+1d cobordism diagrams over the
Temperley-Lieb algebra at rational modulus."""

from .colors import Color, ObjectSignature, bar_color, bar_signature, color, disjoint_union
from .tl import TLBackend, TLDiagram, TLElement, DualTLElement, diagrams, dimension, star

__all__ = [
    "Color",
    "ObjectSignature",
    "bar_color",
    "bar_signature",
    "color",
    "disjoint_union",
    "TLBackend",
    "TLDiagram",
    "TLElement",
    "DualTLElement",
    "diagrams",
    "dimension",
    "star",
]

__version__ = "0.1.0"
