"""Parsing, serialization, and rendering.

Text grammar (authoritative):

    ELEMENT := TERM+            (or the single token "0")
    TERM    := SIGN? (INT '*')? '(' INT (',' INT)* ')'
    SIGN    := '+' | '-'

with whitespace allowed between tokens.  A lone surjection may also be
written compactly as a digit string ("1312") when all its values are at
most 9.  Serialization emits terms in lexicographic order with explicit
signs and omits unit coefficients, so equal elements serialize equally.

JSON documents carry a top-level {"format": "cactus-v1"} marker.

Lobe trees render to graphviz DOT, to standalone SVG (one circle per
lobe, children tangent to their parent at angles set by the attachment
arc), or to an indented text outline.  Rendering is a deterministic
debugging aid; only tangency is guaranteed, not absence of overlaps.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Union

from .cacti import LobeTree, lobe_tree
from .elements import Element
from .errors import ParseError
from .reports import VerificationReport
from .surjections import Surjection

__all__ = [
    "parse_surjection",
    "parse_element",
    "serialize_element",
    "element_to_json",
    "element_from_json",
    "report_to_json",
    "RenderSpec",
    "render_lobe_tree",
]

JSON_FORMAT = "cactus-v1"

_TOKEN = re.compile(r"[+\-*(),]|\d+|\s+|.", re.DOTALL)


class _Tokens:
    def __init__(self, text: str):
        self.items: list[tuple[str, int, int]] = []  # (token, line, column)
        line, col = 1, 1
        for m in _TOKEN.finditer(text):
            tok = m.group()
            if not tok.isspace():
                self.items.append((tok, line, col))
            for ch in tok:
                if ch == "\n":
                    line += 1
                    col = 1
                else:
                    col += 1
        self.pos = 0

    def peek(self) -> str | None:
        return self.items[self.pos][0] if self.pos < len(self.items) else None

    def where(self) -> tuple[int, int]:
        if self.pos < len(self.items):
            _, line, col = self.items[self.pos]
            return line, col
        if self.items:
            tok, line, col = self.items[-1]
            return line, col + len(tok)
        return 1, 1

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", *self.where())
        self.pos += 1
        return tok

    def expect(self, want: str) -> None:
        line, col = self.where()
        tok = self.peek()
        if tok != want:
            raise ParseError(f"expected {want!r}, found {tok!r}", line, col)
        self.pos += 1


def _parse_int(tokens: _Tokens) -> int:
    line, col = tokens.where()
    tok = tokens.take()
    if not tok.isdigit():
        raise ParseError(f"expected an integer, found {tok!r}", line, col)
    return int(tok)


def _parse_paren_sequence(tokens: _Tokens) -> tuple[int, ...]:
    tokens.expect("(")
    values = [_parse_int(tokens)]
    while tokens.peek() == ",":
        tokens.take()
        values.append(_parse_int(tokens))
    tokens.expect(")")
    return tuple(values)


def parse_surjection(text: str) -> Surjection:
    """Parse "(1,3,1,2)" or, when every value is a single digit, "1312"."""
    stripped = text.strip()
    if stripped and stripped.isdigit():
        return Surjection(tuple(int(ch) for ch in stripped))
    tokens = _Tokens(text)
    seq = _parse_paren_sequence(tokens)
    if tokens.peek() is not None:
        raise ParseError(f"trailing input {tokens.peek()!r}", *tokens.where())
    return Surjection(seq)


def parse_element(text: str) -> Element:
    """Parse a signed sum of parenthesized surjections; "0" is the zero element."""
    tokens = _Tokens(text)
    if tokens.peek() is None:
        raise ParseError("empty element", *tokens.where())
    if tokens.peek() == "0":
        tokens.take()
        if tokens.peek() is not None:
            raise ParseError(f"trailing input {tokens.peek()!r}", *tokens.where())
        return Element.zero()
    terms: list[tuple[Surjection, int]] = []
    while tokens.peek() is not None:
        sign = 1
        if tokens.peek() in ("+", "-"):
            sign = -1 if tokens.take() == "-" else 1
        coeff = 1
        tok = tokens.peek()
        if tok is not None and tok.isdigit():
            coeff = _parse_int(tokens)
            tokens.expect("*")
        seq = _parse_paren_sequence(tokens)
        terms.append((Surjection(seq), sign * coeff))
    return Element(terms)


def serialize_element(a: Element) -> str:
    """Canonical text form; parse_element inverts it exactly."""
    return str(a)


def element_to_json(a: Element) -> dict:
    return {
        "format": JSON_FORMAT,
        "terms": [{"coeff": c, "seq": list(u.seq)} for u, c in a.terms()],
    }


def element_from_json(doc: Union[dict, str]) -> Element:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or "terms" not in doc:
        raise ParseError("JSON element must be an object with a 'terms' list")
    fmt = doc.get("format", JSON_FORMAT)
    if fmt != JSON_FORMAT:
        raise ParseError(f"unsupported format {fmt!r}")
    terms = []
    for entry in doc["terms"]:
        terms.append((Surjection(tuple(entry["seq"])), int(entry["coeff"])))
    return Element(terms)


def report_to_json(report: VerificationReport) -> dict:
    return report.to_json()


@dataclass(frozen=True)
class RenderSpec:
    """Output format and geometry for lobe-tree rendering."""

    format: str = "text"
    root_radius: float = 60.0
    child_ratio: float = 0.55
    stroke_width: float = 2.0

    def __post_init__(self):
        if self.format not in ("dot", "svg", "text"):
            raise ValueError(f"unknown render format {self.format!r}")
        if not 0.0 < self.child_ratio < 1.0:
            raise ValueError(f"child_ratio {self.child_ratio} must be in (0,1)")
        if self.root_radius <= 0 or self.stroke_width <= 0:
            raise ValueError("radius and stroke width must be positive")


def render_lobe_tree(tree: Union[LobeTree, Surjection], spec: RenderSpec) -> str:
    """Render a lobe tree (or the cactus sequence that defines one)."""
    if isinstance(tree, Surjection):
        tree = lobe_tree(tree)
    if spec.format == "dot":
        return _to_dot(tree)
    if spec.format == "svg":
        return _to_svg(tree, spec)
    return _to_text(tree)


def _to_dot(tree: LobeTree) -> str:
    lines = ["digraph cactus {", "  node [shape=circle];"]
    labels: list[int] = []

    def collect(node: LobeTree) -> None:
        labels.append(node.label)
        for child in node.children():
            collect(child)

    collect(tree)
    for label in sorted(labels):
        lines.append(f"  {label};")

    def edges(node: LobeTree) -> None:
        for slot, children in enumerate(node.slots, start=1):
            for child in children:
                lines.append(f"  {node.label} -> {child.label} [label=\"{slot}\"];")
                edges(child)

    edges(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_text(tree: LobeTree) -> str:
    lines: list[str] = []

    def walk(node: LobeTree, depth: int, via: str) -> None:
        arcs = "arc" if node.arcs == 1 else "arcs"
        lines.append(f"{'  ' * depth}{via}lobe {node.label} [{node.arcs} {arcs}]")
        for slot, children in enumerate(node.slots, start=1):
            for child in children:
                walk(child, depth + 1, f"after arc {slot}: ")

    walk(tree, 0, "")
    return "\n".join(lines) + "\n"


def _to_svg(tree: LobeTree, spec: RenderSpec) -> str:
    circles: list[tuple[float, float, float, int]] = []

    def place(node: LobeTree, cx: float, cy: float, radius: float, entry: float) -> None:
        circles.append((cx, cy, radius, node.label))
        child_radius = radius * spec.child_ratio
        m = node.arcs
        for slot, children in enumerate(node.slots, start=1):
            count = len(children)
            for idx, child in enumerate(children):
                # attachment angle inside arc `slot`, anticlockwise from the
                # entry point; siblings in one slot are spread across the arc
                frac = (slot - 1 + (idx + 1) / (count + 1)) / m
                theta = entry + 2 * math.pi * frac
                dist = radius + child_radius
                place(
                    child,
                    cx + dist * math.cos(theta),
                    cy + dist * math.sin(theta),
                    child_radius,
                    theta + math.pi,
                )

    root_entry = math.pi / 2  # root point drawn at the bottom (SVG y grows down)
    place(tree, 0.0, 0.0, spec.root_radius, root_entry)

    pad = spec.root_radius * 0.25 + spec.stroke_width
    min_x = min(cx - r for cx, cy, r, _ in circles) - pad
    max_x = max(cx + r for cx, cy, r, _ in circles) + pad
    min_y = min(cy - r for cx, cy, r, _ in circles) - pad
    max_y = max(cy + r for cx, cy, r, _ in circles) + pad

    def fmt(x: float) -> str:
        return f"{x:.2f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{fmt(min_x)} {fmt(min_y)} {fmt(max_x - min_x)} {fmt(max_y - min_y)}">'
        ),
    ]
    for cx, cy, r, label in circles:
        lines.append(
            f'  <circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(r)}" '
            f'fill="none" stroke="black" stroke-width="{fmt(spec.stroke_width)}"/>'
        )
        lines.append(
            f'  <text x="{fmt(cx)}" y="{fmt(cy)}" text-anchor="middle" '
            f'dominant-baseline="central" font-size="{fmt(r * 0.6)}">{label}</text>'
        )
    # root marker: a small square at the root point, kept off the circle count
    rx, ry = 0.0, spec.root_radius
    side = spec.root_radius * 0.12
    lines.append(
        f'  <rect x="{fmt(rx - side / 2)}" y="{fmt(ry - side / 2)}" '
        f'width="{fmt(side)}" height="{fmt(side)}" fill="black"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
