"""Finite integer-coefficient formal sums of surjections.

Coefficients are exact Python integers; terms with coefficient zero are
never stored.  Terms are kept in a plain dict and sorted lexicographically
whenever an ordering is visible (iteration, serialization, equality of
string forms).
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Union

from .errors import NotHomogeneousError
from .surjections import Surjection

__all__ = ["Element", "as_element"]

TermsLike = Union[Mapping[Surjection, int], Iterable[tuple[Surjection, int]]]


class Element:
    """A formal sum of surjections with nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()):
        data: dict[Surjection, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for u, c in items:
            if not isinstance(u, Surjection):
                raise TypeError(f"basis term {u!r} is not a Surjection")
            if c:
                new = data.get(u, 0) + c
                if new:
                    data[u] = new
                elif u in data:
                    del data[u]
        object.__setattr__(self, "_terms", data)

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def single(cls, u: Surjection, coeff: int = 1) -> "Element":
        return cls(((u, coeff),))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def terms(self) -> list[tuple[Surjection, int]]:
        """Terms sorted lexicographically by sequence."""
        return sorted(self._terms.items(), key=lambda item: item[0].seq)

    def support(self) -> list[Surjection]:
        return sorted(self._terms, key=lambda u: u.seq)

    def coefficient(self, u: Surjection) -> int:
        return self._terms.get(u, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self._terms == other._terms

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        data = dict(self._terms)
        for u, c in other._terms.items():
            new = data.get(u, 0) + c
            if new:
                data[u] = new
            elif u in data:
                del data[u]
        out = Element.__new__(Element)
        object.__setattr__(out, "_terms", data)
        return out

    def __neg__(self) -> "Element":
        out = Element.__new__(Element)
        object.__setattr__(out, "_terms", {u: -c for u, c in self._terms.items()})
        return out

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> "Element":
        if c == 0:
            return Element.zero()
        out = Element.__new__(Element)
        object.__setattr__(out, "_terms", {u: c * k for u, k in self._terms.items()})
        return out

    def __rmul__(self, c: int) -> "Element":
        if not isinstance(c, int):
            return NotImplemented
        return self.scale(c)

    def bidegree(self) -> Optional[tuple[int, int]]:
        """(arity, degree) shared by all terms, or None for the zero element.

        Raises NotHomogeneousError when terms disagree.
        """
        it = iter(self._terms)
        first = next(it, None)
        if first is None:
            return None
        bideg = (first.arity, first.degree)
        for u in it:
            if (u.arity, u.degree) != bideg:
                raise NotHomogeneousError(
                    f"mixed terms: {first} is {bideg}, {u} is {(u.arity, u.degree)}"
                )
        return bideg

    def apply_linear(self, f: Callable[[Surjection], "Element"]) -> "Element":
        """Extend the basis-level map f linearly: sum of coeff * f(term)."""
        data: dict[Surjection, int] = {}
        for u, c in self._terms.items():
            try:
                image = f(u)
            except Exception as exc:
                try:
                    tagged = type(exc)(f"{exc} [at basis term {u}]")
                except Exception:
                    raise exc
                raise tagged from exc
            for w, d in image._terms.items():
                new = data.get(w, 0) + c * d
                if new:
                    data[w] = new
                elif w in data:
                    del data[w]
        out = Element.__new__(Element)
        object.__setattr__(out, "_terms", data)
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for u, c in self.terms():
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            body = str(u) if mag == 1 else f"{mag}*{u}"
            parts.append(f"{sign}{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


def as_element(x: Union[Element, Surjection]) -> Element:
    """Coerce a lone basis surjection to the element with coefficient one."""
    if isinstance(x, Element):
        return x
    if isinstance(x, Surjection):
        return Element.single(x)
    raise TypeError(f"expected Element or Surjection, got {type(x).__name__}")
