"""Direct combinatorial counts, independent of the series machinery.

A colour class is a pair (part size, colour): even sizes have r colours,
odd sizes s colours. Within a class the first occurrence may be overlined,
so a class used k >= 1 times contributes two objects and unused contributes
one. Per class this is (1 + q^d)/(1 - q^d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
ENUMERATION_CAP = 12


def _rs(p) -> tuple[int, int]:
    r, s = (p.r, p.s) if hasattr(p, "r") else p
    if r < 1 or s < 1:
        raise ValueError(f"need r, s >= 1, got r={r}, s={s}")
    return r, s


def _class_counts(r: int, s: int, order: int, sizes: Iterable[int] | None):
    sizes = range(1, order) if sizes is None else sizes
    for d in sizes:
        yield d, (r if d % 2 == 0 else s)


def count_overcolored(p, order: int, sizes: Iterable[int] | None = None) -> list[int]:
    """Overlined coloured partition counts for n = 0..order-1.

    ``sizes`` fixes the order in which part sizes are folded in (defaults to
    ascending); the result does not depend on it.
    """
    r, s = _rs(p)
    a = [0] * order
    a[0] = 1
    for d, classes in _class_counts(r, s, order, sizes):
        for _ in range(classes):
            # divide by (1 - q^d)
            for n in range(d, order):
                a[n] += a[n - d]
            # multiply by (1 + q^d)
            for n in range(order - 1, d - 1, -1):
                a[n] += a[n - d]
    return a


def count_colored(p, order: int) -> list[int]:
    """Coloured partition counts (no overlines) for n = 0..order-1."""
    r, s = _rs(p)
    a = [0] * order
    a[0] = 1
    for d, classes in _class_counts(r, s, order, None):
        for _ in range(classes):
            for n in range(d, order):
                a[n] += a[n - d]
    return a


@dataclass(frozen=True, order=True)
class Part:
    size: int
    color: int
    overlined: bool = False


@dataclass(frozen=True)
class OvercoloredPartition:
    parts: tuple[Part, ...]

    @property
    def total(self) -> int:
        return sum(p.size for p in self.parts)

    def render(self, r: int = 1, s: int = 1) -> str:
        """Largest part first; overlines as a trailing ``'``, colours as subscripts.

        The subscript is left off when the part's parity only has one colour.
        """
        if not self.parts:
            return "∅"
        bits = []
        for p in self.parts:
            ncolors = r if p.size % 2 == 0 else s
            text = str(p.size)
            if ncolors > 1:
                text += str(p.color).translate(SUBSCRIPTS)
            if p.overlined:
                text += "'"
            bits.append(text)
        return " + ".join(bits)

    def __str__(self):
        return self.render()


def enumerate_small(p, n: int, cap: int = ENUMERATION_CAP) -> list[OvercoloredPartition]:
    """Every overlined coloured partition of n, explicitly.

    Parts are listed by decreasing (size, colour) and within a class the
    overlined copy comes first.
    """
    r, s = _rs(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")
    classes = [(d, c) for d in range(n, 0, -1)
               for c in range(1, (r if d % 2 == 0 else s) + 1)]
    out: list[OvercoloredPartition] = []

    def walk(idx: int, remaining: int, acc: list[Part]):
        if remaining == 0:
            out.append(OvercoloredPartition(tuple(acc)))
            return
        if idx == len(classes):
            return
        d, c = classes[idx]
        for k in range(remaining // d, 0, -1):
            for over in (False, True):
                block = [Part(d, c, True)] + [Part(d, c)] * (k - 1) if over else [Part(d, c)] * k
                walk(idx + 1, remaining - k * d, acc + block)
        walk(idx + 1, remaining, acc)

    walk(0, n, [])
    return out
