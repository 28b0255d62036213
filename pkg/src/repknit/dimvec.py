"""Vertices of the repetitive quiver and exact dimension vectors on them."""

import re
from typing import NamedTuple


class RepVertex(NamedTuple):
    """The copy of quiver vertex ``base`` in degree ``degree``."""

    base: str
    degree: int

    def __repr__(self):
        return f"{self.base}[{self.degree}]"

    def shifted(self, k):
        return RepVertex(self.base, self.degree + k)


_REP_VERTEX_RE = re.compile(r"^(.+)\[(-?\d+)\]$")


def parse_rep_vertex(text):
    m = _REP_VERTEX_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse repetitive-quiver vertex {text!r}")
    return RepVertex(m.group(1), int(m.group(2)))


class DimVector:
    """Finitely supported map RepVertex -> nonnegative int.  Immutable."""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries=None):
        clean = {}
        for v, n in (entries or {}).items():
            if n < 0:
                raise ValueError(f"negative entry {n} at {v}")
            if n:
                clean[v] = n
        self.entries = clean
        self._hash = hash(frozenset(clean.items()))

    def __getitem__(self, v):
        return self.entries.get(v, 0)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, DimVector) and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other):
        out = dict(self.entries)
        for v, n in other.entries.items():
            out[v] = out.get(v, 0) + n
        return DimVector(out)

    def __sub__(self, other):
        """Exact difference; raises if any entry would go negative."""
        out = dict(self.entries)
        for v, n in other.entries.items():
            out[v] = out.get(v, 0) - n
        return DimVector(out)

    def scaled(self, k):
        return DimVector({v: k * n for v, n in self.entries.items()})

    def dominates(self, other):
        return all(self[v] >= n for v, n in other.entries.items())

    def total(self):
        return sum(self.entries.values())

    def support(self):
        return set(self.entries)

    def degrees(self):
        return {v.degree for v in self.entries}

    def shifted(self, k):
        return DimVector({v.shifted(k): n for v, n in self.entries.items()})

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda it: (it[0].degree, it[0].base))

    def __repr__(self):
        if not self.entries:
            return "0"
        parts = []
        for v, n in self.sorted_items():
            parts.append(f"{v}" if n == 1 else f"{v}^{n}")
        return ".".join(parts)


def unit(v):
    return DimVector({v: 1})
