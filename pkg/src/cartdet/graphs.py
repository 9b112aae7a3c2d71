"""Graph families (paths, cycles, grids, tori, cylinders, Möbius ladders).

Parameters are vertex counts. The classical formulas are stated in terms of
``m`` and ``n`` with ``P_{m-1}`` factors, so the translation is fixed here:

* ``Grid(p, q)``      is ``P_{m-1} □ P_{n-1}`` with ``m = p + 1``, ``n = q + 1``
* ``Cylinder(p, n)``  is ``P_{m-1} □ C_n``     with ``m = p + 1``
* ``Torus(m, n)``     is ``C_m □ C_n``
* ``MobiusLadder(n)`` has ``2n`` vertices

The product vertex ``(u, v)`` of ``G1 □ G2`` gets index ``u * |V(G2)| + v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterator, Union

from .matrix import IntMatrix


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..vertex_count-1``.

    ``adjacency[u]`` is the sorted tuple of neighbours of ``u``; with sorted
    lists two graphs are equal exactly when they have the same edge set.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency must have one entry per vertex")
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbours of {u} must be sorted and distinct")
            for v in nbrs:
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if not 0 <= v < self.vertex_count:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge ({u}, {v}) is not symmetric")

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(n) for n in self.adjacency]

    def is_regular(self, k: int) -> bool:
        return all(len(n) == k for n in self.adjacency)


def build_path(p: int) -> Graph:
    if p < 1:
        raise ValueError(f"path needs at least 1 vertex, got {p}")
    return Graph.from_edges(p, ((i, i + 1) for i in range(p - 1)))


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian (box) product with row-major vertex indexing."""
    n2 = g2.vertex_count
    adjacency = []
    for u in range(g1.vertex_count):
        for v in range(n2):
            nbrs = [u2 * n2 + v for u2 in g1.adjacency[u]]
            nbrs.extend(u * n2 + v2 for v2 in g2.adjacency[v])
            adjacency.append(tuple(sorted(nbrs)))
    return Graph(g1.vertex_count * n2, tuple(adjacency))


def build_mobius(n: int) -> Graph:
    """Möbius ladder on ``2n`` vertices: the cycle ``C_2n`` plus rungs ``(i, i+n)``."""
    if n < 2:
        raise ValueError(f"Möbius ladder needs n >= 2, got {n}")
    size = 2 * n
    cycle = ((i, (i + 1) % size) for i in range(size))
    rungs = ((i, i + n) for i in range(n))
    return Graph.from_edges(size, [*cycle, *rungs])


def adjacency_matrix(g: Graph) -> IntMatrix:
    n = g.vertex_count
    entries = [0] * (n * n)
    for u, nbrs in enumerate(g.adjacency):
        for v in nbrs:
            entries[u * n + v] = 1
    return IntMatrix(n, n, tuple(entries))


def _check_min(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


@dataclass(frozen=True)
class Path:
    p: int
    kind: ClassVar[str] = "path"

    def __post_init__(self) -> None:
        _check_min("p", self.p, 1)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.p,)

    @property
    def order(self) -> int:
        return self.p


@dataclass(frozen=True)
class Cycle:
    n: int
    kind: ClassVar[str] = "cycle"

    def __post_init__(self) -> None:
        _check_min("n", self.n, 3)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.n,)

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class Grid:
    """``P_p □ P_q``; the classical parameters are ``m = p + 1``, ``n = q + 1``."""

    p: int
    q: int
    kind: ClassVar[str] = "grid"

    def __post_init__(self) -> None:
        _check_min("p", self.p, 1)
        _check_min("q", self.q, 1)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.p, self.q)

    @property
    def order(self) -> int:
        return self.p * self.q

    @property
    def mn(self) -> tuple[int, int]:
        return self.p + 1, self.q + 1


@dataclass(frozen=True)
class Torus:
    m: int
    n: int
    kind: ClassVar[str] = "torus"

    def __post_init__(self) -> None:
        _check_min("m", self.m, 3)
        _check_min("n", self.n, 3)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.m, self.n)

    @property
    def order(self) -> int:
        return self.m * self.n


@dataclass(frozen=True)
class Cylinder:
    """``P_p □ C_n``; the classical path parameter is ``m = p + 1``."""

    p: int
    n: int
    kind: ClassVar[str] = "cylinder"

    def __post_init__(self) -> None:
        _check_min("p", self.p, 1)
        _check_min("n", self.n, 3)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.p, self.n)

    @property
    def order(self) -> int:
        return self.p * self.n

    @property
    def mn(self) -> tuple[int, int]:
        return self.p + 1, self.n


@dataclass(frozen=True)
class MobiusLadder:
    n: int
    kind: ClassVar[str] = "mobius"

    def __post_init__(self) -> None:
        _check_min("n", self.n, 2)

    @property
    def params(self) -> tuple[int, ...]:
        return (self.n,)

    @property
    def order(self) -> int:
        return 2 * self.n


GraphFamily = Union[Path, Cycle, Grid, Torus, Cylinder, MobiusLadder]

FAMILIES: dict[str, type] = {
    cls.kind: cls for cls in (Path, Cycle, Grid, Torus, Cylinder, MobiusLadder)
}


def make_family(kind: str, *params: int) -> GraphFamily:
    """Build a family from its name and positional parameters."""
    try:
        cls = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {sorted(FAMILIES)}")
    arity = 2 if kind in ("grid", "torus", "cylinder") else 1
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return cls(*params)


def describe(f: GraphFamily) -> str:
    return f"{f.kind}({', '.join(map(str, f.params))})"


def realize(f: GraphFamily) -> Graph:
    if isinstance(f, Path):
        return build_path(f.p)
    if isinstance(f, Cycle):
        return build_cycle(f.n)
    if isinstance(f, Grid):
        return cartesian_product(build_path(f.p), build_path(f.q))
    if isinstance(f, Torus):
        return cartesian_product(build_cycle(f.m), build_cycle(f.n))
    if isinstance(f, Cylinder):
        return cartesian_product(build_path(f.p), build_cycle(f.n))
    if isinstance(f, MobiusLadder):
        return build_mobius(f.n)
    raise TypeError(f"not a graph family: {f!r}")
