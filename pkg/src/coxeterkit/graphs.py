"""Coxeter graphs, Coxeter matrices and the associated bilinear form.

A graph on vertices 0..n-1 stores only the bond labels m(i,j) >= 3 (absent
pairs mean m = 2, i.e. commuting generators).  The label ``INFINITY`` marks
an unbounded bond; on disk it is encoded as 0, since genuine labels are
always >= 2.

Graph JSON format::

    {"n": 4, "edges": [[0, 1, 3], [1, 2, 3], [2, 3, 4]]}

Edge order is irrelevant, duplicate edges are rejected, and a third entry
of 0 means INFINITY.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .cyclotomic import real_cos_pi_over
from .errors import ValidationError
from .linalg import Matrix

INFINITY = math.inf


def _is_valid_label(m) -> bool:
    if m is INFINITY:
        return True
    return isinstance(m, int) and not isinstance(m, bool) and m >= 2


class CoxeterGraph:
    """Labeled graph of a Coxeter system; immutable after construction."""

    __slots__ = ("n", "labels")

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
        labels: dict[tuple[int, int], object] = {}
        seen = set()
        if isinstance(edges, dict):
            items = ((i, j, m) for (i, j), m in edges.items())
        else:
            items = ((e[0], e[1], e[2]) for e in edges)
        for i, j, m in items:
            if not (isinstance(i, int) and isinstance(j, int)):
                raise ValidationError(f"vertex indices must be integers, got ({i!r}, {j!r})")
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"vertex out of range in edge ({i}, {j})")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValidationError(f"duplicate edge {key}")
            seen.add(key)
            if not _is_valid_label(m):
                raise ValidationError(f"bond label must be an integer >= 2 or INFINITY, got {m!r}")
            if m != 2:
                labels[key] = m
        self.n = n
        self.labels = labels

    def label(self, i: int, j: int):
        """m(i, j); 1 on the diagonal, 2 for non-adjacent pairs."""
        if i == j:
            return 1
        return self.labels.get((min(i, j), max(i, j)), 2)

    def edges(self) -> list[tuple[int, int, object]]:
        return [(i, j, m) for (i, j), m in sorted(self.labels.items(), key=_edge_sort)]

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.labels:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.n == other.n and self.labels == other.labels

    __hash__ = None

    def __repr__(self):
        return f"CoxeterGraph({self.n}, {self.edges()!r})"


def _edge_sort(item):
    (i, j), m = item
    return (i, j)


class CoxeterMatrix:
    """Symmetric matrix of bond orders: 1 on the diagonal, >= 2 (or INFINITY) off it."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValidationError("Coxeter matrix must be square and non-empty")
        for i in range(n):
            if rows[i][i] != 1:
                raise ValidationError(f"diagonal entry at {i} must be 1")
            for j in range(n):
                if i != j:
                    if rows[i][j] != rows[j][i]:
                        raise ValidationError(f"matrix is not symmetric at ({i}, {j})")
                    if not _is_valid_label(rows[i][j]):
                        raise ValidationError(
                            f"off-diagonal entry at ({i}, {j}) must be >= 2 or INFINITY"
                        )
        self.entries = rows

    @property
    def n(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.entries]!r})"


def graph_from_matrix(m: CoxeterMatrix) -> CoxeterGraph:
    """Graph with an edge wherever the bond order is at least 3."""
    edges = []
    for i in range(m.n):
        for j in range(i + 1, m.n):
            if m.entries[i][j] != 2:
                edges.append((i, j, m.entries[i][j]))
    return CoxeterGraph(m.n, edges)


def matrix_from_graph(g: CoxeterGraph) -> CoxeterMatrix:
    return CoxeterMatrix(
        [[g.label(i, j) for j in range(g.n)] for i in range(g.n)]
    )


def gram_matrix(g: CoxeterGraph) -> Matrix:
    """Matrix of the canonical bilinear form: -cos(pi/m(i,j)), unit diagonal.

    Entries that happen to be rational are stored as Fractions.
    """
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(Fraction(1))
            else:
                c = -real_cos_pi_over(g.label(i, j))
                row.append(c.rational_value() if c.is_rational() else c)
        rows.append(row)
    return Matrix(rows)


def connected_components(g: CoxeterGraph) -> list[tuple[CoxeterGraph, tuple[int, ...]]]:
    """Induced connected subgraphs, each with its original-vertex tuple.

    The k-th vertex of a component graph corresponds to original vertex
    ``vertices[k]``; components are ordered by smallest original vertex.
    """
    seen = set()
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(w for w in g.neighbors(v) if w not in comp)
        seen |= comp
        vertices = tuple(sorted(comp))
        back = {v: k for k, v in enumerate(vertices)}
        edges = [
            (back[i], back[j], m)
            for (i, j), m in g.labels.items()
            if i in comp and j in comp
        ]
        comps.append((CoxeterGraph(len(vertices), edges), vertices))
    return comps


def subgraph(g: CoxeterGraph, remove_vertices=(), lower_labels=None) -> CoxeterGraph:
    """Subgraph in the Coxeter sense: delete vertices and/or strictly lower labels.

    ``lower_labels`` maps an edge (i, j) in original indices to its new label,
    which must be >= 2 and strictly below the current one (2 removes the edge).
    Surviving vertices are re-indexed in increasing order.
    """
    remove = set(remove_vertices)
    for v in remove:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValidationError(f"unknown vertex {v!r}")
    labels = dict(g.labels)
    for (i, j), new in (lower_labels or {}).items():
        key = (min(i, j), max(i, j))
        if not (0 <= key[0] < g.n and 0 <= key[1] < g.n and key[0] != key[1]):
            raise ValidationError(f"unknown edge {key}")
        old = g.label(*key)
        if not _is_valid_label(new):
            raise ValidationError(f"new label {new!r} is not a valid bond order")
        if not new < old:
            raise ValidationError(f"label at {key} may only decrease (old {old}, new {new})")
        if new == 2:
            labels.pop(key, None)
        else:
            labels[key] = new
    keep = [v for v in range(g.n) if v not in remove]
    if not keep:
        raise ValidationError("cannot remove every vertex")
    back = {v: k for k, v in enumerate(keep)}
    edges = [
        (back[i], back[j], m)
        for (i, j), m in labels.items()
        if i not in remove and j not in remove
    ]
    return CoxeterGraph(len(keep), edges)


def parse_graph_json(text: str) -> CoxeterGraph:
    """Parse the graph JSON format; raises ValidationError with position info."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict) or "n" not in data:
        raise ValidationError('graph JSON must be an object with an "n" field')
    n = data["n"]
    edges = []
    for e in data.get("edges", []):
        if not (isinstance(e, list) and len(e) == 3):
            raise ValidationError(f"each edge must be a [i, j, m] triple, got {e!r}")
        i, j, m = e
        if m == 0:
            m = INFINITY
        edges.append((i, j, m))
    return CoxeterGraph(n, edges)


def graph_to_json(g: CoxeterGraph) -> str:
    edges = [[i, j, 0 if m is INFINITY else m] for i, j, m in g.edges()]
    return json.dumps({"n": g.n, "edges": edges}, sort_keys=True)
