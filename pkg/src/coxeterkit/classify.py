"""Recognition of finite Coxeter graphs against the Dynkin+ catalog.

Matching is structural (path/fork shape plus bond labels); the positive-
definiteness test of the Gram matrix then runs as an independent check,
and any disagreement between the two raises, since it can only mean a bug
in one of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .errors import (
    GuardError,
    InternalInconsistencyError,
    UnsupportedTypeError,
    ValidationError,
)
from .graphs import INFINITY, CoxeterGraph, connected_components, gram_matrix

_FAMILIES = ("A", "B", "D", "E", "F", "H", "I2")

# Sign tolerance for irrational minors; exact zeros are detected exactly first.
_SIGN_TOLERANCE = 1e-9


@dataclass(frozen=True, order=True)
class TypeLabel:
    """Name of an irreducible finite Coxeter type, e.g. A4, B3, I2(7).

    For classification output, single edges labeled 3 and 4 are always the
    canonical A2 and B2, so I2(m) labels carry m >= 5; dihedral realizations
    accept any m >= 3.
    """

    family: str
    rank: int
    bond: int | None = None  # m, for I2 only

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 1,  # B1 = Z/2 exists as a group; classification emits n >= 2
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "H": n in (3, 4),
            "I2": n == 2,
        }[f]
        if not ok:
            raise ValidationError(f"invalid rank {n} for family {f}")
        if f == "I2":
            if not (isinstance(self.bond, int) and self.bond >= 3):
                raise ValidationError(f"I2 needs a bond label m >= 3, got {self.bond!r}")
        elif self.bond is not None:
            raise ValidationError("bond label is only meaningful for I2")

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.bond})"
        return f"{self.family}{self.rank}"


def parse_type_label(text: str) -> TypeLabel:
    text = text.strip()
    if text.startswith("I2(") and text.endswith(")"):
        try:
            return TypeLabel("I2", 2, int(text[3:-1]))
        except ValueError as e:
            raise ValidationError(f"bad type string {text!r}") from e
    if text and text[0] in "ABDEFH" and text[1:].isdigit():
        return TypeLabel(text[0], int(text[1:]))
    raise ValidationError(f"bad type string {text!r}")


def canonical_label(t: TypeLabel) -> TypeLabel:
    """Collapse low-rank coincidences to the one name the classifier emits.

    B1 is the A1 graph; single edges labeled 3 and 4 are A2 and B2.  All
    other labels, including I2(6), are already canonical.
    """
    if t.family == "B" and t.rank == 1:
        return TypeLabel("A", 1)
    if t.family == "I2" and t.bond == 3:
        return TypeLabel("A", 2)
    if t.family == "I2" and t.bond == 4:
        return TypeLabel("B", 2)
    return t


def coxeter_group_order(t: TypeLabel) -> int:
    if t.family == "A":
        return math.factorial(t.rank + 1)
    if t.family == "B":
        return 2 ** t.rank * math.factorial(t.rank)
    if t.family == "D":
        return 2 ** (t.rank - 1) * math.factorial(t.rank)
    if t.family == "I2":
        return 2 * t.bond
    raise UnsupportedTypeError(f"group order of exceptional type {t} is out of scope")


def catalog_graph(t: TypeLabel) -> CoxeterGraph:
    """Canonical graph of the type, with a fixed vertex numbering.

    A_n: the path 0-1-...-(n-1).
    B_n: edge (0,1) labeled 4, then the path 1-2-...-(n-1).
    D_n: tips 0 and 1 joined to the branch vertex 2, then the path 2-3-...-(n-1).
    E_n: path 0-...-(n-2) with vertex n-1 attached to vertex 2.
    F4:  path with the middle edge labeled 4.  H3/H4: terminal edge labeled 5.
    I2(m): one edge labeled m.
    """
    f, n = t.family, t.rank
    path = [(i, i + 1, 3) for i in range(n - 1)]
    if f == "A":
        return CoxeterGraph(n, path)
    if f == "B":
        if n == 1:
            return CoxeterGraph(1)
        return CoxeterGraph(n, [(0, 1, 4)] + [(i, i + 1, 3) for i in range(1, n - 1)])
    if f == "D":
        return CoxeterGraph(n, [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)])
    if f == "E":
        return CoxeterGraph(n, [(i, i + 1, 3) for i in range(n - 2)] + [(2, n - 1, 3)])
    if f == "F":
        return CoxeterGraph(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)])
    if f == "H":
        return CoxeterGraph(n, [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)])
    return CoxeterGraph(2, [(0, 1, t.bond)])


def affine_catalog(max_rank: int = 8) -> list[tuple[str, CoxeterGraph]]:
    """The standard connected positive semi-definite (determinant-zero) graphs.

    Parameterized families are instantiated with subscript n up to
    ``max_rank`` (a subscript-n graph has n+1 vertices).  D~n starts at
    n = 4, the smallest subscript for which D_n itself is defined.
    """
    out: list[tuple[str, CoxeterGraph]] = []
    out.append(("A~1", CoxeterGraph(2, [(0, 1, INFINITY)])))
    for n in range(2, max_rank + 1):
        cycle = [(i, (i + 1) % (n + 1), 3) for i in range(n + 1)]
        out.append((f"A~{n}", CoxeterGraph(n + 1, cycle)))
    out.append(("B~2=C~2", CoxeterGraph(3, [(0, 1, 4), (1, 2, 4)])))
    for n in range(3, max_rank + 1):
        edges = [(0, 2, 3), (1, 2, 3)]
        edges += [(i, i + 1, 3) for i in range(2, n - 1)]
        edges.append((n - 1, n, 4))
        out.append((f"B~{n}", CoxeterGraph(n + 1, edges)))
    for n in range(3, max_rank + 1):
        edges = [(0, 1, 4)] + [(i, i + 1, 3) for i in range(1, n - 1)] + [(n - 1, n, 4)]
        out.append((f"C~{n}", CoxeterGraph(n + 1, edges)))
    for n in range(4, max_rank + 1):
        edges = [(0, 2, 3), (1, 2, 3)]
        edges += [(i, i + 1, 3) for i in range(2, n - 2)]
        edges += [(n - 1, n - 2, 3), (n, n - 2, 3)]
        out.append((f"D~{n}", CoxeterGraph(n + 1, edges)))
    out.append(("E~6", CoxeterGraph(7, [(i, i + 1, 3) for i in range(4)] + [(2, 5, 3), (5, 6, 3)])))
    out.append(("E~7", CoxeterGraph(8, [(i, i + 1, 3) for i in range(6)] + [(3, 7, 3)])))
    out.append(("E~8", CoxeterGraph(9, [(i, i + 1, 3) for i in range(7)] + [(2, 8, 3)])))
    out.append(("F~4", CoxeterGraph(5, [(0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)])))
    out.append(("G~2", CoxeterGraph(3, [(0, 1, 3), (1, 2, 6)])))
    return out


@dataclass(frozen=True)
class Witness:
    """Evidence that a graph is not of finite type."""

    kind: str  # "zero-determinant" or "nonpositive-minor"
    index: int  # minor size (1-based); for zero-determinant this is n
    value: object

    def __str__(self):
        if self.kind == "zero-determinant":
            return "det = 0"
        return f"minor {self.index} = {self.value}"


@dataclass(frozen=True)
class ComponentResult:
    vertices: tuple[int, ...]
    label: TypeLabel | None
    witness: Witness | None


@dataclass(frozen=True)
class ClassificationResult:
    components: tuple[ComponentResult, ...]

    @property
    def is_finite(self) -> bool:
        return all(c.label is not None for c in self.components)

    def labels(self) -> list[TypeLabel]:
        if not self.is_finite:
            raise ValidationError("graph has a non-finite component")
        return [c.label for c in self.components]

    def __str__(self):
        parts = []
        for c in self.components:
            parts.append(str(c.label) if c.label is not None else f"NotFinite ({c.witness})")
        return " + ".join(parts)


def _minor_sign(value) -> int:
    """Exact sign: cyclotomic zero test first, then a float with tolerance."""
    if isinstance(value, Cyclotomic):
        if value.is_zero():
            return 0
        f = value.to_float()
        if abs(f) <= _SIGN_TOLERANCE:
            raise InternalInconsistencyError(
                f"minor too close to zero for reliable sign: {value!r}"
            )
        return 1 if f > 0 else -1
    q = Fraction(value)
    return (q > 0) - (q < 0)


def is_positive_definite(g: CoxeterGraph) -> tuple[bool, Witness | None]:
    """All leading principal minors of the Gram matrix positive?

    On failure the witness carries the first non-positive minor.
    """
    minors = gram_matrix(g).leading_principal_minors()
    for k, m in enumerate(minors, start=1):
        s = _minor_sign(m)
        if s <= 0:
            kind = "zero-determinant" if (k == g.n and s == 0) else "nonpositive-minor"
            return False, Witness(kind, k, m)
    return True, None


def _not_finite_witness(g: CoxeterGraph) -> Witness:
    """Preferred witness: an exactly-zero determinant, else the first negative minor."""
    minors = gram_matrix(g).leading_principal_minors()
    det = minors[-1]
    if _minor_sign(det) == 0:
        return Witness("zero-determinant", g.n, det)
    for k, m in enumerate(minors, start=1):
        if _minor_sign(m) <= 0:
            return Witness("nonpositive-minor", k, m)
    raise InternalInconsistencyError("witness requested for a positive definite graph")


def _path_sequence(g: CoxeterGraph):
    """Bond labels along a path graph, or None if g is not a path."""
    if g.n == 1:
        return []
    degs = [g.degree(v) for v in range(g.n)]
    ends = [v for v in range(g.n) if degs[v] == 1]
    if len(ends) != 2 or any(d > 2 for d in degs) or len(g.labels) != g.n - 1:
        return None
    seq = []
    prev, cur = None, min(ends)
    while True:
        nxt = [w for w in g.neighbors(cur) if w != prev]
        if not nxt:
            break
        seq.append(g.label(cur, nxt[0]))
        prev, cur = cur, nxt[0]
    return seq


def _arm_lengths(g: CoxeterGraph, branch: int):
    """Edge counts of the three arms hanging off a degree-3 vertex."""
    arms = []
    for start in g.neighbors(branch):
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [w for w in g.neighbors(cur) if w != prev]
            if len(nxt) != 1:
                break
            length += 1
            prev, cur = cur, nxt[0]
        arms.append((length, cur))
    return arms


def _match_connected(g: CoxeterGraph) -> TypeLabel | None:
    """Structural match of a connected graph against the catalog."""
    if any(m is INFINITY for m in g.labels.values()):
        return None
    if g.n == 1:
        return TypeLabel("A", 1)
    degs = [g.degree(v) for v in range(g.n)]
    if max(degs) >= 4:
        return None
    branches = [v for v in range(g.n) if degs[v] == 3]
    if len(branches) > 1:
        return None
    if branches:
        if any(m != 3 for m in g.labels.values()):
            return None
        if len(g.labels) != g.n - 1:  # a cycle through the branch vertex
            return None
        arms = _arm_lengths(g, branches[0])
        ends = [v for _, v in arms]
        if len(set(ends)) != 3 or any(g.degree(v) != 1 for v in ends):
            return None
        lengths = sorted(length for length, _ in arms)
        if lengths[0] == lengths[1] == 1:
            return TypeLabel("D", lengths[2] + 3)
        if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
            return TypeLabel("E", lengths[2] + 4)
        return None
    seq = _path_sequence(g)
    if seq is None:
        return None
    if g.n == 2:
        m = seq[0]
        if m == 3:
            return TypeLabel("A", 2)
        if m == 4:
            return TypeLabel("B", 2)
        return TypeLabel("I2", 2, m)
    heavy = [(k, m) for k, m in enumerate(seq) if m != 3]
    if not heavy:
        return TypeLabel("A", g.n)
    if len(heavy) > 1:
        return None
    pos, m = heavy[0]
    terminal = pos in (0, len(seq) - 1)
    if m == 4:
        if terminal:
            return TypeLabel("B", g.n)
        if g.n == 4:
            return TypeLabel("F", 4)
        return None
    if m == 5 and terminal and g.n in (3, 4):
        return TypeLabel("H", g.n)
    return None


def classify(g: CoxeterGraph) -> ClassificationResult:
    """Name each connected component, or mark it NotFinite with a witness.

    The structural match and the positive-definiteness test must agree on
    every component; a mismatch raises InternalInconsistencyError.
    """
    results = []
    for comp, vertices in connected_components(g):
        label = _match_connected(comp)
        pd, _ = is_positive_definite(comp)
        if (label is not None) != pd:
            raise InternalInconsistencyError(
                f"catalog match ({label}) disagrees with positive definiteness ({pd}) "
                f"on component {vertices}"
            )
        if label is None:
            results.append(ComponentResult(vertices, None, _not_finite_witness(comp)))
        else:
            results.append(ComponentResult(vertices, label, None))
    return ClassificationResult(tuple(results))


def classification_catalog(max_rank: int = 8, dihedral_bonds=range(5, 13)) -> list[TypeLabel]:
    """Every catalog label of rank <= max_rank (I2 over the given bonds)."""
    out = [TypeLabel("A", n) for n in range(1, max_rank + 1)]
    out += [TypeLabel("B", n) for n in range(2, max_rank + 1)]
    out += [TypeLabel("D", n) for n in range(4, max_rank + 1)]
    out += [TypeLabel("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(TypeLabel("F", 4))
    out += [TypeLabel("H", n) for n in (3, 4) if n <= max_rank]
    out += [TypeLabel("I2", 2, m) for m in dihedral_bonds]
    return out
