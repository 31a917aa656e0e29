"""Root systems, bases, reflections, and the geometric representation.

Types A, B and D are realized with rational coordinates in the standard
inner product.  I2(m) is realized in the basis of its two simple roots,
carrying the canonical bilinear form of its graph, which keeps every
coordinate inside the real subfield of Q(zeta_2m).

Vectors are plain tuples of int/Fraction/Cyclotomic entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .classify import TypeLabel
from .cyclotomic import Cyclotomic
from .errors import (
    GuardError,
    InternalInconsistencyError,
    UnsupportedTypeError,
    ValidationError,
)
from .graphs import CoxeterGraph, gram_matrix
from .groups import MAX_ORDER, realize
from .linalg import Matrix, invert_scalar, is_zero_scalar

_SIGN_TOLERANCE = 1e-9


def _dot(u, v, gram: Matrix | None):
    if gram is None:
        acc = 0
        for a, b in zip(u, v):
            acc = acc + a * b
        return acc
    acc = 0
    for i, a in enumerate(u):
        if is_zero_scalar(a):
            continue
        for j, b in enumerate(v):
            if not is_zero_scalar(b):
                acc = acc + a * gram.entries[i][j] * b
    return acc


def reflect(alpha, lam, gram: Matrix | None = None):
    """Reflection of lam in the hyperplane orthogonal to alpha.

    Fixes the orthogonal complement of alpha pointwise and negates alpha;
    uses the standard inner product unless a Gram matrix is supplied.
    """
    alpha = tuple(alpha)
    lam = tuple(lam)
    if len(alpha) != len(lam):
        raise ValidationError("vectors of different lengths")
    norm = _dot(alpha, alpha, gram)
    if is_zero_scalar(norm):
        raise ValidationError("cannot reflect in a vector of zero norm")
    coeff = (2 * _dot(lam, alpha, gram)) * invert_scalar(norm)
    return tuple(x - coeff * a for x, a in zip(lam, alpha))


def _scalar_key(x, conductor: int):
    if isinstance(x, Cyclotomic):
        return x.canonical_key(conductor)
    return ("q", Fraction(x))


def _vector_key(v, conductor: int):
    return tuple(_scalar_key(x, conductor) for x in v)


def _common_conductor(vectors) -> int:
    c = 1
    for v in vectors:
        for x in v:
            if isinstance(x, Cyclotomic):
                c = lcm(c, x.conductor)
    return c


def _sign_of(x) -> int:
    if isinstance(x, Cyclotomic):
        if x.is_zero():
            return 0
        f = x.to_float()
        if abs(f) <= _SIGN_TOLERANCE:
            raise InternalInconsistencyError(f"coordinate too close to zero for its sign: {x!r}")
        return 1 if f > 0 else -1
    q = Fraction(x)
    return (q > 0) - (q < 0)


def _lex_positive(v) -> bool:
    for x in v:
        s = _sign_of(x)
        if s:
            return s > 0
    return False


@dataclass(frozen=True)
class RootSystem:
    """Finite set of roots, closed under its own reflections.

    Construction mechanically checks the three axioms: finiteness of the
    nonzero root list, intersection of each root line with the system being
    exactly {root, -root}, and stability under every root reflection.
    """

    roots: tuple
    label: TypeLabel
    gram: Matrix | None = None
    _conductor: int = field(init=False, default=1, repr=False, compare=False)

    def __post_init__(self):
        roots = tuple(tuple(v) for v in self.roots)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "_conductor", _common_conductor(roots))
        self._check_axioms()

    def _check_axioms(self):
        cond = self._conductor
        keys = {}
        for v in self.roots:
            if all(is_zero_scalar(x) for x in v):
                raise ValidationError("zero vector in root system")
            k = _vector_key(v, cond)
            if k in keys:
                raise ValidationError("repeated root")
            keys[k] = v
        for v in self.roots:
            # line through v meets the system in exactly {v, -v}
            neg = _vector_key(tuple(-x for x in v), cond)
            if neg not in keys:
                raise ValidationError("root system is not symmetric under negation")
            for w in self.roots:
                if self._proportional(v, w):
                    kw = _vector_key(w, cond)
                    if kw != _vector_key(v, cond) and kw != neg:
                        raise ValidationError("a root line contains more than two roots")
        for alpha in self.roots:
            image = {_vector_key(reflect(alpha, v, self.gram), cond) for v in self.roots}
            if image != set(keys):
                raise ValidationError("root system is not stable under its reflections")

    @staticmethod
    def _proportional(v, w) -> bool:
        # all 2x2 minors vanish
        for (a, b), (c, d) in itertools.combinations(zip(v, w), 2):
            if not is_zero_scalar(a * d - b * c):
                return False
        return True

    @property
    def count(self) -> int:
        return len(self.roots)

    def contains(self, v) -> bool:
        k = _vector_key(tuple(v), self._conductor)
        return any(k == _vector_key(w, self._conductor) for w in self.roots)


def _unit(n: int, i: int, value=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(value)
    return tuple(v)


def root_system(t: TypeLabel, max_order: int = MAX_ORDER) -> RootSystem:
    """Standard root system of an A/B/D/I2 type, rank <= 8."""
    if t.family not in ("A", "B", "D", "I2"):
        raise UnsupportedTypeError(f"no root system realization for {t}")
    if t.rank > 8:
        raise GuardError(f"rank {t.rank} exceeds the bound 8")
    n = t.rank
    roots = []
    if t.family == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    v = [Fraction(0)] * dim
                    v[i], v[j] = Fraction(1), Fraction(-1)
                    roots.append(tuple(v))
        return RootSystem(tuple(roots), t)
    if t.family in ("B", "D"):
        if t.family == "B":
            for i in range(n):
                roots.append(_unit(n, i, 1))
                roots.append(_unit(n, i, -1))
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [Fraction(0)] * n
                        v[i], v[j] = Fraction(si), Fraction(sj)
                        roots.append(tuple(v))
        return RootSystem(tuple(roots), t)
    # I2(m): orbit of the simple-root basis vectors under the two simple
    # reflections, in simple-root coordinates with the graph's bilinear form.
    gram = gram_matrix(catalog_graph_of(t))
    simples = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    cond = 2 * t.bond
    seen = {}
    queue = [tuple(v) for v in simples]
    for v in queue:
        k = _vector_key(v, cond)
        if k in seen:
            continue
        seen[k] = v
        for s in simples:
            w = reflect(s, v, gram)
            if _vector_key(w, cond) not in seen:
                queue.append(w)
        nv = tuple(-x for x in v)
        if _vector_key(nv, cond) not in seen:
            queue.append(nv)
    return RootSystem(tuple(seen.values()), t, gram)


def catalog_graph_of(t: TypeLabel) -> CoxeterGraph:
    from .classify import catalog_graph

    return catalog_graph(t)


def compute_base(rs: RootSystem) -> list[tuple]:
    """A base: positive-system simple roots for the lexicographic functional.

    Positivity of a root is the sign of its first nonzero coordinate.  A
    positive root is simple exactly when its reflection sends no other
    positive root negative (this characterization is valid for the
    non-crystallographic dihedral systems too, where "not a sum of two
    positive roots" would fail).  The defining property -- every root is a
    one-signed combination of the base -- is re-verified by exact solves.
    """
    cond = rs._conductor
    positives = [v for v in rs.roots if _lex_positive(v)]
    base = []
    for alpha in positives:
        ka = _vector_key(alpha, cond)
        for beta in positives:
            if _vector_key(beta, cond) == ka:
                continue
            if not _lex_positive(reflect(alpha, beta, rs.gram)):
                break
        else:
            base.append(alpha)
    _verify_base(rs, base)
    return base


def _verify_base(rs: RootSystem, base: list) -> None:
    mat = Matrix(list(zip(*base)))  # columns are the base vectors
    for v in rs.roots:
        x = mat.solve(list(v))
        if x is None:
            raise InternalInconsistencyError("root outside the span of the base")
        signs = {_sign_of(c) for c in x}
        if 1 in signs and -1 in signs:
            raise InternalInconsistencyError("root with mixed-sign base coefficients")


def reflection_matrix(alpha, dim: int, gram: Matrix | None = None) -> Matrix:
    """Matrix of the reflection in alpha on coordinate space of size dim."""
    cols = []
    for i in range(dim):
        e = [Fraction(0)] * dim
        e[i] = Fraction(1)
        cols.append(reflect(alpha, tuple(e), gram))
    return Matrix(list(zip(*cols)))


def geometric_rep(t: TypeLabel, max_order: int = MAX_ORDER) -> dict:
    """The faithful reflection representation on the simple-root basis.

    Maps every group element to its matrix, built multiplicatively from the
    generator images sigma_s; re-visits during the closure walk check the
    homomorphism property, and injectivity is checked by distinct matrices.
    """
    if t.family not in ("A", "B", "D", "I2"):
        raise UnsupportedTypeError(f"no geometric realization for {t}")
    if t.rank > 8:
        raise GuardError(f"rank {t.rank} exceeds the bound 8")
    group = realize(t, max_order)
    gram = gram_matrix(group.graph)
    n = group.graph.n
    gens = []
    for s in range(n):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                base = Fraction(1) if i == j else Fraction(0)
                if i == s:
                    b = gram.entries[s][j]
                    base = base - 2 * b
                row.append(base)
            rows.append(row)
        gens.append(Matrix(rows))

    parent, genidx = group.word_dag()
    mats: list[Matrix | None] = [None] * group.order
    mats[0] = Matrix.identity(n)
    order_ = list(range(group.order))
    order_.sort(key=lambda i: _dag_depth(parent, i))
    for i in order_[1:]:
        mats[i] = gens[genidx[i]] * mats[parent[i]]
    # injectivity via canonical matrix fingerprints
    cond = 1
    for g in gens:
        cond = lcm(cond, _common_conductor(g.entries))
    seen = {}
    for i, m in enumerate(mats):
        k = tuple(_vector_key(r, cond) for r in m.entries)
        if k in seen:
            raise InternalInconsistencyError("geometric representation is not injective")
        seen[k] = i
    return {group.elements[i]: mats[i] for i in range(group.order)}


def _dag_depth(parent, i) -> int:
    d = 0
    while parent[i] >= 0:
        i = parent[i]
        d += 1
    return d


def fixed_space_dimension(matrices: list[Matrix]) -> int:
    """Dimension of the common fixed space of a list of square matrices."""
    if not matrices:
        raise ValidationError("need at least one matrix")
    n = matrices[0].rows
    rows = []
    for m in matrices:
        for i in range(n):
            rows.append([m.entries[i][j] - (1 if i == j else 0) for j in range(n)])
    stacked = Matrix(rows)
    return n - stacked.field_rank()
