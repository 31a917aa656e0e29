"""Concrete realizations of the infinite Coxeter families.

Elements are immutable values: permutations of 0..n-1 (type A), signed
permutations (types B and D), and dihedral words (type I2).  Throughout the
package elements act on the left and (gh)(x) = g(h(x)); the signed product
rule is pinned against signed permutation matrices, which are the
authoritative model.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .classify import TypeLabel, catalog_graph, coxeter_group_order
from .errors import GuardError, InternalInconsistencyError, ValidationError
from .graphs import CoxeterGraph
from .linalg import Matrix

MAX_ORDER = 100_000


class Permutation:
    """Bijection of {0..n-1}; images[i] = sigma(i)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        img = list(range(n))
        img[i], img[j] = j, i
        return cls(img)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.size != other.size:
            raise ValidationError("permutations act on different point sets")
        img = self.images
        return Permutation(tuple(img[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths (fixed points included), sorted descending."""
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def natural_matrix(self) -> Matrix:
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[self.images[i]][i] = 1
        return Matrix(rows)

    def text(self) -> str:
        """Cycle notation on 1-based points, 'e' for the identity."""
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.images!r})"


class SignedPermutation:
    """Pair (signs, perm) acting on R^n as the matrix diag(signs) @ P(perm).

    The basis vector e_i maps to signs[perm(i)] * e_perm(i); the product rule
    below is exactly composition of those matrices.
    """

    __slots__ = ("signs", "perm")

    def __init__(self, signs, perm: Permutation):
        signs = tuple(signs)
        if any(s not in (1, -1) for s in signs):
            raise ValidationError(f"signs must be +-1, got {signs!r}")
        if len(signs) != perm.size:
            raise ValidationError("sign vector length does not match the permutation")
        self.signs = signs
        self.perm = perm

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls((1,) * n, Permutation.identity(n))

    @classmethod
    def sign_flip(cls, n: int, i: int) -> "SignedPermutation":
        signs = [1] * n
        signs[i] = -1
        return cls(signs, Permutation.identity(n))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> "SignedPermutation":
        return cls((1,) * n, Permutation.transposition(n, i, j))

    @property
    def size(self) -> int:
        return self.perm.size

    def is_even(self) -> bool:
        prod = 1
        for s in self.signs:
            prod *= s
        return prod == 1

    def __mul__(self, other):
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if self.size != other.size:
            raise ValidationError("signed permutations act on different point sets")
        sinv = self.perm.inverse()
        signs = tuple(a * other.signs[sinv(i)] for i, a in enumerate(self.signs))
        return SignedPermutation(signs, self.perm * other.perm)

    def inverse(self) -> "SignedPermutation":
        pinv = self.perm.inverse()
        signs = tuple(self.signs[self.perm(i)] for i in range(self.size))
        return SignedPermutation(signs, pinv)

    def __eq__(self, other):
        return (
            isinstance(other, SignedPermutation)
            and self.signs == other.signs
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((self.signs, self.perm.images))

    def is_identity(self) -> bool:
        return all(s == 1 for s in self.signs) and self.perm.is_identity()

    def natural_matrix(self) -> Matrix:
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[self.perm(i)][i] = self.signs[self.perm(i)]
        return Matrix(rows)

    def signed_cycle_type(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(positive-cycle lengths, negative-cycle lengths), each sorted descending.

        A cycle is negative when the product of signs over its points is -1;
        this datum is a complete conjugacy invariant.
        """
        pos, neg = [], []
        for cyc in self.perm.cycles(include_fixed=True):
            prod = 1
            for i in cyc:
                prod *= self.signs[i]
            (pos if prod == 1 else neg).append(len(cyc))
        return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))

    def text(self) -> str:
        signs = "[" + ",".join("+1" if s == 1 else "-1" for s in self.signs) + "]"
        return f"{signs} {self.perm.text()}"

    def __repr__(self):
        return f"SignedPermutation({self.signs!r}, {self.perm!r})"


class DihedralElement:
    """Word r^k s^e in the dihedral group of the regular m-gon."""

    __slots__ = ("m", "rotation", "reflected")

    def __init__(self, m: int, rotation: int, reflected: bool):
        if m < 3:
            raise ValidationError(f"dihedral group needs m >= 3, got {m}")
        self.m = m
        self.rotation = rotation % m
        self.reflected = bool(reflected)

    @classmethod
    def identity(cls, m: int) -> "DihedralElement":
        return cls(m, 0, False)

    def __mul__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        if self.m != other.m:
            raise ValidationError("dihedral elements from different groups")
        if self.reflected:
            return DihedralElement(
                self.m, self.rotation - other.rotation, not other.reflected
            )
        return DihedralElement(self.m, self.rotation + other.rotation, other.reflected)

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return self
        return DihedralElement(self.m, -self.rotation, False)

    def __eq__(self, other):
        return (
            isinstance(other, DihedralElement)
            and self.m == other.m
            and self.rotation == other.rotation
            and self.reflected == other.reflected
        )

    def __hash__(self):
        return hash((self.m, self.rotation, self.reflected))

    def is_identity(self) -> bool:
        return self.rotation == 0 and not self.reflected

    def text(self) -> str:
        if self.rotation == 0:
            return "s" if self.reflected else "e"
        r = "r" if self.rotation == 1 else f"r^{self.rotation}"
        return f"{r} s" if self.reflected else r

    def __repr__(self):
        return f"DihedralElement({self.m}, {self.rotation}, {self.reflected})"


def element_text(el) -> str:
    return el.text()


@dataclass(frozen=True)
class ConjugacyClasses:
    reps: tuple  # first element of each class in enumeration order
    sizes: tuple[int, ...]
    class_of: tuple[int, ...]  # element index -> class index

    @property
    def count(self) -> int:
        return len(self.reps)


class RealizedGroup:
    """A finite Coxeter group with enumerated elements and Coxeter generators.

    ``elements[0]`` is the identity and the element order is canonical for
    the type, so conjugacy classes and all derived data are deterministic.
    Lazy caches (classes, word factorization, inverses) compute idempotent
    values, so concurrent readers at worst duplicate work.
    """

    def __init__(self, label: TypeLabel, graph: CoxeterGraph, generators, elements):
        self.label = label
        self.graph = graph
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise InternalInconsistencyError("duplicate elements in enumeration")
        if not self.elements[0].is_identity():
            raise InternalInconsistencyError("enumeration must start at the identity")
        self._classes = None
        self._dag = None
        self._inverses = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    def index_of(self, el) -> int:
        try:
            return self.index[el]
        except KeyError:
            raise ValidationError(f"element {el!r} does not belong to {self.label}") from None

    def multiply(self, a, b):
        self.index_of(a)
        self.index_of(b)
        return a * b

    def inverse_index(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = tuple(self.index[g.inverse()] for g in self.elements)
        return self._inverses[i]

    @property
    def classes(self) -> ConjugacyClasses:
        if self._classes is None:
            self._classes = self._compute_classes()
        return self._classes

    def _compute_classes(self) -> ConjugacyClasses:
        n = self.order
        class_of = [-1] * n
        reps, sizes = [], []
        for i, x in enumerate(self.elements):
            if class_of[i] >= 0:
                continue
            cls = len(reps)
            orbit = set()
            for j, g in enumerate(self.elements):
                y = g * x * self.elements[self.inverse_index(j)]
                orbit.add(self.index[y])
            for k in orbit:
                class_of[k] = cls
            reps.append(x)
            sizes.append(len(orbit))
        return ConjugacyClasses(tuple(reps), tuple(sizes), tuple(class_of))

    def class_of_element(self, el) -> int:
        return self.classes.class_of[self.index_of(el)]

    def word_dag(self):
        """BFS factorization: parent[i], gen[i] with elements[i] = gen * parent.

        Doubles as a check that the Coxeter generators generate the whole
        enumerated group.
        """
        if self._dag is None:
            n = self.order
            parent = [-1] * n
            genidx = [-1] * n
            seen = [False] * n
            seen[0] = True
            queue = [0]
            reached = 1
            for cur in queue:
                x = self.elements[cur]
                for gi, g in enumerate(self.generators):
                    j = self.index[g * x]
                    if not seen[j]:
                        seen[j] = True
                        parent[j] = cur
                        genidx[j] = gi
                        queue.append(j)
                        reached += 1
            if reached != n:
                raise InternalInconsistencyError(
                    f"generators of {self.label} reach only {reached} of {n} elements"
                )
            self._dag = (tuple(parent), tuple(genidx))
        return self._dag

    def __repr__(self):
        return f"RealizedGroup({self.label}, order={self.order})"


def _type_a_generators(n: int):
    # vertices i <-> adjacent transposition (i, i+1) on n+1 points
    return [Permutation.transposition(n + 1, i, i + 1) for i in range(n)]


def _type_b_generators(n: int):
    gens = [SignedPermutation.sign_flip(n, 0)]
    gens += [SignedPermutation.swap(n, i - 1, i) for i in range(1, n)]
    return gens


def _type_d_generators(n: int):
    # vertex 0: e_0 + e_1 reflection (swap with both signs flipped); the rest
    # are plain adjacent transpositions, matching the catalog vertex order.
    swapflip = SignedPermutation(
        [-1, -1] + [1] * (n - 2), Permutation.transposition(n, 0, 1)
    )
    gens = [swapflip, SignedPermutation.swap(n, 0, 1)]
    gens += [SignedPermutation.swap(n, i - 1, i) for i in range(2, n)]
    return gens


def _enumerate_closure(generators, identity, bound: int):
    """Breadth-first closure under left multiplication by the generators."""
    elements = [identity]
    seen = {identity}
    for x in elements:
        for g in generators:
            y = g * x
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > bound:
                    raise InternalInconsistencyError("closure exceeded the expected order")
    return elements


@lru_cache(maxsize=None)
def realize(label: TypeLabel, max_order: int = MAX_ORDER) -> RealizedGroup:
    """Concrete group for an A/B/D/I2 label, with canonical element order."""
    order = coxeter_group_order(label)  # raises UnsupportedTypeError for E/F/H
    if order > max_order:
        raise GuardError(f"|{label}| = {order} exceeds the bound {max_order}")
    f, n = label.family, label.rank
    graph = catalog_graph(label)
    if f == "A":
        gens = _type_a_generators(n)
        elements = [Permutation(p) for p in itertools.permutations(range(n + 1))]
    elif f == "B":
        gens = _type_b_generators(n)
        elements = [
            SignedPermutation(s, Permutation(p))
            for p in itertools.permutations(range(n))
            for s in itertools.product((1, -1), repeat=n)
        ]
    elif f == "D":
        gens = _type_d_generators(n)
        elements = [
            sp
            for p in itertools.permutations(range(n))
            for s in itertools.product((1, -1), repeat=n)
            if (sp := SignedPermutation(s, Permutation(p))).is_even()
        ]
    else:
        m = label.bond
        gens = [DihedralElement(m, 0, True), DihedralElement(m, 1, True)]
        elements = _enumerate_closure(gens, DihedralElement.identity(m), order)
    group = RealizedGroup(label, graph, gens, elements)
    if group.order != order:
        raise InternalInconsistencyError(
            f"enumerated {group.order} elements of {label}, expected {order}"
        )
    return group


def enumerate_group(label: TypeLabel, max_order: int = MAX_ORDER) -> list:
    return list(realize(label, max_order).elements)


def conjugacy_classes(label: TypeLabel, max_order: int = MAX_ORDER) -> list[tuple[object, int]]:
    """(representative, class size) pairs in canonical order."""
    g = realize(label, max_order)
    c = g.classes
    return list(zip(c.reps, c.sizes))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return p.cycle_type()


def element_order(x) -> int:
    k = 1
    y = x
    while not y.is_identity():
        y = y * x
        k += 1
    return k


def verify_presentation(label: TypeLabel, max_order: int = MAX_ORDER) -> bool:
    """Do the concrete generators satisfy exactly the Coxeter relations?

    Checks order(s_i s_j) == m(i, j) for every generator pair (including
    s_i^2 = e on the diagonal) and that the generators generate the whole
    enumerated group.
    """
    group = realize(label, max_order)
    graph = group.graph
    gens = group.generators
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            m = graph.label(i, j)
            if element_order(gens[i] * gens[j]) != m:
                return False
    group.word_dag()  # raises if the generators do not generate
    return True
