"""Finite-group representation machinery over the concrete realizations.

A Representation stores generator images only; images of arbitrary elements
are evaluated by walking the group's BFS factorization and memoized.  All
character arithmetic is exact (Fractions and cyclotomic values); there is
no floating fallback anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalInconsistencyError, ValidationError
from .groups import ConjugacyClasses, RealizedGroup
from .linalg import Matrix, as_rational, block_diag, conjugate_scalar, is_zero_scalar


class Subgroup:
    """A subgroup given by an explicit element list inside a realized group.

    Carries its own conjugacy-class data (classes of H, not G-classes), so
    class functions on the subgroup are first-class objects.
    """

    def __init__(self, parent: RealizedGroup, elements, verify: bool = True):
        self.parent = parent
        idx = sorted({parent.index_of(x) for x in elements})
        if not idx:
            raise ValidationError("subgroup needs at least one element")
        self.elements = tuple(parent.elements[i] for i in idx)
        self._parent_indices = frozenset(idx)
        self.index = {x: k for k, x in enumerate(self.elements)}
        if 0 not in self._parent_indices:
            raise ValidationError("subgroup does not contain the identity")
        if parent.order % len(self.elements):
            raise ValidationError("subgroup order does not divide the group order")
        if verify:
            for a in self.elements:
                for b in self.elements:
                    if parent.index_of(a * b) not in self._parent_indices:
                        raise ValidationError("element set is not closed under products")
        self._classes = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self):
        return self.parent.identity

    def index_of(self, el) -> int:
        try:
            return self.index[el]
        except KeyError:
            raise ValidationError(f"element {el!r} is not in the subgroup") from None

    def contains(self, el) -> bool:
        try:
            return self.parent.index_of(el) in self._parent_indices
        except ValidationError:
            return False

    @property
    def classes(self) -> ConjugacyClasses:
        if self._classes is None:
            n = self.order
            class_of = [-1] * n
            reps, sizes = [], []
            inv = [x.inverse() for x in self.elements]
            for i, x in enumerate(self.elements):
                if class_of[i] >= 0:
                    continue
                orbit = set()
                for g, ginv in zip(self.elements, inv):
                    orbit.add(self.index[g * x * ginv])
                for k in orbit:
                    class_of[k] = len(reps)
                reps.append(x)
                sizes.append(len(orbit))
            self._classes = ConjugacyClasses(tuple(reps), tuple(sizes), tuple(class_of))
        return self._classes

    def class_of_element(self, el) -> int:
        return self.classes.class_of[self.index_of(el)]

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.label})"


class ClassFunction:
    """Values on conjugacy classes of a group or subgroup, in class order."""

    __slots__ = ("domain", "values", "name")

    def __init__(self, domain, values, name: str | None = None):
        values = tuple(values)
        if len(values) != domain.classes.count:
            raise ValidationError(
                f"need {domain.classes.count} class values, got {len(values)}"
            )
        self.domain = domain
        self.values = values
        self.name = name

    @property
    def identity_value(self):
        return self.values[0]

    def value_at(self, el):
        return self.values[self.domain.classes.class_of[self.domain.index_of(el)]]

    def pointwise(self, other: "ClassFunction") -> "ClassFunction":
        _same_domain(self, other)
        return ClassFunction(self.domain, [a * b for a, b in zip(self.values, other.values)])

    def __add__(self, other):
        _same_domain(self, other)
        return ClassFunction(self.domain, [a + b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.domain is other.domain and all(
            a == b for a, b in zip(self.values, other.values)
        )

    __hash__ = None

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.domain, [conjugate_scalar(v) for v in self.values], self.name)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"ClassFunction{label}({[str(v) for v in self.values]})"


def _same_domain(f: ClassFunction, g: ClassFunction):
    if f.domain is not g.domain:
        raise ValidationError("class functions live on different class data")


def inner_product(f: ClassFunction, g: ClassFunction):
    """(1/|G|) sum over G of f(x) conj(g(x)), computed classwise; exact."""
    _same_domain(f, g)
    sizes = f.domain.classes.sizes
    acc = 0
    for size, a, b in zip(sizes, f.values, g.values):
        acc = acc + size * (a * conjugate_scalar(b))
    return Fraction(1, f.domain.order) * acc


def trivial_character(domain) -> ClassFunction:
    return ClassFunction(domain, [Fraction(1)] * domain.classes.count, "triv")


def regular_character(domain) -> ClassFunction:
    vals = [Fraction(0)] * domain.classes.count
    vals[0] = Fraction(domain.order)
    return ClassFunction(domain, vals, "reg")


class Representation:
    """Group homomorphism into GL_d, stored by its generator images.

    Construction verifies the defining relations (M_i M_j)^m(i,j) = 1 for
    every generator pair of the group's graph, which also forces each
    generator image to be invertible.
    """

    def __init__(self, group: RealizedGroup, matrices, name: str | None = None):
        matrices = tuple(matrices)
        if len(matrices) != len(group.generators):
            raise ValidationError("need one matrix per generator")
        dims = {m.rows for m in matrices} | {m.cols for m in matrices}
        if len(dims) != 1:
            raise ValidationError("generator matrices must be square of one size")
        self.group = group
        self.matrices = matrices
        self.dim = matrices[0].rows if matrices else 0
        self.name = name
        if self.dim < 1:
            raise ValidationError("representations here have dimension >= 1")
        self._check_relations()
        self._memo = {0: Matrix.identity(self.dim)}
        self._character = None

    def _check_relations(self):
        graph = self.group.graph
        for i in range(len(self.matrices)):
            for j in range(i, len(self.matrices)):
                m = graph.label(i, j)
                p = self.matrices[i] * self.matrices[j]
                acc = Matrix.identity(self.dim)
                for _ in range(m):
                    acc = acc * p
                if not acc.is_identity():
                    raise ValidationError(
                        f"generator images violate the relation (s{i} s{j})^{m} = 1"
                    )

    def matrix_of(self, el) -> Matrix:
        """Image of an arbitrary element, via the group's BFS factorization."""
        group = self.group
        parent, genidx = group.word_dag()
        i = group.index_of(el)
        chain = []
        while i not in self._memo:
            chain.append(i)
            i = parent[i]
        m = self._memo[i]
        for j in reversed(chain):
            m = self.matrices[genidx[j]] * m
            self._memo[j] = m
        return m

    def character(self) -> ClassFunction:
        if self._character is None:
            vals = [self.matrix_of(rep).trace() for rep in self.group.classes.reps]
            self._character = ClassFunction(self.group, vals, self.name)
        return self._character

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"Representation{label}(dim={self.dim} of {self.group.label})"


def character_of(rho: Representation) -> ClassFunction:
    return rho.character()


def direct_sum(rho: Representation, psi: Representation) -> Representation:
    if rho.group is not psi.group:
        raise ValidationError("direct sum needs representations of one group")
    mats = [block_diag([a, b]) for a, b in zip(rho.matrices, psi.matrices)]
    return Representation(rho.group, mats)


def is_irreducible(rho: Representation) -> bool:
    chi = rho.character()
    return inner_product(chi, chi) == 1


def _as_multiplicity(value) -> int:
    q = as_rational(value)
    if q is None or q.denominator != 1 or q < 0:
        raise ValidationError(f"inner product {value!r} is not a nonnegative integer")
    return int(q)


def multiplicity(rho, irr: ClassFunction) -> int:
    """Multiplicity of a verified irreducible character in rho (or its character)."""
    chi = rho.character() if isinstance(rho, Representation) else rho
    return _as_multiplicity(inner_product(chi, irr))


def decompose(rho, basis: list[ClassFunction]) -> list[tuple[int, int]]:
    """(index, multiplicity) pairs of rho against a complete irreducible set."""
    chi = rho.character() if isinstance(rho, Representation) else rho
    out = []
    total = 0
    for i, irr in enumerate(basis):
        m = _as_multiplicity(inner_product(chi, irr))
        if m:
            out.append((i, m))
            total += m * _as_multiplicity(irr.identity_value)
    if total != _as_multiplicity(chi.identity_value):
        raise ValidationError("basis is incomplete: dimensions do not add up")
    return out


def tensor_decompose(chi: ClassFunction, psi: ClassFunction, basis: list[ClassFunction]) -> list[int]:
    """Multiplicities of each basis element in the pointwise product chi * psi."""
    prod = chi.pointwise(psi)
    return [_as_multiplicity(inner_product(prod, irr)) for irr in basis]


def induce_character(chi: ClassFunction, group: RealizedGroup) -> ClassFunction:
    """Induced character, by the brute-force sum over the whole group.

    Ind chi(g) = (1/|H|) * sum over x in G with x^-1 g x in H of chi(x^-1 g x).
    """
    sub = chi.domain
    if not isinstance(sub, Subgroup) or sub.parent is not group:
        raise ValidationError("character domain is not a subgroup of the target group")
    vals = []
    for rep in group.classes.reps:
        acc = 0
        for i, x in enumerate(group.elements):
            xinv = group.elements[group.inverse_index(i)]
            y = xinv * rep * x
            if sub.contains(y):
                acc = acc + chi.values[sub.class_of_element(y)]
        vals.append(Fraction(1, sub.order) * acc)
    out = ClassFunction(group, vals)
    expected_dim = Fraction(group.order, sub.order) * chi.identity_value
    if out.identity_value != expected_dim:
        raise InternalInconsistencyError("induced dimension does not match the index formula")
    return out


def restrict_character(chi: ClassFunction, sub) -> ClassFunction:
    """Restriction to any group-like domain whose elements lie in chi's group."""
    vals = [chi.value_at(rep) for rep in sub.classes.reps]
    return ClassFunction(sub, vals)


class GroupAlgebraElement:
    """Sparse rational combination of group elements, multiplied by convolution."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        self.coeffs = {g: Fraction(c) for g, c in coeffs.items() if c}

    @classmethod
    def from_element(cls, g) -> "GroupAlgebraElement":
        return cls({g: Fraction(1)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, Fraction(0)) + c
        return GroupAlgebraElement(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, Fraction(0)) - c
        return GroupAlgebraElement(out)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            out: dict = {}
            for g, a in self.coeffs.items():
                for h, b in other.coeffs.items():
                    k = g * h
                    out[k] = out.get(k, Fraction(0)) + a * b
            return GroupAlgebraElement(out)
        return GroupAlgebraElement({g: c * Fraction(other) for g, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.coeffs == other.coeffs

    __hash__ = None

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        parts = [f"{c}*{g!r}" for g, c in list(self.coeffs.items())[:4]]
        more = "..." if len(self.coeffs) > 4 else ""
        return f"GroupAlgebraElement({' + '.join(parts)}{more})"


def natural_representation(group: RealizedGroup) -> Representation:
    """Permutation/signed-permutation matrices of the generators (types A, B, D)."""
    try:
        mats = [g.natural_matrix() for g in group.generators]
    except AttributeError:
        raise ValidationError(f"no natural matrix model for {group.label}") from None
    return Representation(group, mats, name="natural")


def regular_representation(group: RealizedGroup) -> Representation:
    """Left-multiplication permutation matrices on the group itself."""
    n = group.order
    mats = []
    for g in group.generators:
        rows = [[0] * n for _ in range(n)]
        for i, x in enumerate(group.elements):
            rows[group.index_of(g * x)][i] = 1
        mats.append(Matrix(rows))
    return Representation(group, mats, name="regular")
