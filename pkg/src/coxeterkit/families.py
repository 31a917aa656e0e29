"""Irreducible characters of the B, D and I2 families.

B_n is handled by the little-group method over its normal sign subgroup:
orbits of sign characters, block stabilizers S_a x S_b, extension, and
brute-force induction.  D_n (n = 4 here) restricts the B_n characters down
its index-2 inclusion; the two halves of each self-paired character are
separated by explicitly splitting the induced module with a commutant
eigenspace.  I2(m) induces from its rotation subgroup.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classify import TypeLabel
from .cyclotomic import Cyclotomic
from .errors import (
    GuardError,
    InternalInconsistencyError,
    UnsupportedTypeError,
    ValidationError,
)
from .groups import Permutation, RealizedGroup, SignedPermutation, realize
from .linalg import Matrix
from .reps import (
    ClassFunction,
    Representation,
    Subgroup,
    induce_character,
    inner_product,
    restrict_character,
)
from .specht import (
    hook_dimension,
    partition_text,
    partitions_of,
    specht_module,
    symmetric_character_value,
    validate_partition,
)

SIGN_ORBIT_GUARD = 8
BN_CHARACTER_GUARD = 4
BN_DIMENSION_GUARD = 8
DIHEDRAL_GUARD = 24


@dataclass(frozen=True)
class SignCharacter:
    """Character of the sign subgroup {+-1}^n given by exponents in {0,1}^n."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValidationError("sign character exponents must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    def value(self, signs) -> int:
        out = 1
        for s, b in zip(signs, self.bits):
            if b:
                out *= s
        return out

    def __str__(self):
        return "psi(" + ",".join(str(b) for b in self.bits) + ")"


@dataclass(frozen=True)
class BipartitionLabel:
    """Ordered pair of partitions with |lam| + |mu| = n."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        validate_partition(self.lam)
        validate_partition(self.mu)

    @property
    def a(self) -> int:
        return sum(self.lam)

    @property
    def b(self) -> int:
        return sum(self.mu)

    @property
    def n(self) -> int:
        return self.a + self.b

    def __str__(self):
        return f"B:({partition_text(self.lam)}|{partition_text(self.mu)})"


@dataclass(frozen=True)
class DnLabel:
    """Unordered pair {lam, mu} for an irreducible restriction, or a split half."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    half: str | None = None  # "+" or "-" when lam == mu

    def __post_init__(self):
        if self.half is not None and (self.half not in "+-" or self.lam != self.mu):
            raise ValidationError("split labels need lam == mu and half in {+, -}")

    def __str__(self):
        if self.half is None:
            return f"D:{{{partition_text(self.lam)}|{partition_text(self.mu)}}}"
        return f"D:({partition_text(self.lam)},{partition_text(self.mu)},{self.half})"


def bipartitions(n: int) -> list[BipartitionLabel]:
    """All ordered pairs, largest first block first (the trivial label leads)."""
    out = []
    for a in range(n, -1, -1):
        for lam in partitions_of(a):
            for mu in partitions_of(n - a):
                out.append(BipartitionLabel(lam, mu))
    return out


def sign_character_orbits(n: int) -> list[tuple[SignCharacter, Subgroup]]:
    """Orbit representatives of S_n on sign characters, with their stabilizers.

    The representative with i ones carries them in the trailing coordinates,
    and its stabilizer is the block subgroup S_a x S_b (a = n - i zeros).
    For n = 1 the acting group is trivial and the stabilizer slot is None.
    """
    if n > SIGN_ORBIT_GUARD:
        raise GuardError(f"sign-character orbits capped at n = {SIGN_ORBIT_GUARD}")
    if n < 1:
        raise ValidationError("need n >= 1")
    sn = realize(TypeLabel("A", n - 1)) if n >= 2 else None
    out = []
    for ones in range(n + 1):
        a = n - ones
        rep = SignCharacter((0,) * a + (1,) * ones)
        if sn is None:
            out.append((rep, None))
            continue
        blocks = [list(range(a)), list(range(a, n))]
        elements = _block_perms(n, blocks)
        out.append((rep, Subgroup(sn, elements, verify=False)))
    return out


def _block_perms(n: int, blocks) -> list[Permutation]:
    out = []
    for assignment in itertools.product(*[itertools.permutations(b) for b in blocks]):
        img = list(range(n))
        for block, perm in zip(blocks, assignment):
            for src, dst in zip(block, perm):
                img[src] = dst
        out.append(Permutation(img))
    return out


def _block_cycle_types(p: Permutation, a: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Cycle types of a block permutation on {0..a-1} and {a..n-1}."""
    n = p.size
    first = Permutation([p(i) for i in range(a)]) if a else Permutation(())
    second = Permutation([p(i) - a for i in range(a, n)]) if n > a else Permutation(())
    return first.cycle_type(), second.cycle_type()


@lru_cache(maxsize=None)
def _little_subgroup(n: int, a: int) -> Subgroup:
    """(sign subgroup) x (block permutations S_a x S_b) inside B_n."""
    bn = realize(TypeLabel("B", n))
    perms = _block_perms(n, [list(range(a)), list(range(a, n))])
    elements = [
        SignedPermutation(signs, p)
        for p in perms
        for signs in itertools.product((1, -1), repeat=n)
    ]
    return Subgroup(bn, elements, verify=False)


def _extended_character(n: int, label: BipartitionLabel) -> ClassFunction:
    """Character phi~ (x) (chi_lam x chi_mu) on the little subgroup.

    phi~(s, p) = phi(s): the sign character extends by ignoring the block
    permutation, which is well-defined precisely because the blocks
    stabilize it.  Constancy on subgroup classes is asserted outright.
    """
    a = label.a
    sub = _little_subgroup(n, a)
    phi = SignCharacter((0,) * a + (1,) * label.b)

    def value(el: SignedPermutation):
        t0, t1 = _block_cycle_types(el.perm, a)
        return (
            Fraction(phi.value(el.signs))
            * symmetric_character_value(label.lam, t0)
            * symmetric_character_value(label.mu, t1)
        )

    classes = sub.classes
    vals = [value(rep) for rep in classes.reps]
    for el in sub.elements:
        if value(el) != vals[classes.class_of[sub.index_of(el)]]:
            raise InternalInconsistencyError(
                f"extended character of {label} is not a class function"
            )
    return ClassFunction(sub, vals, str(label))


def bn_dimension(n: int, label: BipartitionLabel) -> int:
    return (
        math.comb(n, label.a) * hook_dimension(label.lam) * hook_dimension(label.mu)
    )


@lru_cache(maxsize=None)
def hyperoctahedral_irreducibles(n: int) -> tuple[tuple[BipartitionLabel, ClassFunction, int], ...]:
    """(label, character, dimension) for every irreducible of B_n; exact.

    Characters are computed by brute-force induction of the extended
    little-group characters; n is capped where full class data is feasible.
    """
    if n < 1:
        raise ValidationError("need n >= 1")
    if n > BN_CHARACTER_GUARD:
        raise GuardError(f"full B_n characters capped at n = {BN_CHARACTER_GUARD}")
    bn = realize(TypeLabel("B", n))
    out = []
    for label in bipartitions(n):
        chi = induce_character(_extended_character(n, label), bn)
        dim = bn_dimension(n, label)
        if chi.identity_value != dim:
            raise InternalInconsistencyError(
                f"induced dimension of {label} disagrees with the index formula"
            )
        out.append((label, ClassFunction(bn, chi.values, str(label)), dim))
    return tuple(out)


def hyperoctahedral_dimensions(n: int) -> list[tuple[BipartitionLabel, int]]:
    """(label, dimension) for every irreducible of B_n, by the formula only."""
    if n < 1 or n > BN_DIMENSION_GUARD:
        raise GuardError(f"dimension lists capped at n = {BN_DIMENSION_GUARD}")
    return [(label, bn_dimension(n, label)) for label in bipartitions(n)]


@dataclass(frozen=True)
class ConjugacyReport:
    """Outcome of matching B_n conjugacy classes to pairs of partitions."""

    n: int
    class_count: int
    pair_count: int
    matching: tuple[tuple[int, tuple[tuple[int, ...], tuple[int, ...]]], ...]

    @property
    def bijective(self) -> bool:
        return self.class_count == self.pair_count == len({m for _, m in self.matching})


def bn_conjugacy_parametrization(n: int) -> ConjugacyReport:
    """Match each B_n class to its signed cycle type (positive, negative).

    Raises if the match fails to be a bijection onto all partition pairs.
    """
    if n > BN_CHARACTER_GUARD:
        raise GuardError(f"class parametrization capped at n = {BN_CHARACTER_GUARD}")
    bn = realize(TypeLabel("B", n))
    matching = []
    for k, rep in enumerate(bn.classes.reps):
        matching.append((k, rep.signed_cycle_type()))
    pairs = {(lbl.lam, lbl.mu) for lbl in bipartitions(n)}
    report = ConjugacyReport(n, bn.classes.count, len(pairs), tuple(matching))
    seen = {m for _, m in matching}
    if len(seen) != len(matching) or seen != pairs:
        raise InternalInconsistencyError(
            f"signed cycle types of B_{n} do not biject with partition pairs"
        )
    return report


# -- D_n via index-2 restriction ------------------------------------------


def _pair_key(shape: tuple[int, ...]):
    return (sum(shape), shape)


def _coset_representatives(group: RealizedGroup, sub: Subgroup) -> list:
    reps = []
    covered = set()
    for i, x in enumerate(group.elements):
        if i in covered:
            continue
        reps.append(x)
        for h in sub.elements:
            covered.add(group.index_of(x * h))
    return reps


def _induced_matrix_fn(n: int, lam: tuple[int, ...]):
    """Block-matrix evaluator for the module induced from phi~ x (V x V).

    Returns (matrix_at(element), dimension); valid for any element of B_n.
    """
    a = sum(lam)
    bn = realize(TypeLabel("B", n))
    sub = _little_subgroup(n, a)
    phi = SignCharacter((0,) * a + (1,) * (n - a))
    if a >= 2:
        block_rep = specht_module(lam)
        d_block = block_rep.dim
    else:
        block_rep = None
        d_block = 1

    def small(el: SignedPermutation) -> Matrix:
        m = Matrix([[Fraction(phi.value(el.signs))]])
        if block_rep is not None:
            p0 = Permutation([el.perm(i) for i in range(a)])
            p1 = Permutation([el.perm(i) - a for i in range(a, n)])
            m = m.kron(block_rep.matrix_of(p0)).kron(block_rep.matrix_of(p1))
        # a < 2: both blocks are trivial groups, so the matrix stays 1x1
        return m

    cosets = _coset_representatives(bn, sub)
    k = len(cosets)
    dim = k * d_block * d_block if block_rep is not None else k
    coset_inv = [t.inverse() for t in cosets]

    def at(g) -> Matrix:
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        d = dim // k
        for i in range(k):
            for j in range(k):
                h = coset_inv[i] * g * cosets[j]
                if sub.contains(h):
                    blk = small(h)
                    for p in range(d):
                        for q in range(d):
                            rows[i * d + p][j * d + q] = blk.entries[p][q]
        return Matrix(rows)

    return at, dim


def _sqrt_fraction(q: Fraction) -> Fraction:
    if q < 0:
        raise ValidationError("negative discriminant")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise ValidationError(f"{q} is not a rational square")
    return Fraction(rn, rd)


def _split_self_paired(n: int, lam: tuple[int, ...], dn: RealizedGroup):
    """Split Res U(lam, lam) into its two halves by a commutant eigenspace.

    Returns the two characters on dn in a deterministic order (ascending
    commutant eigenvalue).
    """
    at, dim = _induced_matrix_fn(n, lam)
    gen_mats = [at(g) for g in dn.generators]
    rep = Representation(dn, gen_mats)  # relation check runs here
    # commutant: all X with M X = X M for every generator image
    rows = []
    for m in gen_mats:
        e = m.entries
        for p in range(dim):
            for q in range(dim):
                row = [Fraction(0)] * (dim * dim)
                for k in range(dim):
                    row[k * dim + q] += Fraction(e[p][k])
                    row[p * dim + k] -= Fraction(e[k][q])
                rows.append(row)
    basis = Matrix(rows).nullspace()
    if len(basis) != 2:
        raise InternalInconsistencyError(
            f"commutant of Res U({lam},{lam}) has dimension {len(basis)}, expected 2"
        )
    ident = Matrix.identity(dim)
    x = None
    for vec in basis:
        cand = Matrix([[vec[i * dim + j] for j in range(dim)] for i in range(dim)])
        if not (cand - ident.scale(cand.entries[0][0])) == Matrix.zeros(dim, dim):
            x = cand
            break
    if x is None:
        raise InternalInconsistencyError("commutant contains no non-scalar element")
    # minimal polynomial x^2 - c1 x - c0
    x2 = x * x
    lhs = Matrix([[x.entries[i][j], 1 if i == j else 0] for i in range(dim) for j in range(dim)])
    rhs = [x2.entries[i][j] for i in range(dim) for j in range(dim)]
    sol = lhs.solve(rhs)
    if sol is None:
        raise InternalInconsistencyError("commutant element has minimal degree > 2")
    c1, c0 = sol
    disc = _sqrt_fraction(c1 * c1 + 4 * c0)
    eigs = sorted(((c1 - disc) / 2, (c1 + disc) / 2))
    if eigs[0] == eigs[1]:
        raise InternalInconsistencyError("commutant element is scalar after all")
    spaces = []
    for ev in eigs:
        shifted = Matrix(
            [[x.entries[i][j] - (ev if i == j else 0) for j in range(dim)] for i in range(dim)]
        )
        spaces.append(shifted.nullspace())
    if {len(s) for s in spaces} != {dim // 2}:
        raise InternalInconsistencyError("eigenspaces of the splitting element are unbalanced")
    cols = [list(v) for v in spaces[0] + spaces[1]]
    p = Matrix(list(zip(*cols)))
    pinv = p.inverse()
    half = dim // 2
    values = ([], [])
    for repel in dn.classes.reps:
        t = pinv * at(repel) * p
        for i in range(half):
            for j in range(half, dim):
                if t.entries[i][j] != 0 or t.entries[j][i] != 0:
                    raise InternalInconsistencyError("splitting failed to block-diagonalize")
        values[0].append(sum(t.entries[i][i] for i in range(half)))
        values[1].append(sum(t.entries[i][i] for i in range(half, dim)))
    plus = ClassFunction(dn, values[0], str(DnLabel(lam, lam, "+")))
    minus = ClassFunction(dn, values[1], str(DnLabel(lam, lam, "-")))
    return plus, minus


@lru_cache(maxsize=None)
def dn_irreducibles(n: int) -> tuple[tuple[DnLabel, ClassFunction, int], ...]:
    """(label, character, dimension) for every irreducible of D_n (n = 4).

    Restrictions of the B_n characters with lam != mu, deduplicated over
    swaps, plus the explicitly split halves of the self-paired characters.
    """
    label = TypeLabel("D", n)  # validates n >= 4
    if n > BN_CHARACTER_GUARD:
        raise GuardError(f"D_n irreducibles capped at n = {BN_CHARACTER_GUARD}")
    dn = realize(label)
    out = []
    seen = set()
    for blabel, chi, dim in hyperoctahedral_irreducibles(n):
        lam, mu = blabel.lam, blabel.mu
        if lam == mu:
            continue
        key = frozenset({lam, mu})
        res = restrict_character(chi, dn)
        if key in seen:
            # the swapped partner must restrict identically
            prev = next(c for l, c, _ in out if l.half is None and {l.lam, l.mu} == set(key))
            if prev != res:
                raise InternalInconsistencyError("swapped labels restrict differently")
            continue
        seen.add(key)
        first, second = sorted((lam, mu), key=_pair_key, reverse=True)
        out.append((DnLabel(first, second), ClassFunction(dn, res.values, str(DnLabel(first, second))), dim))
    for lam in partitions_of(n // 2) if n % 2 == 0 else ():
        plus, minus = _split_self_paired(n, lam, dn)
        half_dim = bn_dimension(n, BipartitionLabel(lam, lam)) // 2
        out.append((DnLabel(lam, lam, "+"), plus, half_dim))
        out.append((DnLabel(lam, lam, "-"), minus, half_dim))
    return tuple(out)


# -- dihedral groups -------------------------------------------------------


def _rotation_subgroup(group: RealizedGroup) -> Subgroup:
    rotations = [g for g in group.elements if not g.reflected]
    return Subgroup(group, rotations, verify=False)


@lru_cache(maxsize=None)
def dihedral_irreducibles(m: int) -> tuple[ClassFunction, ...]:
    """Complete irreducible characters of the dihedral group of order 2m.

    One-dimensional characters first (two, plus two more for even m), then
    the two-dimensional inductions from the rotation subgroup for
    1 <= k < m/2.  Each induction is checked against the closed form:
    zeta^jk + zeta^-jk on the rotation r^j, zero on reflections.
    """
    if not (3 <= m <= DIHEDRAL_GUARD):
        raise GuardError(f"dihedral characters need 3 <= m <= {DIHEDRAL_GUARD}")
    group = realize(TypeLabel("I2", 2, m))
    cm = _rotation_subgroup(group)
    reps = group.classes.reps
    out = []

    def one_dim(rsign: int, ssign: int, name: str) -> ClassFunction:
        vals = [
            Fraction(rsign ** el.rotation * (ssign if el.reflected else 1)) for el in reps
        ]
        return ClassFunction(group, vals, name)

    out.append(one_dim(1, 1, "1:(1,1)"))
    out.append(one_dim(1, -1, "1:(1,-1)"))
    if m % 2 == 0:
        out.append(one_dim(-1, 1, "1:(-1,1)"))
        out.append(one_dim(-1, -1, "1:(-1,-1)"))
    for k in range(1, (m + 1) // 2):
        if 2 * k == m:
            break
        phi = ClassFunction(
            cm,
            [Cyclotomic.zeta(m, k * el.rotation) for el in cm.classes.reps],
        )
        ind = induce_character(phi, group)
        for el, v in zip(reps, ind.values):
            want = (
                Cyclotomic.zeta(m, k * el.rotation) + Cyclotomic.zeta(m, -k * el.rotation)
                if not el.reflected
                else Cyclotomic.zero()
            )
            if not (v == want):
                raise InternalInconsistencyError(
                    f"induced dihedral character disagrees with the closed form at {el}"
                )
        out.append(ClassFunction(group, ind.values, f"2:{k}"))
    total = sum(_square_int(ch.identity_value) for ch in out)
    if total != 2 * m or len(out) != group.classes.count:
        raise InternalInconsistencyError("dihedral character set is not complete")
    return tuple(out)


def _square_int(v) -> int:
    q = Fraction(v) if not isinstance(v, Cyclotomic) else v.rational_value()
    return int(q) * int(q)


def irreducible_characters(label: TypeLabel):
    """Uniform entry point: the complete named character list for a type."""
    from .specht import symmetric_character_table

    if label.family == "A":
        table = symmetric_character_table(label.rank + 1)
        named = []
        for shape, chi in zip(partitions_of(label.rank + 1), table):
            named.append(ClassFunction(chi.domain, chi.values, partition_text(shape)))
        return named
    if label.family == "B":
        return [chi for _, chi, _ in hyperoctahedral_irreducibles(label.rank)]
    if label.family == "D":
        return [chi for _, chi, _ in dn_irreducibles(label.rank)]
    if label.family == "I2":
        return list(dihedral_irreducibles(label.bond))
    raise UnsupportedTypeError(f"no character construction for {label}")
