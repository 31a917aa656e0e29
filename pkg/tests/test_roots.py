from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxeterkit.classify import TypeLabel, coxeter_group_order
from coxeterkit.errors import UnsupportedTypeError, ValidationError
from coxeterkit.groups import realize
from coxeterkit.linalg import Matrix
from coxeterkit.roots import (
    RootSystem,
    compute_base,
    fixed_space_dimension,
    geometric_rep,
    reflect,
    reflection_matrix,
    root_system,
)

ROOT_LABELS = [
    TypeLabel("A", 2),
    TypeLabel("A", 4),
    TypeLabel("B", 2),
    TypeLabel("B", 4),
    TypeLabel("D", 4),
    TypeLabel("I2", 2, 5),
    TypeLabel("I2", 2, 6),
]


def test_reflect_square_example():
    assert reflect((1, 1), (-1, 1)) == (-1, 1)
    assert reflect((1, 1), (1, 1)) == (-1, -1)
    assert reflect((1, 0), (1, 1)) == (-1, 1)


def test_reflect_rejects_zero():
    with pytest.raises(ValidationError):
        reflect((0, 0), (1, 1))


def test_reflect_fixes_orthogonal_complement():
    alpha = (2, 1, 0)
    fixed = (1, -2, 0)
    assert reflect(alpha, fixed) == tuple(Fraction(x) for x in fixed)
    assert reflect(alpha, alpha) == tuple(-Fraction(x) for x in alpha)


def test_root_counts():
    assert root_system(TypeLabel("A", 2)).count == 6
    assert root_system(TypeLabel("B", 2)).count == 8
    assert root_system(TypeLabel("D", 4)).count == 24
    assert root_system(TypeLabel("I2", 2, 5)).count == 10


def test_square_root_system_validates():
    # the vertex/edge-midpoint system of the square: non-unit roots allowed
    roots = [(0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (1, -1), (-1, 1), (-1, -1)]
    rs = RootSystem(tuple(roots), TypeLabel("B", 2))
    assert rs.count == 8
    base = compute_base(rs)
    assert len(base) == 2


def test_root_axioms_rejected_when_broken():
    with pytest.raises(ValidationError):
        RootSystem(((1, 0), (-1, 0), (2, 0), (-2, 0)), TypeLabel("A", 1))  # line has 4 roots
    with pytest.raises(ValidationError):
        RootSystem(((1, 0), (0, 1)), TypeLabel("A", 1))  # not closed under negation
    with pytest.raises(ValidationError):
        RootSystem(((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)), TypeLabel("B", 2))


def test_unsupported_types():
    with pytest.raises(UnsupportedTypeError):
        root_system(TypeLabel("E", 6))


def test_bases():
    a2 = root_system(TypeLabel("A", 2))
    base = compute_base(a2)
    assert base == [
        (Fraction(1), Fraction(-1), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(-1)),
    ]
    for label in ROOT_LABELS:
        rs = root_system(label)
        assert len(compute_base(rs)) == label.rank


def test_base_of_tiny_system():
    rs = RootSystem(((Fraction(1),), (Fraction(-1),)), TypeLabel("A", 1))
    assert compute_base(rs) == [(Fraction(1),)]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(ROOT_LABELS), st.data())
def test_conjugation_identity(label, data):
    rs = root_system(label)
    dim = len(rs.roots[0])
    pick = st.sampled_from(rs.roots)
    beta1, beta2, alpha = data.draw(pick), data.draw(pick), data.draw(pick)
    r1 = reflection_matrix(beta1, dim, rs.gram)
    r2 = reflection_matrix(beta2, dim, rs.gram)
    t = r1 * r2
    tinv = r2 * r1
    talpha = tuple(
        sum((t.entries[i][j] * alpha[j] for j in range(dim)), Fraction(0))
        for i in range(dim)
    )
    assert t * reflection_matrix(alpha, dim, rs.gram) * tinv == reflection_matrix(
        talpha, dim, rs.gram
    )


def test_geometric_rep_rank_one():
    rep = geometric_rep(TypeLabel("A", 1))
    group = realize(TypeLabel("A", 1))
    assert rep[group.generators[0]] == Matrix([[-1]])


def test_geometric_rep_dihedral_rotation_order():
    for m in (5, 7):
        group = realize(TypeLabel("I2", 2, m))
        rep = geometric_rep(TypeLabel("I2", 2, m))
        prod = rep[group.generators[0]] * rep[group.generators[1]]
        power = prod
        k = 1
        while not power.is_identity():
            power = power * prod
            k += 1
        assert k == m


def test_geometric_rep_a2_column():
    group = realize(TypeLabel("A", 2))
    rep = geometric_rep(TypeLabel("A", 2))
    sigma = rep[group.generators[0]]
    assert sigma.column(1) == (Fraction(1), Fraction(1))  # alpha' -> alpha' + alpha


def test_geometric_rep_is_homomorphism_and_injective():
    label = TypeLabel("B", 2)
    group = realize(label)
    rep = geometric_rep(label)
    assert len(rep) == group.order
    for a in group.elements:
        for b in group.elements:
            assert rep[a * b] == rep[a] * rep[b]


def test_fixed_space_dimensions():
    a3 = realize(TypeLabel("A", 3))
    assert fixed_space_dimension([g.natural_matrix() for g in a3.generators]) == 1
    b3 = realize(TypeLabel("B", 3))
    assert fixed_space_dimension([g.natural_matrix() for g in b3.generators]) == 0
    d4 = realize(TypeLabel("D", 4))
    assert fixed_space_dimension([g.natural_matrix() for g in d4.generators]) == 0
    i26 = realize(TypeLabel("I2", 2, 6))
    rep = geometric_rep(TypeLabel("I2", 2, 6))
    assert fixed_space_dimension([rep[g] for g in i26.generators]) == 0
