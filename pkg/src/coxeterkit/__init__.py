"""Exact classification and representation theory of finite Coxeter groups.

Classifies Coxeter graphs against the full finite catalog and constructs,
for the infinite families A_n, B_n, D_n and I2(m), concrete groups together
with complete sets of irreducible characters, all in exact arithmetic.
"""

from .classify import (
    ClassificationResult,
    TypeLabel,
    affine_catalog,
    catalog_graph,
    classify,
    coxeter_group_order,
    is_positive_definite,
    parse_type_label,
)
from .cyclotomic import Cyclotomic, Rational, cyclotomic_polynomial, real_cos_pi_over
from .errors import (
    CoxeterKitError,
    GuardError,
    InternalInconsistencyError,
    UnsupportedTypeError,
    ValidationError,
)
from .families import (
    BipartitionLabel,
    DnLabel,
    SignCharacter,
    bn_conjugacy_parametrization,
    bipartitions,
    dihedral_irreducibles,
    dn_irreducibles,
    hyperoctahedral_irreducibles,
    irreducible_characters,
    sign_character_orbits,
)
from .graphs import (
    INFINITY,
    CoxeterGraph,
    CoxeterMatrix,
    connected_components,
    gram_matrix,
    graph_from_matrix,
    graph_to_json,
    matrix_from_graph,
    parse_graph_json,
    subgraph,
)
from .groups import (
    DihedralElement,
    Permutation,
    RealizedGroup,
    SignedPermutation,
    conjugacy_classes,
    cycle_type,
    enumerate_group,
    realize,
    verify_presentation,
)
from .linalg import Matrix, determinant, leading_principal_minors, rank
from .reps import (
    ClassFunction,
    GroupAlgebraElement,
    Representation,
    Subgroup,
    character_of,
    decompose,
    direct_sum,
    induce_character,
    inner_product,
    is_irreducible,
    multiplicity,
    natural_representation,
    regular_representation,
    restrict_character,
    tensor_decompose,
    trivial_character,
)
from .roots import RootSystem, compute_base, geometric_rep, reflect, root_system
from .specht import (
    hook_dimension,
    partition_text,
    partitions_of,
    row_column_groups,
    specht_module,
    symmetric_character_table,
    young_symmetrizer,
)

__version__ = "0.1.0"
