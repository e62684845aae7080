"""Finite preference relations: Richter-Peleg representations, strong acyclicity,
stratifications and maximal elements by scalar maximisation."""

from .acyclicity import (
    CycleWitness,
    find_strong_cycle,
    implies_acyclic_check,
    is_acyclic,
    is_strongly_acyclic,
)
from .errors import (
    DuplicateLabel,
    MissingValue,
    NotPreorder,
    NotPseudoStratification,
    NotRepresentation,
    NotSeparating,
    NotStronglyAcyclic,
    ParseError,
    PrefrepError,
    TooLarge,
    UnknownElement,
    UnknownLabel,
)
from .optimality import (
    ChoiceProblem,
    argmax,
    maximal_elements,
    prop1_utility,
    prop2_utility,
    scalarization_counterexample_check,
)
from .relation import (
    CondensationDag,
    Relation,
    asymmetric_part,
    comparable_part,
    condensation,
    incomparable_part,
    is_complete,
    is_preorder,
    is_reflexive,
    is_transitive,
    lower_strict,
    lower_weak,
    make_relation,
    reflexive_closure,
    symmetric_part,
    transitive_closure,
)
from .representation import (
    Utility,
    Violation,
    closure_transfer_check,
    normalize_to_unit_interval,
    representation_violations,
    synthesize,
    utility_from_stratification,
    verify_representation,
)
from .stratification import (
    EmbeddingMap,
    Stratification,
    disjointify,
    is_pseudo_stratification,
    is_separable_finite,
    is_separating,
    is_stratification,
    verify_embedding,
)

__version__ = "0.1.0"
