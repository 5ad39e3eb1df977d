"""Exact Auslander-Reiten machinery for path algebras of acyclic quivers.

Representations over the rationals or a prime field, standard projective
and injective resolutions built from bimodule models, the translate and
inverse translate on objects, morphisms and extension classes, and the
evaluation pairings between Ext^1(X, Y) and the Hom spaces of the
translates.  Everything is exact integer or residue arithmetic; a
deterministic harness checks the defining identities on random instances.
"""

from .exactmat import FieldSpec, Matrix, parse_field
from .quiverpath import PathBasis, Quiver, enumerate_paths
from .repcat import (
    ExtClass,
    PreconditionError,
    Rep,
    RepMorphism,
    euler_form,
    ext1_space,
    has_injective_summand,
    hom_dim,
    hom_space,
    indecomposable,
    is_projective,
    zero_rep,
    INJECTIVE,
    PROJECTIVE,
    SIMPLE,
)
from .artranslate import (
    tau_inverse_class,
    tau_inverse_class_via_ses,
    tau_inverse_mor,
    tau_inverse_rep,
    tau_rep,
)
from .arpairing import (
    PairingGram,
    SignCalibration,
    ev_evaluate,
    pairing_gram,
    pairing_one,
    pairing_prime,
    pairing_prime_fast,
    pairing_trace_form,
    sign_calibration,
    trace_form_class,
    verify_tau_invariance,
    verify_translate_identity,
)
from .harness import GenConfig, SuiteReport, SUITES, gen_instance, load_instance, run_suite

__all__ = [
    "FieldSpec",
    "Matrix",
    "parse_field",
    "PathBasis",
    "Quiver",
    "enumerate_paths",
    "ExtClass",
    "PreconditionError",
    "Rep",
    "RepMorphism",
    "euler_form",
    "ext1_space",
    "has_injective_summand",
    "hom_dim",
    "hom_space",
    "indecomposable",
    "is_projective",
    "zero_rep",
    "INJECTIVE",
    "PROJECTIVE",
    "SIMPLE",
    "tau_inverse_class",
    "tau_inverse_class_via_ses",
    "tau_inverse_mor",
    "tau_inverse_rep",
    "tau_rep",
    "PairingGram",
    "SignCalibration",
    "ev_evaluate",
    "pairing_gram",
    "pairing_one",
    "pairing_prime",
    "pairing_prime_fast",
    "pairing_trace_form",
    "sign_calibration",
    "trace_form_class",
    "verify_tau_invariance",
    "verify_translate_identity",
    "GenConfig",
    "SuiteReport",
    "SUITES",
    "gen_instance",
    "load_instance",
    "run_suite",
]
