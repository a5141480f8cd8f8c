"""Exact chromatic polynomials of hypergraphs.

A proper coloring here is the weak kind: every edge must receive at least
two distinct colors.  The package computes the counting polynomial exactly
by deletion-contraction over Sperner reductions, classifies instances into
the even-edge families with acyclicity or covered-cycle structure, checks
interval sign certificates with exact Sturm sequences, and cross-checks
everything against an independent brute-force counting oracle.
"""

__version__ = "0.1.0"

from .classify import (ClassificationReport, ClosureReport, CycleBudgetExceeded,
                       CycleWitness, FamilyVerdict, PreconditionError,
                       check_closure_l0, check_contraction_containment,
                       classify, enumerate_pure_big_cycles, in_l0, in_l0_prime,
                       in_l1)
from .engine import (EngineConfig, EngineStats, chromatic_polynomial,
                     deletion_contraction_check, q_polynomial)
from .generate import (GenerationError, GenSpec, SplitMix64, exhaustive_small,
                       random_family_member, random_hypergraph)
from .hypergraph import (Component, ContractionResult, Edge, Hypergraph,
                         as_edge, build)
from .oracle import (CountResult, StateSpaceError, available_backends,
                     count_colorings, default_backend, interpolate_polynomial)
from .polyring import Fraction, Poly
from .roots import (ReferenceReport, RootReport, SignCertificate,
                    certify_negative_ray, certify_negative_ray_poly,
                    certify_unit_interval, certify_unit_interval_poly,
                    count_real_roots, isolate_roots, reference_poly_negative_ray,
                    reference_poly_unit_interval, sturm_chain,
                    verify_reference_negative_ray, verify_reference_unit_interval)

__all__ = [
    "__version__",
    "Fraction", "Poly",
    "Edge", "Hypergraph", "Component", "ContractionResult", "as_edge", "build",
    "ClassificationReport", "ClosureReport", "CycleBudgetExceeded",
    "CycleWitness", "FamilyVerdict", "PreconditionError",
    "check_closure_l0", "check_contraction_containment", "classify",
    "enumerate_pure_big_cycles", "in_l0", "in_l0_prime", "in_l1",
    "EngineConfig", "EngineStats", "chromatic_polynomial",
    "deletion_contraction_check", "q_polynomial",
    "CountResult", "StateSpaceError", "available_backends", "count_colorings",
    "default_backend", "interpolate_polynomial",
    "ReferenceReport", "RootReport", "SignCertificate",
    "certify_negative_ray", "certify_negative_ray_poly",
    "certify_unit_interval", "certify_unit_interval_poly",
    "count_real_roots", "isolate_roots",
    "reference_poly_negative_ray", "reference_poly_unit_interval",
    "sturm_chain", "verify_reference_negative_ray",
    "verify_reference_unit_interval",
    "GenerationError", "GenSpec", "SplitMix64", "exhaustive_small",
    "random_family_member", "random_hypergraph",
]
