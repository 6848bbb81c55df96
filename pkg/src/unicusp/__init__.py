"""Exact classification engine for rational unicuspidal plane curves with one Puiseux pair."""

__version__ = "0.1.0"

from .candidates import (  # noqa: E402
    CandidateTriple,
    DerivedInvariants,
    FamilyKind,
    FamilyTag,
    Kappa,
    derive,
    enumerate_candidates,
    family_match,
    genus_valid,
)
from .obstructions import FULL, BOUNDED_SEARCH, FilterSet, FilterVerdict, Status, run_pipeline  # noqa: E402

__all__ = [
    "CandidateTriple",
    "DerivedInvariants",
    "FULL",
    "FamilyKind",
    "FamilyTag",
    "FilterSet",
    "FilterVerdict",
    "Kappa",
    "BOUNDED_SEARCH",
    "Status",
    "derive",
    "enumerate_candidates",
    "family_match",
    "genus_valid",
    "run_pipeline",
]
