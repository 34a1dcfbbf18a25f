"""Exact cohomological invariants of sheaves on Hirzebruch surfaces."""

from .ampleness import AmpleStatus, ample_status, ample_status_p2, explicit_ample_clause, gieseker_character
from .betti import BettiResult, SpecialityVerdict, betti, induction_depth, is_special
from .chern import (
    ChernCharacter,
    ch_line,
    chi,
    chi_twist,
    discriminant,
    dual,
    invariants,
    point_modification,
    serre_dual,
    twist,
    validate,
)
from .construction import DirectSumModel, build_model, predicted_betti
from .errors import (
    AmbiguousModification,
    HirzebruchError,
    Infeasible,
    InvalidCharacter,
    NegativeDiscriminant,
    NonAmplePolarization,
    NonIntegralChi,
    NonNefSlope,
    NonPositiveMukaiRank,
    NonPositiveRank,
    RankTooSmall,
    UnsupportedCase,
    UnsupportedRankOne,
)
from .gaeta import GaetaResolution, exponents, feasible_twists, find_L, is_feasible
from .global_generation import GGVerdict, P2Character, ch_p2, gg_hirzebruch, gg_p2, lazarsfeld_mukai
from .line_cohomology import BettiTriple, cohomology
from .surface import E, F, ZERO, DivisorClass, Surface

__all__ = [
    "AmbiguousModification",
    "explicit_ample_clause",
    "ample_status",
    "ample_status_p2",
    "AmpleStatus",
    "betti",
    "BettiResult",
    "BettiTriple",
    "build_model",
    "ch_line",
    "ch_p2",
    "ChernCharacter",
    "chi",
    "chi_twist",
    "cohomology",
    "DirectSumModel",
    "discriminant",
    "DivisorClass",
    "dual",
    "E",
    "exponents",
    "F",
    "feasible_twists",
    "find_L",
    "GaetaResolution",
    "gg_hirzebruch",
    "gg_p2",
    "GGVerdict",
    "gieseker_character",
    "HirzebruchError",
    "induction_depth",
    "Infeasible",
    "InvalidCharacter",
    "invariants",
    "is_feasible",
    "is_special",
    "lazarsfeld_mukai",
    "NegativeDiscriminant",
    "NonAmplePolarization",
    "NonIntegralChi",
    "NonNefSlope",
    "NonPositiveMukaiRank",
    "NonPositiveRank",
    "P2Character",
    "point_modification",
    "predicted_betti",
    "RankTooSmall",
    "serre_dual",
    "SpecialityVerdict",
    "Surface",
    "twist",
    "UnsupportedCase",
    "UnsupportedRankOne",
    "validate",
    "ZERO",
]
