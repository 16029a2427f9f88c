"""singwf: exact differents and well-forming data for quasihomogeneous
hypersurface singularities.

Public API re-exports; see the module docstrings for the mathematics.
"""

from .analyze import AnalysisReport, VerifyOutcome, analyze, verify_record
from .dataset import TableRecord, dump_records, instantiate_generic_forms, load_records
from .different import (
    EXCEPTIONAL_HINT_CAVEAT,
    BoundaryDivisor,
    StdBoundary,
    StratumId,
    build_D,
    build_Dhat,
    check_adjunction,
    compose_different,
    diff_on_E,
    diff_over_wps,
    exceptional_hint,
)
from .errors import SingwfError
from .parse import parse_polynomial, render
from .poly import Param, Polynomial, VarList, normalize, split_check, variable_divides
from .weights import (
    WeightAssignment,
    discrepancy,
    discrepancy_tag,
    infer_weights,
    quasi_degree,
)
from .wellform import (
    ConeReduction,
    WellFormProfile,
    gcd_profile,
    is_well_formed,
    linear_cone_reduce,
    profile_from_weights,
    well_form,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundaryDivisor",
    "ConeReduction",
    "EXCEPTIONAL_HINT_CAVEAT",
    "Param",
    "Polynomial",
    "SingwfError",
    "StdBoundary",
    "StratumId",
    "TableRecord",
    "VarList",
    "VerifyOutcome",
    "WeightAssignment",
    "WellFormProfile",
    "analyze",
    "build_D",
    "build_Dhat",
    "check_adjunction",
    "compose_different",
    "diff_on_E",
    "diff_over_wps",
    "discrepancy",
    "discrepancy_tag",
    "dump_records",
    "exceptional_hint",
    "gcd_profile",
    "infer_weights",
    "instantiate_generic_forms",
    "is_well_formed",
    "linear_cone_reduce",
    "load_records",
    "normalize",
    "parse_polynomial",
    "profile_from_weights",
    "quasi_degree",
    "render",
    "split_check",
    "variable_divides",
    "verify_record",
    "well_form",
]
