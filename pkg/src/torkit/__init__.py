"""torkit: exact polynomial invariants of T(n,2) torus knots.

Everything is computed over arbitrary-precision integers with quarter-unit
Laurent exponents; no floating point, no symbolic division.
"""

from .laurent import (
    ContextMismatch,
    LaurentPoly,
    MissingAssignment,
    Monomial,
    NegativePowerOfPolynomial,
    NonIntegralExponent,
    NotAPerfectSquare,
    ParseError,
    QuarterExp,
    TorkitError,
    UnknownVariable,
    VarContext,
    ZeroBase,
    exact_sqrt,
    from_json,
    from_json_obj,
    parse,
    to_json,
    to_json_obj,
)
from .qnumbers import (
    QNumberKind,
    jones_number,
    q_number,
    qp_number,
    verify_q_recurrence,
    verify_qp_recurrence,
)
from .report import CheckFailure, CheckReport
from .skein import (
    AnsatzCoefficients,
    AnsatzMismatch,
    KnotStepPair,
    NotInvertible,
    NotTwoParameterForm,
    SkeinPair,
    TorusSequence,
    fit_ansatz,
    gen_full_sequence,
    gen_odd_sequence,
    k_to_l,
    l_to_k,
    solve_parameters,
    verify_interleave,
)
from .families import (
    ALEXANDER,
    AZ_CTX,
    EvenIndexUnsupported,
    FAMILIES,
    FamilySpec,
    GENERALIZED_ALEXANDER,
    HOMFLY,
    JONES,
    QP_CTX,
    T_CTX,
    alexander_torus,
    generalized_alexander_torus,
    homfly_to_generalized,
    homfly_torus,
    jones_torus,
    to_alexander,
    to_jones,
    torus_invariant,
)

__version__ = "0.1.0"

__all__ = [
    "ALEXANDER",
    "AZ_CTX",
    "AnsatzCoefficients",
    "AnsatzMismatch",
    "CheckFailure",
    "CheckReport",
    "ContextMismatch",
    "EvenIndexUnsupported",
    "FAMILIES",
    "FamilySpec",
    "GENERALIZED_ALEXANDER",
    "HOMFLY",
    "JONES",
    "KnotStepPair",
    "LaurentPoly",
    "MissingAssignment",
    "Monomial",
    "NegativePowerOfPolynomial",
    "NonIntegralExponent",
    "NotAPerfectSquare",
    "NotInvertible",
    "NotTwoParameterForm",
    "ParseError",
    "QNumberKind",
    "QP_CTX",
    "QuarterExp",
    "SkeinPair",
    "T_CTX",
    "TorkitError",
    "TorusSequence",
    "UnknownVariable",
    "VarContext",
    "ZeroBase",
    "alexander_torus",
    "exact_sqrt",
    "fit_ansatz",
    "from_json",
    "from_json_obj",
    "gen_full_sequence",
    "gen_odd_sequence",
    "generalized_alexander_torus",
    "homfly_to_generalized",
    "homfly_torus",
    "jones_number",
    "jones_torus",
    "k_to_l",
    "l_to_k",
    "parse",
    "q_number",
    "qp_number",
    "solve_parameters",
    "to_alexander",
    "to_jones",
    "to_json",
    "to_json_obj",
    "torus_invariant",
    "verify_interleave",
    "verify_q_recurrence",
    "verify_qp_recurrence",
]
