"""Reductions among Karp's 21 NP-complete problems.

Transforms with certificate lifting, brute-force oracles, seeded generators,
and a growth auditor checking each reduction's claimed affine size bound.
"""

from .instances import (
    KINDS,
    Certificate,
    CnfFormula,
    DiGraph,
    IntegerList,
    InvalidCertificateError,
    InvalidInstanceError,
    Problem,
    SetFamily,
    SizeReport,
    SteinerInstance,
    TripleFamily,
    UGraph,
    UnsupportedKindError,
    measure_input_size,
    size_report,
    validate,
    verify_certificate,
)
from .binprog import (
    BinaryProgram,
    ConstraintRow,
    ContractError,
    VarCapExceededError,
    VariableTag,
    num_slacks,
    solve_ip,
    to_equality_form,
)
from .reductions import (
    CANONICAL_REDUCTIONS,
    KERNEL_KINDS,
    REDUCTIONS,
    ReductionChain,
    ReductionSpec,
    apply_chain,
    chain_from_names,
    compose,
    lift_chain,
    route_to_kernel,
)
from .oracles import BudgetExceededError, DEFAULT_BUDGET, OracleVerdict, solve
from .genlab import GeneratorSpec, generate, scaled_spec
from .growth import GrowthReport, audit
from .serialize import (
    dumps_certificate,
    dumps_problem,
    loads_certificate,
    loads_problem,
    parse_dimacs_cnf,
    parse_edge_list,
)

__all__ = [
    "KINDS",
    "Certificate",
    "CnfFormula",
    "DiGraph",
    "IntegerList",
    "InvalidCertificateError",
    "InvalidInstanceError",
    "Problem",
    "SetFamily",
    "SizeReport",
    "SteinerInstance",
    "TripleFamily",
    "UGraph",
    "UnsupportedKindError",
    "measure_input_size",
    "size_report",
    "validate",
    "verify_certificate",
    "BinaryProgram",
    "ConstraintRow",
    "ContractError",
    "VarCapExceededError",
    "VariableTag",
    "num_slacks",
    "solve_ip",
    "to_equality_form",
    "CANONICAL_REDUCTIONS",
    "KERNEL_KINDS",
    "REDUCTIONS",
    "ReductionChain",
    "ReductionSpec",
    "apply_chain",
    "chain_from_names",
    "compose",
    "lift_chain",
    "route_to_kernel",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "OracleVerdict",
    "solve",
    "GeneratorSpec",
    "generate",
    "scaled_spec",
    "GrowthReport",
    "audit",
    "dumps_certificate",
    "dumps_problem",
    "loads_certificate",
    "loads_problem",
    "parse_dimacs_cnf",
    "parse_edge_list",
]
