from locally_stable.solver.constraints import (
    ConstraintRow,
    ConstraintSystem,
    build_constraints,
    identity_residual,
)
from locally_stable.solver.nullspace import (
    RANK_TOL,
    Method,
    NullspaceReport,
    hermitian_closure_check,
    nullspace,
)
from locally_stable.solver.stability import (
    CRITERION,
    CardinalityBound,
    DeletionResult,
    StabilityVerdict,
    deletion_test,
    verify_local_stability,
)
