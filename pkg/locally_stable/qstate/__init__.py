from locally_stable.qstate.coefficient import Coefficient, coeff_value, merge_monomials
from locally_stable.qstate.entanglement import SCHMIDT_TOL, bipartition_rank, is_genuinely_entangled
from locally_stable.qstate.overlap import (
    inner_product,
    reduced_coefficient,
    reduced_contributions,
)
from locally_stable.qstate.shape import SystemShape
from locally_stable.qstate.state import BasisTerm, PureState, is_stopper, ket
from locally_stable.qstate.state_set import (
    ORTHOGONALITY_TOL,
    OrthogonalityCheck,
    StateSet,
    default_names,
    is_orthogonal_set,
)
