"""Census of ring multiplications compatible with a fixed abelian addition.

The toolkit answers, exactly and exhaustively at desk scale, the question
of how much freedom an abelian group leaves for a compatible ring
multiplication: on windowed integers every distributive multiplication is
a scaled product a*n*m (unital only at a = +-1), on Z/N the census finds
exactly N multiplications, and on matrix groups two genuinely different
ring structures share one addition.
"""

from .abelian import (
    DEFAULT_ELEMENT_CAP,
    INT_CAPACITY,
    GroupElement,
    GroupSpec,
    IntegerWindow,
    add,
    all_elements,
    checked,
    element_order,
    scalar_mul,
)
from .enumeration import (
    CyclicClassification,
    RigidityReport,
    SearchConfig,
    classify_cyclic,
    enumerate_multiplications,
    expand_to_full_table,
    full_table_oracle,
    rigidity_report,
    search_space_size,
)
from .errors import (
    CapacityError,
    IntegerOverflowError,
    InvariantViolation,
    UsageError,
)
from .matrices import (
    HADAMARD,
    STANDARD,
    MatrixElement,
    all_matrices,
    mat_add,
    mat_mul_hadamard,
    mat_mul_standard,
    noncommutativity_witness,
    unit_matrix,
)
from .scaled import (
    ScaledMult,
    alternate,
    check_scaled_unitality,
    extract_scale,
    find_pm1_violation,
    find_unit_windowed,
    has_pm1_unit_property,
    make_scaled,
    scale_ring,
    scaled_unit_sweep,
    unit_of_scaled,
    usual_cyclic_ring,
    verify_scaled_form,
)
from .structures import (
    RingStructure,
    StructureConstants,
    check_associativity,
    check_commutativity,
    check_distributivity_blackbox,
    cyclic_constants,
    find_unit,
)

__version__ = "0.1.0"
