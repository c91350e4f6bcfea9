"""Set-theoretic Yang-Baxter solutions and the Garside structure of their structure groups."""

from .documents import load_solution, read_solution, solution_document
from .enumeration import canonical_form, enumerate_solutions, run_property_suite
from .errors import (
    FoldingError,
    LatticeError,
    ReversingBudgetError,
    SolutionError,
    TheoremViolation,
)
from .fixtures import E4, E5
from .folding import (
    atomic_garside_subgroup,
    decomposition_folding,
    find_foldings,
    find_strong_foldings,
    induced_solution,
    verify_theorem_B,
)
from .garside import DivisorLattice, Simple, build_lattice, complement_system, reverse_right, words_equal
from .parabolic import (
    delta_classes,
    f_orbits,
    is_decomposable,
    is_delta_pure,
    standard_parabolics,
    verify_theorem_A,
)
from .solution import (
    SolutionTable,
    check_qybe,
    invariant_subsets,
    is_solution,
    isomorphic,
    presentation_of,
    trivial_solution,
)

__version__ = "0.1.0"
