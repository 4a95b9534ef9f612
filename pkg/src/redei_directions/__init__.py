"""Direction sets in AG(2, p), Rédei polynomials and exact checks of grid direction bounds."""

from .directions import (
    INF,
    DirectionSet,
    Grid,
    PointSet,
    directions_of_grid,
    directions_of_pointset,
    is_theorem1_tight,
    theorem1_bound,
)
from .field import FieldElement, PrimeModulus, SubgroupZd, field_inverse, legendre_symbol, subgroup_of_order
from .poly import DensePolynomial, poly_derivative, poly_divrem, poly_gcd, poly_mul, truncated_power
from .redei import (
    build_f_at_y,
    coefficient_profile,
    complement_sigmas,
    elementary_symmetric,
    lacunarity_lower_bound,
    lemma_divisibility_check,
    product_check,
    redei_H_at_y,
    roots_at_y,
)
from .search import SearchBudget, exhaustive_theorem1_sweep, paley_clique_number, search_tight_grids, zd_max_clique
from .verifiers import BoundReport, verify_cor2, verify_cor3, verify_cor4, verify_cor5, verify_theorem1

__version__ = "0.1.0"
