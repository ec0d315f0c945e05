"""Exact-arithmetic toolkit for order-ideal dynamics: rowmotion and its
piecewise-linear and birational lifts, toggle certificates, cyclic
sieving, and equal-order-polynomial pair verification."""

__version__ = "0.1.0"

from .poset import (CapExceededError, CycleError, HasseError,
                    NotAutonomousError, OrderIdeal, Poset, PosetError,
                    RationalPolynomial, UnknownElementError, all_posets,
                    autonomous_subsets, comp_isomorphic, comparability_graph,
                    connected_posets, dualization_path, dualize_autonomous,
                    is_autonomous, is_self_dual, poset_isomorphic,
                    transfer_inverse, transfer_map)
from .families import (FamilySpec, cayley_plane, coincidental_specs,
                       coxeter_number, degrees, doppelganger_pairs,
                       freudenthal, make, minuscule_specs, parse_spec,
                       propeller, rectangle, root_poset, shifted_staircase,
                       trapezoid)
from .ppartitions import (PPartition, SetValuedPPartition, count_ppartitions,
                          count_setvalued, ddeg_generating_function,
                          enumerate_ppartitions, enumerate_setvalued,
                          excess_generating_function, setvalued_reflection,
                          size_generating_function, sum_ddeg_ppartitions)
from .cde import (Distribution, ToggleCertificate, edge_density, expectation,
                  is_cde, is_mcde, maxchain_distribution, mchain_distribution,
                  tcde_solve, toggleability, uniform_distribution,
                  validate_certificate)
from .dynamics import (Orbit, RationalLabeling, homomesy_check, orbits,
                       pl_ddeg, pl_fixed_point, pl_orbit, pl_rowmotion,
                       pl_toggle, pl_toggleability, pp_orbits, pp_rowmotion,
                       row_orbits, rowmotion, rowmotion_order, toggle)
from .sieving import (CyclotomicValue, IntPolynomial, csp_check, cyclotomic,
                      eval_at_root_of_unity, q_catalan, q_multi_catalan,
                      q_rational_product, size_gf_product)
from .birational import (PositiveLabeling, birational_ddeg,
                         birational_homomesy_check, birational_orbit,
                         birational_rowmotion, birational_toggle,
                         birational_toggleability, detect_order,
                         refined_rectangle_check, tropicalize_check)
from .harness import (check_csp, check_ddeg_gf_pair, check_doppelganger,
                      check_mcde_pair, check_orbit_matching,
                      check_setvalued_pair, check_tcde, run_campaign,
                      verify_report)
