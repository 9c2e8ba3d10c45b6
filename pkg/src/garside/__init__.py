"""Garside calculus: word reversing, simple lattices, roots and constructions."""
from .presentation import (EPSILON, ComplementTable, NotComplemented, Presentation, PresentationError,
                           is_right_complemented, load_presentation, mirror, parse_presentation,
                           presentation_from_table, relation_sets_equal, right_complement_table,
                           serialize)
from .reversing import (Diverged, Reverser, complement, cube_check_all, cube_condition, left_divides,
                        reverse, right_complement, right_lcm, theta, words_equal)
from .atomicity import (PumpingWitness, Verdict, additive_weights, atomicity, classes_oracle,
                        equivalence_class, norm, replay)
from .structure import (GarsideReport, GarsideStructure, NotARoot, NotGarside, central_exponent,
                        hasse_lattice, left_gcd, root_descriptor, roots, simple_closure, to_dot,
                        to_json, verify_garside)
from .combinators import (Construction, Factor, amalgam, artin_dihedral, baumslag_solitar,
                          canonical_word, hnn_hypothesis_check, hnn_stuffed, stuffed_baumslag_solitar)
from .trees import (LabelledTree, PietrowskiData, hnn_over_tree_garside, parse_pietrowski, parse_tree,
                    pietrowski_build, pietrowski_validate, tree_product_presentation, vertex_exponent,
                    vertex_exponents)
from .cli import run

__version__ = "0.1.0"
