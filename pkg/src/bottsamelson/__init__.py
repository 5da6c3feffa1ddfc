"""
Chamber families of reduced words, Demazure characters of flagged Weyl
modules, Schubert polynomials, and configuration varieties for GL(n).

>>> from bottsamelson import Permutation, schubert_descending
>>> print(schubert_descending(Permutation((3, 2, 1))))
x1^2*x2
"""

from .weyl import (Permutation, Word, Root, compose, inverse, length, identity, longest,
                   simple, all_permutations, word_to_perm, is_reduced, reduced_words,
                   lex_min_reduced_word, first_ascent, root_sequence, min_coset_rep,
                   is_weak_order_increasing, desing_word)
from .poly import (LaurentPoly, InexactDivisionError, swap_vars, divided_difference,
                   demazure, demazure_w, fundamental_weight, eval_ones, staircase)
from .families import (SubsetFamily, MultFamily, interval, format_subset, parse_subset,
                       parse_family, parse_mult_family, chamber_sets, chamber_family,
                       full_chamber_family, family_of_list, strongly_separated_pair,
                       separation_violation, is_strongly_separated, is_percent_avoiding,
                       is_northwest, northwest_order, find_embedding_word, is_i_free,
                       lambda_family, act, inversion_family, EmbeddingSearchError)
from .characters import (CharRequest, MinorProduct, demazure_char, full_char,
                         bott_samelson_char, weyl_char_oracle, enumerate_fillings,
                         filling_to_minor_product, lambda_step)
from .schubert import (SchubertResult, schubert, schubert_descending, schubert_ascending,
                       first_ascent_word, first_ascent_chain, verify_kp)
from .configgeom import (Subspace, Configuration, coordinate_subspace, standard_subspace,
                         generating_point, dim_sum, dim_intersection, intersection, contains,
                         is_inclusion_point, theta_image_conditions, conjecture_conditions,
                         positional_config)
from .diagrams import render_young, render_wiring

__version__ = "0.1.0"
