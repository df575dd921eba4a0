from .auxiliary import (
    ConstructionError,
    gen_hat_graph,
    gen_tilde_graph,
    gen_hard_pair_k,
    gen_tilde_pair,
    gen_matching_choice_graph,
    product_colouring,
)
from .gadgets import (
    gen_list_gadget,
    gen_corr_gadget,
    gen_central_colouring,
    gen_frozen_regular,
    gen_c4_example,
    gen_star_example,
)
from .families import gen_path, gen_path_colouring, gen_comb, path_formulas, comb_formulas, tree_formulas
