"""Power-law bounded graphs: generators, bucket-property checks, greedy algorithms,
closed-form guarantees, exact oracles and hardness embeddings."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .bounds import (
    const_a,
    const_b,
    growth_constant,
    guarantee_bundle,
    hardness_factor,
    harmonic,
    lemma22_bound,
    mis_plbl_lower,
    pvl_bound,
    zeta,
)
from .embed import EmbedResult, embed_multigraph, embed_simple, gadget_opt, reduction_opt, regular_cycle
from .errors import BudgetExceeded, EmbeddingError, GraphError, GraphFormatError
from .exact import brute_force, exact, exact_cds, exact_mds, exact_mis, exact_mvc
from .generators import (
    GirgParams,
    HyperbolicParams,
    gen_alpha_beta_plg,
    gen_chung_lu,
    gen_girg,
    gen_hyperbolic,
    random_regular,
)
from .graph import Graph, degree_buckets, load_graph, save_graph
from .harness import ExperimentReport, ratio_study, run_experiment
from .plb import PlbParams, PlbReport, check_plb, fit_plb_l, fit_plb_n, fit_plb_u, plb_report, unit_bound
from .solvers import SolveResult, solve, validate_solution
from .weights import WeightSequence, power_law_weights, verify_general_power_law
