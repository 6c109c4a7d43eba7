"""
α-filtrations, structural predicates and the certify workflow.
"""

from noloopwb.certifier.branches import choose_branch
from noloopwb.certifier.context import LoopContext, build_loop_context
from noloopwb.certifier.filtration import (
    AlphaFiltration,
    FiltrationCertificate,
    TermReport,
    chain_from_generators,
    enumerate_alpha_chains,
    path_generated_submodules,
    search_alpha_filtration,
    verify_alpha_filtration,
)
from noloopwb.certifier.graph import build_certify_graph, certify_no_loop, get_certify_workflow
from noloopwb.certifier.predicates import Predicate, PredicateValue, evaluate_lemma_predicates
from noloopwb.certifier.report import Attempt, CertifyReport
from noloopwb.certifier.templates import TEMPLATE_NAMES, ChainTemplate, template_filtrations
