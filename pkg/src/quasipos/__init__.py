"""Recognize and factor quasi-positive elements of free groups."""
from .diagrams import (
    CancellationDiagram,
    cut_diagram,
    diagram_from_rbs,
    diagram_from_witness,
    read_factorization,
    render_svg,
    validate_diagram,
)
from .factorizer import (
    Factor,
    Factorization,
    cycling_factor,
    factor_qp,
    format_factorization,
    make_factorization,
    parse_factorization,
    verify_factorization,
)
from .oracle import BudgetExceeded, ball_size, brute_force_qp, brute_force_search, enumerate_ball
from .rbs import RBS, agrees, find_rbs, is_rbs, rbs_search, rbs_to_witness, rotate_rbs
from .recognizer import Leaf, Node, Verdict, check_witness, good_matches, split_at_pair, test_qp
from .words import (
    AbelianImage,
    Letter,
    Word,
    abelianize,
    conjugate,
    cyclic_reduce,
    find_cyclic_conjugator,
    format_word,
    free_reduce,
    parse_word,
    product,
)
from .workbench import (
    BenchRecord,
    RuntimeModel,
    make_nonqp,
    make_uk,
    predicted_runtime,
    run_bench,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianImage",
    "abelianize",
    "agrees",
    "ball_size",
    "BenchRecord",
    "brute_force_qp",
    "brute_force_search",
    "BudgetExceeded",
    "CancellationDiagram",
    "check_witness",
    "conjugate",
    "cut_diagram",
    "cyclic_reduce",
    "cycling_factor",
    "diagram_from_rbs",
    "diagram_from_witness",
    "enumerate_ball",
    "Factor",
    "factor_qp",
    "Factorization",
    "find_cyclic_conjugator",
    "find_rbs",
    "format_factorization",
    "format_word",
    "free_reduce",
    "good_matches",
    "is_rbs",
    "Leaf",
    "Letter",
    "make_factorization",
    "make_nonqp",
    "make_uk",
    "Node",
    "parse_factorization",
    "parse_word",
    "predicted_runtime",
    "product",
    "RBS",
    "rbs_search",
    "rbs_to_witness",
    "read_factorization",
    "render_svg",
    "rotate_rbs",
    "run_bench",
    "RuntimeModel",
    "split_at_pair",
    "test_qp",
    "validate_diagram",
    "Verdict",
    "verify_factorization",
    "Word",
]
