"""Online candidate control in candidate-sequential elections.

Polynomial-time forced-win deciders for plurality, an exhaustive
alternating-game oracle for arbitrary winner rules, QBF-based hardness
constructions, and a differential harness that cross-validates them.
"""

from .decider import (
    PureSituation,
    analyze_pure_constructive,
    analyze_pure_destructive,
    decide_online_control,
    pure_situation,
)
from .diff import DiffReport, run_diff
from .enumeration import EnumerationBounds, enumerate_instances
from .errors import (
    ContractError,
    DocumentError,
    FormulaParseError,
    IllegalActionError,
    MalformedInputError,
    SeqControlError,
    SizeLimitError,
    ValidationError,
)
from .game import (
    GameState,
    Verdict,
    enumerate_universe_extensions,
    extract_strategy,
    replay_strategy,
    solve_forced_win,
)
from .model import (
    ControlInstance,
    RoleMap,
    compute_roles,
    goal_satisfied,
    legal_chair_actions,
    mask_vote,
    plurality_winners,
    validate_instance,
)
from .qbf import (
    Formula,
    QbfInstance,
    eval_formula,
    parse_formula,
    qbf_truth,
    reduce_qbf,
    winners_qbf_system,
)
from .serialize import load_instance, store_instance

__version__ = "0.1.0"

__all__ = [
    "ControlInstance",
    "RoleMap",
    "PureSituation",
    "GameState",
    "Verdict",
    "DiffReport",
    "EnumerationBounds",
    "Formula",
    "QbfInstance",
    "analyze_pure_constructive",
    "analyze_pure_destructive",
    "compute_roles",
    "decide_online_control",
    "enumerate_instances",
    "enumerate_universe_extensions",
    "eval_formula",
    "extract_strategy",
    "goal_satisfied",
    "legal_chair_actions",
    "load_instance",
    "mask_vote",
    "parse_formula",
    "plurality_winners",
    "pure_situation",
    "qbf_truth",
    "reduce_qbf",
    "replay_strategy",
    "run_diff",
    "solve_forced_win",
    "store_instance",
    "validate_instance",
    "winners_qbf_system",
    "SeqControlError",
    "MalformedInputError",
    "ValidationError",
    "ContractError",
    "SizeLimitError",
    "IllegalActionError",
    "FormulaParseError",
    "DocumentError",
]
