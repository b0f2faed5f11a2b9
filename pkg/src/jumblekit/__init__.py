"""jumblekit: edit distances, constrained word perturbation, reading trials."""

from .analysis import (
    AlignmentError,
    Check,
    CorpusStats,
    TrialSummary,
    WordVerdict,
    aggregate_trials,
    corpus_stats,
    verify_pair,
)
from .distance import (
    EditOp,
    Metric,
    OpKind,
    damerau_levenshtein,
    distance,
    hamming,
    levenshtein,
    osa,
)
from .oracle import EditUniverse, oracle_distance
from .perturb import (
    ConstraintMode,
    KeyboardLayout,
    LayoutError,
    PerturbSpec,
    PerturbationTrace,
    TextGenerator,
    enumerate_legal_ops,
    jumble_word,
    perturb_text,
    perturb_word,
)
from .tokens import (
    StopwordLexicon,
    Token,
    TokenKind,
    detokenize,
    strip_stopwords,
    tokenize,
    word_texts,
    words,
)
from .trials import TrialBundle, TrialCondition, TrialRecord, SchemaError

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "Check",
    "ConstraintMode",
    "CorpusStats",
    "EditOp",
    "EditUniverse",
    "KeyboardLayout",
    "LayoutError",
    "Metric",
    "OpKind",
    "PerturbSpec",
    "PerturbationTrace",
    "SchemaError",
    "StopwordLexicon",
    "TextGenerator",
    "Token",
    "TokenKind",
    "TrialBundle",
    "TrialCondition",
    "TrialRecord",
    "TrialSummary",
    "WordVerdict",
    "aggregate_trials",
    "corpus_stats",
    "damerau_levenshtein",
    "detokenize",
    "distance",
    "enumerate_legal_ops",
    "hamming",
    "jumble_word",
    "levenshtein",
    "oracle_distance",
    "osa",
    "perturb_text",
    "perturb_word",
    "strip_stopwords",
    "tokenize",
    "verify_pair",
    "word_texts",
    "words",
    "__version__",
]
