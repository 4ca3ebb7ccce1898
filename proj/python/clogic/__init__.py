"""Multi-sorted categorical logic toolkit."""

from ._clogic import (
    ChainResult,
    LogicError,
    Model,
    ProofReport,
    Sequent,
    Theory,
    TraceRow,
    Unification,
    chain,
    check_corpus_proof,
    check_proof,
    closed_sort,
    closed_term,
    corpus_directory,
    corpus_entries,
    unify,
)

__all__ = [
    "ChainResult",
    "LogicError",
    "Model",
    "ProofReport",
    "Sequent",
    "Theory",
    "TraceRow",
    "Unification",
    "chain",
    "check_corpus_proof",
    "check_proof",
    "closed_sort",
    "closed_term",
    "corpus_directory",
    "corpus_entries",
    "unify",
]
