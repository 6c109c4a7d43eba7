"""
Bundled algebras, diagrams and chains with their expected results.
"""

from noloopwb.corpus.library import (
    ALL_ENTRIES,
    CHECKS,
    CheckResult,
    CorpusEntry,
    Expectation,
    get_entry,
    run_corpus,
    run_entry,
)
