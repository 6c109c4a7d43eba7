import os

import pytest

from noloopwb.config import WorkbenchConfig
from noloopwb.corpus import ALL_ENTRIES, CHECKS, get_entry, run_corpus, run_entry


@pytest.mark.parametrize("entry", ALL_ENTRIES, ids=lambda e: e.name)
def test_entry_meets_its_expectations(entry):
    for result in run_entry(entry):
        assert result.ok, f"{entry.name} {result.check}: expected {result.expected}, got {result.actual}"


def test_every_expectation_names_a_known_check():
    for entry in ALL_ENTRIES:
        assert entry.expectations
        for e in entry.expectations:
            assert e.check in CHECKS


def test_entries_load_their_vertex():
    for entry in ALL_ENTRIES:
        assert entry.vertex in entry.algebra().vertices


def test_unknown_entry():
    with pytest.raises(KeyError):
        get_entry("nope")


def test_run_corpus_orders_entries_by_name():
    subset = [get_entry("loopnil3"), get_entry("a2")]
    names = [r.entry for r in run_corpus(subset)]
    assert names == sorted(names)
    assert names[0] == "a2"


def test_file_checks_have_their_companion_files():
    for entry in ALL_ENTRIES:
        checks = {e.check for e in entry.expectations}
        if "chain-verdict" in checks:
            assert os.path.exists(os.path.join(WorkbenchConfig.CORPUS_DIR, entry.chain))
        if "cleave" in checks:
            assert os.path.exists(os.path.join(WorkbenchConfig.CORPUS_DIR, entry.diagram))


def test_example1_records_the_published_outcomes():
    checks = {e.check for e in get_entry("example1").expectations}
    assert {"zero-intersections", "chain-verdict", "cleave", "certify-status"} <= checks
