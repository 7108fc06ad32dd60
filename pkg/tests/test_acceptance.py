"""Acceptance battery: one test per criterion so each gets its own line.

The criterion bodies live in rittforge.acceptance and are shared with the CLI
`suite` subcommand; a failure message carries the criterion's detail string.
"""

from rittforge import acceptance


def _run(name):
    fn = dict(acceptance.CRITERIA)[name]
    passed, detail = fn()
    assert passed, f"{name}: {detail}"


def test_ritt_rewrites():
    _run("ritt-rewrites")


def test_composition_identities():
    _run("composition-identities")


def test_character_multiplicativity():
    _run("character-multiplicativity")


def test_length_vs_degree():
    _run("length-vs-degree")


def test_biequiv_decision():
    _run("biequiv-decision")


def test_finite_correspondences():
    _run("finite-correspondences")


def test_correspondence_algebra():
    _run("correspondence-algebra")


def test_orbit_classification():
    _run("orbit-classification")


def test_grid_render():
    _run("grid-render")


def test_sandwich_structures():
    _run("sandwich-structures")


def test_report_format():
    results = [("a", True, "fine"), ("b", False, "broke")]
    text = acceptance.format_report(results)
    assert "[PASS] a: fine" in text
    assert "[FAIL] b: broke" in text
    assert text.endswith("1/2 criteria passed")


def test_criteria_names_unique():
    names = [n for n, _ in acceptance.CRITERIA]
    assert len(names) == 10 and len(set(names)) == 10
