"""Acceptance criteria 1-9, one line of output each.

Run directly (``python tests/test_acceptance.py``) or under pytest; under
pytest each line is written straight to the terminal.
"""
import time

import pytest

from semimaps import verify

# K7's drawing cannot be transcribed into a map carrying the quoted 24-cycle;
# see the catalog notes.  The criterion stays red.
KNOWN_RED = {"5": "K7 auxiliary graph gives 12+12+12, not the quoted 24+12"}

CRITERIA = [
    pytest.param(cid, title, marks=pytest.mark.xfail(strict=True, reason=KNOWN_RED[cid]))
    if cid in KNOWN_RED else (cid, title)
    for cid, title, _ in verify.CHECKS
]


def line(cid, title, ok, details, seconds):
    return f"criterion {cid}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {title}: {details}"


@pytest.mark.parametrize("cid,title", CRITERIA)
def test_criterion(cid, title, capsys):
    t0 = time.perf_counter()
    ok, details = verify.run_check(cid)
    with capsys.disabled():
        print("\n" + line(cid, title, ok, details, time.perf_counter() - t0))
    assert ok, details


def test_criterion_5_fails_only_on_k7():
    assert list(verify.transitivity_failures()) == ["K7"]


def test_report_lists_every_criterion_once():
    ids = [cid for cid, _, _ in verify.CHECKS]
    assert ids == [str(i) for i in range(1, 10)]


def test_total_runtime():
    t0 = time.perf_counter()
    rep = verify.run_all()
    assert time.perf_counter() - t0 < 60
    assert rep.exit_code == (0 if all(s[1] == "pass" for s in rep.sections) else 1)


if __name__ == "__main__":
    for cid, title, fn in verify.CHECKS:
        t0 = time.perf_counter()
        ok, details = fn()
        print(line(cid, title, ok, details, time.perf_counter() - t0))
