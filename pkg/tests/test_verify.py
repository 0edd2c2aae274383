import json

import pytest

from speclab import spectra, verify


@pytest.mark.parametrize("suite", [verify.verify_kronecker, verify.verify_table1, verify.verify_dinfinity])
def test_suites_pass_and_are_deterministic(suite):
    rows = suite()
    assert rows and verify.all_passed(rows), [r.line() for r in rows if not r.passed]
    assert [r.line() for r in suite()] == [r.line() for r in rows]
    json.dumps(verify.rows_doc(rows))
    assert all(r.claim for r in rows)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tube_suite(n):
    assert verify.all_passed(verify.verify_tube(n))


def test_declared_rows_are_marked():
    rows = verify.verify_kronecker()
    generic = [r for r in rows if "generic module" in r.case]
    assert generic and all(r.note == "declared" for r in generic)


def test_failed_row_line():
    row = verify._row("demo", 1, 2, "one is two")
    assert not row.passed and row.line().startswith("FAIL demo")


def test_kronecker_partition():
    space = spectra.shift_spectrum(verify.builtins.kronecker_model())
    part = verify.space_partition(space)
    assert len(part["discrete"]) == 10
    assert part["closed"] == ["r!=0", "r!=1", "r!=2", "r!=inf"]
    assert part["generic"] == ["r"]


def test_spec_z_reference_space():
    s = verify.spec_z_space(10)
    assert s.points == ("(2)", "(3)", "(5)", "(7)", "(0)")
    assert s.closure(4) == s.full
