"""Exit-code contract and output shapes of the command line interface."""

import io
import os

from stonespec.cli import main

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def fixture(name):
    return os.path.join(FIXTURES, name)


class TestExitCodes:
    def test_validate_fixture_ok(self):
        code, out, _ = run("validate", fixture("mo2.lat"))
        assert code == 0
        assert "lattice MO2: ok" in out

    def test_validate_empty_file_is_an_input_error(self, tmp_path):
        empty = tmp_path / "empty.lat"
        empty.write_text("# nothing\n")
        code, _, err = run("validate", str(empty))
        assert code == 2 and "nothing to validate" in err

    def test_missing_file(self):
        code, _, err = run("validate", "no-such-file.lat")
        assert code == 2 and "error:" in err

    def test_unknown_subcommand(self):
        code, _, _ = run("frobnicate")
        assert code == 2

    def test_unknown_object(self):
        code, _, err = run("quasipoints", fixture("mo2.lat"), "NOPE")
        assert code == 2 and "NOPE" in err

    def test_parse_errors_reported_with_positions(self, tmp_path):
        bad = tmp_path / "bad.lat"
        bad.write_text("family E in X { 0: a ; }\n")
        code, _, err = run("validate", str(bad))
        assert code == 2 and "dangling-reference" in err

    def test_unknown_suite(self):
        code, _, err = run("check", "bogus-suite")
        assert code == 2 and "unknown suite" in err


class TestTables:
    def test_quasipoints_table(self):
        code, out, _ = run("quasipoints", fixture("mo2.lat"), "MO2")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "Q{a,1}: a, 1"
        assert "4 quasipoints" in out
        assert "  Q_a: Q{a,1}" in out  # the incidence rows

    def test_quasipoints_json_incidence(self):
        code, out, _ = run("quasipoints", fixture("mo2.lat"), "MO2", "--json")
        assert code == 0
        import json
        doc = json.loads(out)
        assert doc["base"]["a"] == ["Q{a,1}"]
        assert doc["base"]["1"] == ["Q{a,1}", "Q{a',1}", "Q{b,1}", "Q{b',1}"]
        assert doc["points"]["Q{a,1}"] == ["a", "1"]

    def test_quasipoints_of_a_field(self):
        code, out, _ = run("quasipoints", fixture("quotient.lat"), "F4")
        assert code == 0 and "4 quasipoints" in out

    def test_observable_table_and_json(self):
        code, out, _ = run("observable", fixture("mo2.lat"), "E0")
        assert code == 0
        assert "Q{a,1}: 0" in out
        code, js, _ = run("observable", fixture("mo2.lat"), "E0", "--json")
        assert code == 0 and js.strip().startswith("{")
        assert '"Q{a,1}": "0"' in js

    def test_observable_of_two_parameter_family(self):
        code, out, _ = run("observable", fixture("mo2.lat"), "G0")
        assert code == 0 and "Q{a,1}: 0 + 0i" in out

    def test_spectrum(self):
        code, out, _ = run("spectrum", fixture("mo2.lat"), "E0")
        assert code == 0
        assert out.strip() == "sp = {0, 1}; resolvent = (-inf, 0) u (0, 1) u (1, inf)"

    def test_decompose(self):
        code, out, _ = run("decompose", fixture("mo2.lat"), "G0")
        assert code == 0
        assert "first:  0: a; 1: 1" in out

    def test_quotient_and_lift(self):
        code, out, _ = run("quotient", fixture("quotient.lat"), "F4", "I1")
        assert code == 0 and "classes:" in out
        code, out, _ = run("lift", fixture("quotient.lat"), "F4", "I1", "EF")
        assert code == 0
        values = dict(line.split(": ") for line in out.strip().splitlines())
        assert values["2"] == "0" and values["3"] == "1/2" and values["4"] == "1"
        assert values["1"] == "1"  # deleted atom takes the top threshold

    def test_integrate(self):
        code, out, _ = run("integrate", fixture("mo2.lat"), "E0", "--eps", "1/4")
        assert code == 0 and "max deviation from f_E: 0" in out
        code, _, err = run("integrate", fixture("mo2.lat"), "E0", "--eps", "0")
        assert code == 2

    def test_emit_json_and_dot(self):
        code, out, _ = run("emit", "json", fixture("mo2.lat"), "MO2")
        assert code == 0 and '"kind": "lattice"' in out
        code, out, _ = run("emit", "dot", fixture("mo2.lat"), "MO2")
        assert code == 0 and out.startswith('digraph "MO2"')


class TestCheckCommand:
    def test_passing_suite_exits_zero(self):
        code, out, _ = run("check", "counterexamples")
        assert code == 0
        assert "seed: 0" in out and "[counterexamples] 0 failures" in out

    def test_failing_suite_exits_one_with_counterexample(self):
        # the injectivity suite includes chain fixtures, whose spectrum is a
        # single point; it reports the genuine counterexamples and fails
        code, out, _ = run("check", "injectivity")
        assert code == 1
        assert "FAIL" in out and "chain(3)" in out

    def test_seed_echoed(self):
        code, out, _ = run("check", "continuity", "--seed", "17")
        assert code == 0 and "seed: 17" in out

    def test_deterministic_across_runs(self):
        a = run("check", "continuity", "--seed", "3", "--max-size", "3")
        b = run("check", "continuity", "--seed", "3", "--max-size", "3")
        assert a == b
