# Copyright 2026 The frobkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import os

import pytest

import frobkit
from frobkit import acceptance
from frobkit.acceptance import CheckResult
from frobkit.cli import main

A1 = ("--ring", "A1", "-p", "3")
QUADRIC = ("--ring", "quadric3", "-p", "2")


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestRing:
    def test_show(self, capsys):
        code, data = run(capsys, "ring", "show", "--ring", "A1", "-p", "3")
        assert code == 0
        assert data["command"] == "ring show"
        assert data["ring"] == "A1"
        result = data["result"]
        assert result["hilbert_basis"] == [[1, 0], [1, 1], [1, 2]]
        assert result["rays"] == [[1, 0], [1, 2]]
        assert result["class_group"] == "Z/2"
        assert result["gorenstein"] is True
        assert result["alpha"] == 0

    def test_spec_file(self, capsys, datadir):
        path = os.path.join(datadir, "rings", "veronese2.toml")
        code, data = run(capsys, "classgroup", "--ring", path)
        assert code == 0
        assert data["ring"] == "veronese2"
        assert data["result"]["group"] == "Z/2"

    def test_classgroup(self, capsys):
        code, data = run(capsys, "classgroup", "--ring", "A1", "-p", "3")
        assert code == 0
        result = data["result"]
        assert (result["free_rank"], result["torsion"]) == (0, [2])
        assert result["smith_diagonal"] == [1, 2]
        assert [c["order"] for c in result["classes"]] == [1, 2]
        assert result["classes"][1]["class"] == {"free": [], "torsion": [1]}

    def test_infinite_classgroup_lists_no_classes(self, capsys):
        code, data = run(capsys, "classgroup", "--ring", "quadric3", "-p", "2")
        assert code == 0
        assert data["result"]["group"] == "Z"
        assert "classes" not in data["result"]


class TestFrobenius:
    def test_ft(self, capsys):
        code, data = run(capsys, "ft", "--ring", "A1", "-p", "3", "--class", "1")
        assert code == 0
        result = data["result"]
        assert result["is_ft"] is True
        assert result["order"] == 2
        assert (result["pre_period"], result["period"]) == (0, 1)
        assert result["coefficients"] == [0, 1]

    def test_ft_of_free_class(self, capsys):
        code, data = run(
            capsys, "ft", "--ring", "quadric3", "-p", "2", "--coeffs=-1,0,0,0"
        )
        assert code == 0
        assert data["result"]["is_ft"] is False
        assert data["result"]["order"] == "infinity"
        assert data["parameters"]["coeffs"] == [-1, 0, 0, 0]

    def test_ft_category(self, capsys):
        code, data = run(capsys, "ft-category", *A1, "--emax", "1")
        assert code == 0
        assert data["result"]["complete"] is True
        assert [c["first_level"] for c in data["result"]["classes"]] == [1, 1]

    def test_decompose(self, capsys):
        code, data = run(
            capsys, "decompose", *A1, "--coeffs", "0,0", "--e", "1"
        )
        assert code == 0
        result = data["result"]
        assert result["q"] == 3
        assert result["total"] == 9
        assert result["free_multiplicity"] == 5
        assert [s["multiplicity"] for s in result["summands"]] == [5, 4]

    def test_signature(self, capsys):
        code, data = run(capsys, "signature", "--ring", "A1", "-p", "3", "--emax", "3")
        assert code == 0
        result = data["result"]
        assert result["a_e"] == [5, 41, 365]
        assert result["signature_estimates"][0] == {"numerator": 5, "denominator": 9}
        assert result["sdim"] == 2
        assert result["sdim_confident"] is True
        assert data["caveats"]

    def test_signature_short_range(self, capsys):
        code, data = run(capsys, "signature", "--ring", "A1", "-p", "3", "--emax", "2")
        assert code == 0
        assert data["result"]["sdim"] is None
        assert "sdim needs at least three levels" in data["caveats"]

    def test_sdim(self, capsys):
        code, data = run(
            capsys, "sdim", "--ring", "A1", "-p", "3", "--coeffs", "0,1", "--emax", "3"
        )
        assert code == 0
        assert data["result"] == {"sdim": 2, "confident": True}

    def test_abundance(self, capsys):
        code, data = run(
            capsys,
            "abundance",
            "--ring",
            "A1",
            "-p",
            "3",
            "--source",
            "0,0",
            "--target",
            "1",
            "--emax",
            "3",
        )
        assert code == 0
        result = data["result"]
        assert result["b_e"] == [4, 40, 364]
        assert result["verdict"] == "abundant"
        fit = result["growth_exponent_fit"]
        assert (fit["numerator"], fit["denominator"]) == (2, 1)
        assert fit["estimate"] == 2.0

    def test_cap_exceeded(self, capsys, monkeypatch):
        monkeypatch.setenv("FROBKIT_CAP", "10")
        code, data = run(
            capsys, "decompose", *A1, "--coeffs", "0,0", "--e", "2"
        )
        assert code == 2
        assert data["error"] == "CapExceeded"
        assert data["exit_code"] == 2
        assert data["command"] == "decompose"


class TestDepth:
    def test_not_mcm(self, capsys):
        code, data = run(
            capsys,
            "depth",
            "--ring",
            "quadric3",
            "-p",
            "2",
            "--coeffs",
            "2,0,0,0",
            "--window",
            "1",
        )
        assert code == 0
        result = data["result"]
        assert result["mcm"] is False
        assert result["depth_upper"] == 2
        assert result["certificate"]["i"] == 2
        assert {"degree": [1, 0, 0], "rank": 1} in result["nonvanishing"]["2"]
        assert data["caveats"] == []

    def test_mcm_has_window_caveat(self, capsys):
        code, data = run(
            capsys, "depth", *A1, "--coeffs", "0,1", "--window", "2"
        )
        assert code == 0
        assert data["result"]["mcm"] is True
        assert data["result"]["depth_claim"] == 2
        assert data["result"]["window"] == [[-2, 2], [-2, 2]]
        assert len(data["caveats"]) == 1

    def test_hom_mcm(self, capsys):
        code, data = run(
            capsys,
            "hom-mcm",
            "--ring",
            "A1",
            "-p",
            "3",
            "--ft",
            "1",
            "--target",
            "0",
            "--emax",
            "1",
            "--window",
            "2",
        )
        assert code == 0
        result = data["result"]
        assert result["passed"] is True
        assert [level["e"] for level in result["levels"]] == [0, 1]

    def test_hom_mcm_needs_ft_class(self, capsys):
        code, data = run(
            capsys,
            "hom-mcm",
            "--ring",
            "quadric3",
            "-p",
            "2",
            "--ft-coeffs",
            "1,0,0,0",
            "--target",
            "0",
        )
        assert code == 4
        assert data["error"] == "HypothesisViolated"


class TestMonomial:
    def test_decompose(self, capsys):
        code, data = run(
            capsys,
            "monomial",
            "decompose",
            "--n",
            "2",
            "--ideal",
            "x, y",
            "-p",
            "2",
            "--e",
            "1",
        )
        assert code == 0
        result = data["result"]
        assert (result["copies"], result["free"], result["total"]) == (1, 3, 4)
        assert result["ideal"]["text"] == "(x, y)"

    def test_decompose_quotient(self, capsys):
        code, data = run(
            capsys,
            "monomial",
            "decompose",
            "--n",
            "1",
            "--ideal",
            "x^2",
            "-p",
            "2",
            "--e",
            "1",
            "--quotient",
        )
        assert code == 0
        result = data["result"]
        assert result["zero"] == 0
        assert result["pieces"] == [
            {"text": "(x)", "generators": [[1]], "multiplicity": 2}
        ]

    def test_frobpower(self, capsys):
        code, data = run(
            capsys, "monomial", "frobpower", "--n", "2", "--ideal", "x, y^2", "--q", "3"
        )
        assert code == 0
        assert data["result"]["power"]["text"] == "(x^3, y^6)"

    def test_syzygy_example(self, capsys):
        code, data = run(
            capsys, "monomial", "syzygy-example", "--d", "3", "-p", "2", "--e", "1"
        )
        assert code == 0
        result = data["result"]
        assert result["b_e"] == 1
        assert (result["free_rank"], result["syzygy_rank"]) == (14, 16)

    def test_syntax_error(self, capsys):
        code, data = run(
            capsys,
            "monomial",
            "decompose",
            "--n",
            "2",
            "--ideal",
            "x, y^z",
            "-p",
            "2",
            "--e",
            "1",
        )
        assert code == 1
        assert data["error"] == "MonomialSyntaxError"
        assert "column 4" in data["message"]


class TestVerify:
    def test_single_criterion(self, capsys):
        code, data = run(capsys, "verify", "--criterion", "1")
        assert code == 0
        assert data["result"]["passed"] is True
        assert [c["id"] for c in data["result"]["criteria"]] == [1]

    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setitem(
            acceptance.CRITERIA, 1, lambda: CheckResult(1, False, "forced")
        )
        code, data = run(capsys, "verify", "--criterion", "1")
        assert code == 3
        assert data["result"]["criteria"][0]["detail"] == "forced"


class TestUsage:
    def test_missing_ring(self, capsys):
        code, data = run(capsys, "classgroup")
        assert code == 1
        assert data["error"] == "UsageError"

    def test_bad_characteristic(self, capsys):
        code, data = run(capsys, "classgroup", "--ring", "A1", "-p", "6")
        assert code == 1
        assert data["error"] == "ValidationError"

    def test_zero_characteristic(self, capsys):
        code, data = run(capsys, "classgroup", "--ring", "veronese3", "-p", "0")
        assert code == 1
        assert data["error"] == "ValidationError"

    def test_undecodable_spec_file(self, capsys, tmp_path):
        path = tmp_path / "ring.toml"
        path.write_bytes(b"\xff\xfe[ring]\n")
        code, data = run(capsys, "classgroup", "--ring", str(path))
        assert code == 1
        assert data["error"] == "ParseError"
        assert data["exit_code"] == 1

    def test_no_command(self, capsys):
        assert main([]) == 1
        assert "usage:" in capsys.readouterr().out

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert frobkit.__version__ in capsys.readouterr().out

    def test_pretty(self, capsys):
        assert main(["--pretty", "classgroup", "--ring", "A1", "-p", "3"]) == 0
        out = capsys.readouterr().out
        assert "result.group" in out
        assert "Z/2" in out

    def test_deterministic_output(self, capsys):
        args = ("decompose", *QUADRIC, "--coeffs", "1,0,0,0", "--e", "2")
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        first.pop("wall_time_ms")
        second.pop("wall_time_ms")
        assert first == second
