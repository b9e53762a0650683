from __future__ import annotations

import json

from click.testing import CliRunner

from linkinv.cli import main


def run(*args: str):
    return CliRunner().invoke(main, list(args))


def run_json(*args: str) -> dict:
    result = run(*args, "--json")
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_analyze_json_weights():
    payload = run_json("analyze", "z0^7*z1 + z1^4*z2 + z2^2*z0 + z3^3")
    assert payload["weights"]["weights"] == [7, 8, 25, 19]
    assert payload["weights"]["degree"] == 57
    assert payload["dual"]["weights"] == [5, 13, 22, 19]
    assert payload["dual"]["degree"] == 57


def test_analyze_transpose_flag():
    payload = run_json("analyze", "z0^7*z1 + z1^4*z2 + z2^2*z0 + z3^3", "--transpose")
    assert payload["weights"]["weights"] == [5, 13, 22, 19]
    assert payload["transposed_from"] == "z0^7*z1 + z1^4*z2 + z0*z2^2 + z3^3"


def test_transpose_command_matches_flag():
    a = run_json("analyze", "z0^3 + z0*z1^2", "--transpose")
    b = run_json("transpose", "z0^3 + z0*z1^2")
    assert a == b


def test_analyze_single_square():
    payload = run_json("analyze", "z0^2")
    assert payload["weights"]["weights"] == [1]
    assert payload["weights"]["degree"] == 2


def test_homology_subset_keys():
    payload = run_json("homology", "z0^3 + z1^3 + z2^3")
    assert set(payload) == {"polynomial", "weights", "homology"}
    assert payload["homology"]["betti"] == 2


def test_obstruct_subset_keys():
    payload = run_json("obstruct", "z0^8 + z1^8 + z2^4 + z3^2 + z4^2")
    assert set(payload) == {"polynomial", "weights", "obstructions"}
    obs = payload["obstructions"]
    assert obs["bvc"]["applicable"] is True
    assert obs["bvc"]["lhs_scaled"] == 0
    assert obs["bvc"]["holds"] is True


def test_family_chain_cycle_verdict():
    payload = run_json("family", "chain-cycle", "3", "2", "10", "5", "14",
                       "--squares", "1")
    assert (payload["m2"], payload["m3"], payload["b3"]) == (3, 701, 0)
    assert payload["pattern_valid"] is True
    assert payload["dual_u_pattern"] is True
    assert payload["squares"] == 1
    assert payload["perturbed"] == "z0^6 + z1^2 + z2^10*z3 + z3^5*z4 + z2*z4^14 + z5^2"
    assert payload["link"]["weights"] == [701, 2103, 342, 786, 276, 2103]
    assert payload["link"]["degree"] == 4206
    assert payload["link_dim"] == 9
    assert payload["betti"] == 0
    assert payload["torsion"] == []
    assert payload["delta_minus1"] == 701
    assert payload["cone_dim"] == 2
    assert payload["no_extremal"] is True
    assert payload["classification"] == {"kind": "homotopy_sphere",
                                         "subtype": "kervaire"}


def test_family_chain_cycle_plain_record():
    payload = run_json("family", "chain-cycle", "3", "2", "10", "5", "14")
    assert payload["base"]["weights"] == [701, 701, 198, 381, 123]
    assert payload["dual"]["weights"] == [701, 2103, 342, 786, 276]
    assert "squares" not in payload


def test_family_double_tail():
    payload = run_json("family", "lemma45", "3", "11", "13")
    assert payload["shape"] == "double_tail"
    assert payload["base"]["weights"] == [143, 39, 195, 33, 198]
    assert payload["base"]["degree"] == 429
    assert payload["dual"]["weights"] == [286, 39, 429, 33, 429]
    assert payload["bp_companion"] == "z0^3 + z1^22 + z2^2 + z3^26 + z4^2"
    assert payload["milnor"] == 1050
    assert payload["torsion"] == [3]
    assert payload["delta_1"] == 3
    assert payload["einstein_obstructed"] is True
    assert payload["no_extremal"] is True


def test_family_k_range_batch():
    payload = run_json("family", "example43", "--k", "2..4")
    members = payload["members"]
    assert [m["k"] for m in members] == [2, 3, 4]
    assert members[0]["exponents"] == [13, 3, 5]
    assert all(m["einstein_obstructed"] for m in members)


def test_family_prime_power():
    payload = run_json("family", "example45", "11", "5", "2")
    assert payload["exponents"] == [11, 5, 2]
    assert payload["torsion"] == [11]
    assert payload["delta_1"] == 11


def test_family_wrong_arity_is_input_error():
    result = run("family", "lemma45", "3", "11")
    assert result.exit_code == 2
    assert "error" in result.output


def test_verify_tables_row_one_json():
    payload = run_json("verify-tables", "--table", "1", "--rows", "1",
                       "--oracle-cap", "0")
    assert payload["passed"] is True
    assert len(payload["tables"]) == 1
    assert payload["tables"][0]["rows"] == 1
    assert payload["tables"][0]["failed_rows"] == []
    assert len(payload["tables"][0]["reports"]) == 1


def test_verify_tables_text_mode():
    result = run("verify-tables", "--table", "2", "--rows", "1-2",
                 "--oracle-cap", "0")
    assert result.exit_code == 0
    assert "table 2 row  1: pass" in result.output
    assert "all rows pass" in result.output


def test_verify_tables_bad_rows():
    result = run("verify-tables", "--table", "1", "--rows", "99")
    assert result.exit_code == 2


def test_parse_error_exits_2():
    result = run("analyze", "@@")
    assert result.exit_code == 2
    assert "error" in result.output


def test_degree_cap_exits_3():
    result = run("oracle", "z0^5 + z0*z1^2 + z4*z2^3 + z2*z3^107 + z3*z4^11",
                 "--oracle-cap", "100")
    assert result.exit_code == 3


def test_oracle_matches_closed_forms():
    payload = run_json("oracle", "z0^3 + z1^22 + z2^2 + z3^26 + z4^2")
    assert payload["degree"] == 1050
    assert payload["degree_matches_milnor"] is True
    assert payload["eval_1"] == 3
    assert payload["eval_1_matches"] is True
    assert payload["eval_minus1_matches"] is True


def test_oracle_tiny_suspension():
    payload = run_json("oracle", "z0^2 + z1^2 + z2^2")
    assert payload["degree"] == 1
    assert payload["milnor"] == 1
    assert payload["eval_1"] == 2
    assert payload["eval_minus1"] == 0
    assert payload["leading_coefficients"] == [1, 1]


def test_text_mode_renders_lines():
    result = run("analyze", "z0^3 + z1^3 + z2^3")
    assert result.exit_code == 0
    assert "weights" in result.output
    assert "degree: 3" in result.output
