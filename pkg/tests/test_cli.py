import json
import subprocess
import sys

import pytest

from conftest import CLI_COMMANDS


@pytest.mark.parametrize("argv", CLI_COMMANDS, ids=lambda a: " ".join(a[:3]))
def test_command_succeeds_and_verifies(cli, argv, tmp_path):
    r = cli(*argv)
    assert r.code == 0, r.err
    assert isinstance(r.doc, dict)
    assert r.out.endswith("}\n")
    path = tmp_path / "doc.json"
    path.write_text(r.out)
    v = cli("verify", str(path))
    assert v.code == 0, v.out
    assert v.doc["ok"]


def test_human_format(cli):
    r = cli("certify-cubic", "--a", "1", "--b", "2", "--c", "4", "--p", "2", "--format", "human")
    assert r.code == 0
    assert r.out.startswith("NoAbelianPoints\n")
    assert "[ok ] staircase_profile" in r.out


def test_out_file_matches_stdout(cli, tmp_path):
    path = tmp_path / "k4.json"
    r = cli("k4", "--out", str(path))
    assert path.read_text() == r.out


def test_no_certificate_exit_1(cli):
    r = cli("certify-cubic", "--a", "1", "--b", "1", "--c", "1", "--p", "7")
    assert r.code == 1
    assert r.doc["kind"] == "NoCertificate"
    assert r.doc["message"].startswith("no certificate by this method")
    assert cli("scan", "--form", "3*x^3 + 4*y^3 + 5*z^3", "--p-max", "200").code == 1
    assert cli("solve-local", "--form", "x^3 + 2*y^3 + 4*z^3", "--p", "2").code == 1
    assert cli("norm-cert", "--f", "x^3 - x - 1", "--m", "3").code == 1
    assert cli("sn-cert", "--f", "x^4 + 1").code == 1
    assert cli("cor2", "--f", "x^2 + x + 1", "--p-max", "500").code == 1


def test_usage_errors_exit_2(cli):
    assert cli().code == 2
    assert cli("certify-cubic", "--a", "1").code == 2
    assert cli("certify-cubic", "--a", "1", "--b", "1", "--c", "1", "--p", "7", "--family").code == 2
    assert cli("certify-cy", "--ell", "4", "--p", "2").code == 2
    assert cli("genus-plan", "--g", "3").code == 2
    assert cli("thm-ell", "--ell", "6").code == 2
    assert cli("find-ell", "--q", "12").code == 2
    assert cli("cor2", "--f", "x^2 - 1").code == 2
    assert cli("scan", "--form", "not a form").code == 2


def test_resource_limit_exit_3(cli):
    assert cli("thm3", "--f", "x", "--p-max", "50").code == 3
    r = cli("solve-local", "--form", "3*x^3 + 4*y^3 + 5*z^3", "--p", "97", "--precision", "3", "--budget", "1000")
    assert r.code == 3


def test_verify_detects_tampering(cli, tmp_path):
    doc = cli("thm-ell", "--ell", "5").doc
    doc["prime"] = 31
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    r = cli("verify", str(path))
    assert r.code == 1
    assert not r.doc["ok"] and r.doc["problems"]


def test_verify_detects_edited_statement(cli, tmp_path):
    doc = cli("cor2", "--f", "x^2 - 2").doc
    doc["conditions"][0]["verified"] = False
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert cli("verify", str(path)).code == 1


def test_verify_unreadable(cli, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert cli("verify", str(path)).code == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "abelian_points", "find-ell", "--q", "9"],
        capture_output=True, text=True, check=True,
    )
    doc = json.loads(out.stdout)
    assert (doc["N"], doc["ell"]) == (10, 5)


def test_unsorted_coefficients_normalized(cli):
    r = cli("certify-cubic", "--a", "2", "--b", "4", "--c", "5", "--p", "2")
    assert r.code == 0
    assert r.doc["profile"]["valuations"] == [1, 2, 0]


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 23, 29])
def test_selmer_never_certified(cli, p):
    r = cli("certify-cubic", "--a", "3", "--b", "4", "--c", "5", "--p", str(p))
    assert r.code == 1
    assert "no certificate by this method" in r.doc["message"]


def test_find_ell_case_ii(cli):
    doc = cli("find-ell", "--q", "8").doc
    assert (doc["N"], doc["ell"]) == (10, 5)
