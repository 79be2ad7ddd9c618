import json
import subprocess
import sys
from pathlib import Path

import pytest

from rmac.cli import execute
from rmac.intlinalg import FGAbelianGroup
from rmac.simplicial import SimplicialComplex

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = execute(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genus_json(capsys):
    code, out, _ = run(capsys, "genus", "--n", "6", "--quotient")
    assert code == 0
    assert json.loads(out) == {"n": 6, "genus": 17, "quotient_genus": 2}
    assert out.strip() == '{"n":6,"genus":17,"quotient_genus":2}'


def test_genus_audit(capsys):
    code, out, _ = run(capsys, "genus", "--n", "6", "--audit")
    assert code == 0
    data = json.loads(out)
    assert data["genus_quotient"] == 2 and data["euler_total"] == -32


def test_words_matches_golden_listing(capsys):
    code, out, _ = run(capsys, "words", "--n", "8")
    assert code == 0
    assert out == (DATA / "listing_n8.txt").read_text()
    assert out.rstrip().splitlines()[-2] == "Total number of basis elements in H_1:  258"


def test_homology_json_round_trip(capsys):
    code, out, _ = run(capsys, "homology", "--n", "5", "--json")
    assert code == 0
    groups = [FGAbelianGroup.from_json(g) for g in json.loads(out)["homology"]]
    assert [str(g) for g in groups] == ["Z", "Z^10", "Z"]


def test_homology_from_file(capsys, tmp_path):
    path = tmp_path / "k.json"
    path.write_text('{"vertices": 3, "maximal_faces": [[1,2],[2,3],[1,3]]}')
    code, out, _ = run(capsys, "homology", "--complex", str(path))
    assert code == 0 and "H_1 = 0" in out and "H_2 = Z" in out


def test_bad_complex_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": 3, "maximal_faces": [[1,4]]}')
    code, _, err = run(capsys, "homology", "--complex", str(path))
    assert code == 2 and "InvalidArgument" in err


def test_quotient(capsys):
    code, out, _ = run(capsys, "quotient", "--n", "6")
    assert code == 0 and "genus: 2" in out


def test_decompose_table_and_json(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "6")
    assert code == 0
    assert out.splitlines()[0].split()[:2] == ["Lyndon", "word"]
    assert "Orbits" in out.splitlines()[0]
    code, out, _ = run(capsys, "decompose", "--n", "8", "--json")
    data = json.loads(out)
    assert data["multiplicities"] == {"Ind_{Z_4}^{Z_8} Z^3": 1, "Ind_{Z_2}^{Z_8} sign": 3, "Z[Z_8]": 30}


def test_e2_page(capsys):
    code, out, _ = run(capsys, "e2-page", "--n", "6", "--json")
    assert code == 0
    assert json.loads(out)["entries"]["0,1"] == {"rank": 4, "invariant_factors": [2, 6]}
    code, out, _ = run(capsys, "e2-page", "--n", "8")
    assert "Z^30 ⊕ (Z/2)^3 ⊕ Z/4" in out


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", "--n", "8", "--json")
    assert code == 0 and json.loads(out)["coefficients"] == [1, 30, 1]


def test_aut(capsys, tmp_path):
    code, out, _ = run(capsys, "aut", "--n", "6", "--json")
    assert code == 0 and json.loads(out)["order"] == 12
    code, _, err = run(capsys, "aut", "--n", "11")
    assert code == 2 and "ResourceLimit" in err
    code, out, _ = run(capsys, "aut", "--n", "11", "--perm-cap", "11", "--json")
    assert code == 0 and json.loads(out)["order"] == 22


def test_dump_round_trip(capsys):
    code, out, _ = run(capsys, "dump", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert [len(c) for c in data["cells"]] == [8, 12, 6]
    code, out, _ = run(capsys, "dump", "--n", "3", "--cc")
    assert json.loads(out)["kind"] == "cc"


def test_cell_cap_flag(capsys):
    code, _, err = run(capsys, "homology", "--n", "8", "--cell-cap", "10")
    assert code == 2 and "ResourceLimit" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3")
    assert code == 0 and "7/7 PASS" in out


def test_verify_quick_skips_cellular_legs(capsys):
    code, out, _ = run(capsys, "verify", "--n", "8", "--depth", "quick")
    assert code == 0 and "SKIP" in out and "FAIL" not in out


def test_verify_rejects_full_depth_out_of_range(capsys):
    code, _, _ = run(capsys, "verify", "--n", "9", "--depth", "full")
    assert code == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--json")
    data = json.loads(out)
    assert code == 0 and all(leg["status"] == "PASS" for leg in data["legs"])
    assert any("2·Z[Z_5]" in leg["detail"] for leg in data["legs"])


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["genus"],
    ["genus", "--n", "2"],
    ["genus", "--n", "six"],
    ["genus", "--n", "6", "--bogus"],
    ["decompose", "--n", "30"],
])
def test_usage_errors(capsys, argv):
    assert execute(argv) == 2


@pytest.mark.parametrize("argv", [
    ["genus", "--n", "7", "--quotient"],
    ["decompose", "--n", "7"],
    ["e2-page", "--n", "6"],
    ["verify", "--n", "4"],
    ["words", "--n", "10"],
])
def test_deterministic_output(capsys, argv):
    first = run(capsys, *argv)[:2]
    second = run(capsys, *argv)[:2]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rmac", "genus", "--n", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["genus"] == 5


def test_simplicial_json_via_cli_dump(tmp_path, capsys):
    K = SimplicialComplex(4, ((1, 2), (2, 3), (1, 3), (3, 4)))
    path = tmp_path / "fig.json"
    path.write_text(K.dumps())
    code, out, _ = run(capsys, "homology", "--complex", str(path), "--json")
    assert code == 0 and json.loads(out)["cells"] == [16, 32, 16]
