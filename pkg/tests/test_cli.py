import json
import math

import pytest

from spinlogic import npn
from spinlogic.cli import main
from spinlogic.search import selective_delay_inputs, evaluate_table
from spinlogic.ternary import encode, multiplication

TRIPLE_CSV = "1.5707963267948966,3.141592653589793,4.71238898038469"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_ternary_json(capsys):
    code, out, _ = run(capsys, "classify", "--radix", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["npn_class_count"] == 84
    assert doc["burnside_count"] == 84
    assert sum(c["size"] for c in doc["npn_classes"]) == 19683
    assert doc["self_check"] == "pass"
    assert len(doc["npn_classes"]) == 84


def test_classify_binary(capsys):
    code, out, _ = run(capsys, "classify", "--radix", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["npn_class_count"] == 4
    assert doc["pc_consistent"] is True


def test_classify_text_and_csv(capsys):
    code, out, _ = run(capsys, "classify", "--radix", "3")
    assert code == 0
    assert "npn classes: 84" in out
    assert "burnside count: 84" in out
    code, out, _ = run(capsys, "classify", "--radix", "3", "--format", "csv")
    assert code == 0
    assert "npn_class_count,84" in out


def test_classify_deterministic_output(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main(["classify", "--radix", "3", "--format", "json", "--out", str(first)]) == 0
    assert main(["classify", "--radix", "3", "--format", "json", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_simulate_single_pulse_grid(capsys):
    code, out, _ = run(
        capsys,
        "simulate",
        "--sequence",
        "single-pulse",
        "--grid-a",
        TRIPLE_CSV,
        "--grid-b",
        TRIPLE_CSV,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    first_row = lines[1].split(",")
    assert float(first_row[1]) == pytest.approx(1.0)  # sin(pi/2)*sin(pi/2)
    assert float(first_row[3]) == pytest.approx(-1.0)


def test_simulate_linear_grid_spec(capsys):
    code, out, _ = run(
        capsys,
        "simulate",
        "--sequence",
        "two-pulse",
        "--grid-a",
        "lin:0:6.283185307179586:10",
        "--grid-b",
        "lin:0:6.283185307179586:10",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    # the CLI grid equals the library's two-pulse grid (defaults 3pi/2, pi/2)
    from spinlogic.spinsim import two_pulse_grid

    expected = two_pulse_grid(10, 3 * math.pi / 2, math.pi / 2)
    for i, line in enumerate(lines[1:]):
        for j, cell in enumerate(line.split(",")[1:]):
            assert float(cell) == pytest.approx(expected[i][j], abs=1e-11)


def test_simulate_selective_delay_template(capsys):
    # delays (rows) x pulse frequencies (cols) around peaks at pi and 2*pi
    code, out, _ = run(
        capsys,
        "simulate",
        "--sequence",
        "selective-delay",
        "--grid-a",
        "0.0,0.5,1.0",
        "--grid-b",
        "3.141592653589793,4.71238898038469,6.283185307179586",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    # tau = 0 rows: excited peak reads 1, missed midpoint frequency reads 0
    first = lines[1].split(",")
    assert float(first[1]) == pytest.approx(1.0)
    assert float(first[2]) == 0.0


def test_simulate_template_file(tmp_path, capsys):
    doc = {
        "peaks": [{"label": "s", "offset_rad_s": 0.0}],
        "sequence": [{"type": "hard_pulse", "beta": "$A", "phi": "$B"}],
    }
    path = tmp_path / "seq.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(
        capsys, "simulate", "--sequence", str(path), "--grid-a", "1.5707963267948966",
        "--grid-b", "1.5707963267948966",
    )
    assert code == 0
    assert out.splitlines()[1].split(",")[1] == "1"


def test_simulate_bad_inputs(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "simulate", "--sequence", str(bad), "--grid-a", "1", "--grid-b", "1")
    assert code == 2
    assert "error" in err
    code, _, err = run(
        capsys, "simulate", "--sequence", "single-pulse", "--grid-a", "", "--grid-b", "1"
    )
    assert code == 2


def test_search_multiplication_hit(capsys):
    grid = "0.3," + TRIPLE_CSV + ",5.5"
    code, out, _ = run(
        capsys,
        "search",
        "--sequence",
        "single-pulse",
        "--grid-a",
        grid,
        "--grid-b",
        grid,
        "--target",
        "multiplication",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("a1,a2,a3,b1")
    assert len(lines) > 1
    assert any(",15665," in line for line in lines[1:])


def test_search_unreachable_target_is_empty_but_ok(capsys):
    template, delays, freqs = selective_delay_inputs()
    table = evaluate_table(template, delays, freqs)
    target = npn.canonical_index(encode(table.logic))
    grid = "lin:0:6.283185307179586:8"
    code, out, _ = run(
        capsys,
        "search",
        "--sequence",
        "single-pulse",
        "--grid-a",
        grid,
        "--grid-b",
        grid,
        "--target",
        str(target),
    )
    assert code == 0
    assert out.strip().splitlines() == ["a1,a2,a3,b1,b2,b3,table_index,canonical,class_size"]


def test_search_all_reports_every_class(capsys):
    grid = "0.0," + TRIPLE_CSV
    code, out, _ = run(
        capsys,
        "search",
        "--sequence",
        "single-pulse",
        "--grid-a",
        grid,
        "--grid-b",
        grid,
        "--target",
        "all",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "canonical,size,achievable,tables"
    assert len(lines) == 85
    achieved = [line for line in lines[1:] if ",true," in line]
    assert achieved
    mult_canon = npn.canonical_index(encode(multiplication()))
    assert any(line.startswith(f"{mult_canon},54,true,") for line in lines[1:])


def test_complex_mul(capsys):
    code, out, _ = run(capsys, "complex", "mul", "1", "0", "0.5", "1.5707963267948966")
    assert code == 0
    assert "logic product (mand/pxnor): r=0.5 theta=1.57079632679" in out
    for line in out.strip().splitlines():
        if line.startswith(("z1,", "z2,", "product,")):
            err_r, err_theta = map(float, line.split(",")[-2:])
            assert err_r < 1e-9 and err_theta < 1e-9


def test_complex_mul_json(capsys):
    code, out, _ = run(
        capsys, "complex", "mul", "0", "0", "1", "3.14159", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["logic_product"]["r"] == 0.0
    assert doc["magnitude_deviation"] <= 1e-15


def test_complex_truth(capsys):
    code, out, _ = run(capsys, "complex", "truth", "1.5707963267948966")
    assert code == 0
    assert "= 0.5" in out


def test_complex_rejects_unencodable_magnitude(capsys):
    code, _, err = run(capsys, "complex", "mul", "1.5", "0", "1", "0")
    assert code == 2
    assert "error" in err


def test_complex_wrong_arity(capsys):
    code, _, err = run(capsys, "complex", "mul", "1", "0")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    assert main(["classify", "--radix", "5"]) == 2
    assert main(["nonsense"]) == 2
