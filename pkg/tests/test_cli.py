import io
import subprocess
import sys

import pytest

from centralloops.cli import read_bases_file, run
from centralloops.magma import read_table_file

from conftest import TABLES

C12 = str(TABLES / "c12.tbl")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_demo():
    code, out, _ = call("demo")
    assert code == 0
    lines = out.splitlines()
    assert "alpha1S2 = (0 1 2)(3 4 5)(6 7 8)(9 10 11)" in lines
    assert "beta1T2 = (0 2 1)(3 5 4)(6 8 7)(9 11 10)" in lines
    assert "gamma1R2 = ()" in lines
    assert "(alpha1S2, beta1T2, gamma1R2) = (R_1, R_2, R_0) in Aut(L): verified" in lines
    assert "alpha^2 = (0 1 2)(3 4 5)(6 7 8)(9 10 11)" in lines


def test_demo_is_deterministic():
    assert call("demo") == call("demo")


def test_check_single_identity():
    code, out, _ = call("check", "--table", C12, "--identity", "c")
    assert code == 0
    assert "c: holds=true" in out.splitlines()


def test_check_all():
    code, out, _ = call("check", "--table", C12)
    assert code == 0
    assert "associative: holds=false witness=(3,6,3)" in out
    assert "steiner: holds=false clause=exponent-2 witness=(1) 1^2 = 2 != 0" in out


def test_autotopism_trivial():
    code, out, _ = call("autotopism", "--table", C12, "--x", "0")
    assert code == 0
    assert "trivial = true" in out
    assert "alpha1S2 = ()" in out


def test_autotopism_x4():
    code, out, _ = call("autotopism", "--table", C12, "--x", "4")
    assert code == 0
    assert "trivial = false" in out
    assert "S1,T1,R1 = ((0 2 1)(3 5 4)(6 8 7)(9 11 10), (), (0 2 1)(3 5 4)(6 8 7)(9 11 10))" in out


def test_parastrophe_output_is_tbl():
    code, out, _ = call("parastrophe", "--table", C12, "--kind", "rdiv")
    assert code == 0
    q = read_table_file(out)
    assert q.mul(4, 0) == 5
    code, out, _ = call("parastrophe", "--table", C12, "--kind", "star")
    assert read_table_file(out).mul(3, 6) == 10


def test_equiv_report():
    code, out, _ = call("equiv-report", "--table", C12)
    assert code == 0
    assert "(i) all components identity: false" in out
    code, out, _ = call("equiv-report", "--table", str(TABLES / "z2xz2.tbl"))
    assert "(ii) rdiv and ldiv equal L: true" in out


def test_sts(tmp_path):
    code, out, _ = call("sts", "--table", C12)
    assert code == 0
    assert "ground set: 6 autotopisms" in out
    assert "triples: 2" in out
    assert "axiom (ii) unique covering triple: fail" in out
    assert "triples: 2 (2 mod 6 = 2): fail" in out
    bases = tmp_path / "bases.txt"
    bases.write_text(
        "# identity and the x=4 autotopism\n"
        "() ; () ; ()\n"
        "(0 1 2)(3 4 5)(6 7 8)(9 10 11) ; (0 2 1)(3 5 4)(6 8 7)(9 11 10) ; ()\n"
    )
    code, out2, _ = call("sts", "--table", C12, "--bases", str(bases))
    assert code == 0
    assert "(base=1,x=1)" in out2


def test_sts_bad_base(tmp_path):
    bases = tmp_path / "bases.txt"
    bases.write_text("(0 1 2)(3 4 5)(6 7 8)(9 10 11) ; (0 1 2)(3 4 5)(6 7 8)(9 10 11) ; ()\n")
    code, _, err = call("sts", "--table", C12, "--bases", str(bases))
    assert code == 1
    assert err.startswith("ERROR not-autotopism:")


def test_enumerate():
    code, out, _ = call("enumerate", "--table", str(TABLES / "z4.tbl"))
    assert code == 0
    assert out.splitlines()[0] == "autotopisms: 32"
    code, _, err = call("enumerate", "--table", C12)
    assert code == 1 and err.startswith("ERROR order-too-large:")


@pytest.mark.parametrize(
    "argv, kind",
    [
        (("check", "--table", str(TABLES / "loop5.tbl"), "--identity", "c"), None),
        (("autotopism", "--table", str(TABLES / "loop5.tbl"), "--x", "1"), "not-c-loop"),
        (("equiv-report", "--table", str(TABLES / "loop5.tbl")), "not-c-loop"),
        (("sts", "--table", str(TABLES / "z2xz2.tbl")), "steiner-input"),
    ],
)
def test_domain_errors(argv, kind):
    code, out, err = call(*argv)
    if kind is None:
        assert code == 0 and "c: holds=false witness=(0,1,2)" in out
    else:
        assert code == 1
        assert err.splitlines()[0].startswith(f"ERROR {kind}:")


def test_bad_table_file(tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 1\n1 1\n")
    code, _, err = call("check", "--table", str(bad))
    assert code == 1 and err.startswith("ERROR latin-violation:") and "row 1" in err
    noid = tmp_path / "noid.tbl"
    noid.write_text("3\n0 2 1\n2 1 0\n1 0 2\n")
    code, _, err = call("check", "--table", str(noid))
    assert code == 1 and err.startswith("ERROR no-identity:")


@pytest.mark.parametrize(
    "argv",
    [(), ("bogus",), ("check",), ("autotopism", "--table", C12), ("parastrophe", "--table", C12, "--kind", "up"),
     ("check", "--table", "/nonexistent/file.tbl"), ("autotopism", "--table", C12, "--x", "99")],
)
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert err.startswith("ERROR usage:")


def test_bases_file_parse_error():
    from centralloops.perm import PermError

    with pytest.raises(PermError):
        read_bases_file("() ; ()\n", 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "centralloops", "demo"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "alpha1S2 = (0 1 2)(3 4 5)(6 7 8)(9 10 11)" in proc.stdout
