import io

from primeforest.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_encode_integer():
    code, out, _ = invoke("encode", "12")
    assert code == 0
    assert out == "(r (2 (2)) (3))\n"


def test_encode_rational():
    code, out, _ = invoke("encode", "8/9")
    assert code == 0
    assert out == "(r (2 (3)) (1/3 (2)))\n"


def test_decode_integer():
    code, out, _ = invoke("decode", "(r (2 (2)) (3))")
    assert code == 0
    assert out == "12\n"


def test_decode_rational():
    code, out, _ = invoke("decode", "(r (1/2))")
    assert code == 0
    assert out == "1/2\n"


def test_decode_roundtrip_textual():
    for m in list(range(1, 300)) + [10 ** 4]:
        _, sexpr, _ = invoke("encode", str(m))
        _, back, _ = invoke("decode", sexpr.strip())
        assert back.strip() == str(m)


def test_count():
    code, out, _ = invoke("count", "--labels", "2", "--height", "2")
    assert code == 0
    assert out == "25\n"


def test_forest_listing():
    code, out, _ = invoke("forest", "--labels", "2", "--height", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines == ["(r)", "(r (2))", "(r (3))", "(r (2) (3))"]


def test_forest_count_only():
    code, out, _ = invoke("forest", "--labels", "3", "--height", "2",
                          "--count-only")
    assert (code, out) == (0, "729\n")


def test_forest_dot():
    code, out, _ = invoke("forest", "--labels", "1", "--height", "1", "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert 'label="r"' in out
    assert 'label="2"' in out


def test_sieve():
    code, out, _ = invoke("sieve", "7")
    assert (code, out) == (0, "11\n13\n")


def test_sieve_show_composites():
    code, out, _ = invoke("sieve", "5", "--show-composites")
    assert code == 0
    assert out.splitlines() == [
        "6\t(r (2) (3))",
        "8\t(r (2 (3)))",
        "9\t(r (3 (2)))",
        "10\t(r (2) (5))",
        "7",
    ]


def test_sieve_fidelity():
    code, out, _ = invoke("sieve", "11", "--fidelity")
    assert (code, out) == (0, "13\n17\n19\n")


def test_sieve_not_prime_is_domain_error():
    code, out, err = invoke("sieve", "8")
    assert code == 1
    assert out == ""
    assert "prime" in err


def test_rationals_count():
    code, out, _ = invoke("rationals", "--count", "3")
    assert code == 0
    assert out.splitlines() == [
        "1\t(r)",
        "2\t(r (2))",
        "1/2\t(r (1/2))",
    ]


def test_rationals_max_stage():
    code, out, _ = invoke("rationals", "--count", "100", "--max-stage", "1")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_rationals_locate():
    code, out, _ = invoke("rationals", "--locate", "3/5")
    assert (code, out) == (0, "3\n")


def test_usage_errors():
    assert invoke()[0] == 2
    assert invoke("bogus")[0] == 2
    assert invoke("sieve", "7", "--nonsense")[0] == 2
    assert invoke("rationals")[0] == 2


def test_domain_error_decode():
    code, _, err = invoke("decode", "(r (4))")
    assert code == 1
    assert err


def test_deterministic_output():
    a = invoke("forest", "--labels", "2", "--height", "2")
    b = invoke("forest", "--labels", "2", "--height", "2")
    assert a == b


def test_selftest():
    code, out, _ = invoke("selftest")
    assert code == 0
    assert "FAIL" not in out
