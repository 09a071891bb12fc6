import json
import math
from fractions import Fraction

import pytest

import fibpascal as fp


def fib_ref(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_methods_listed():
    assert len(fp.methods()) == 7
    assert "novel" in fp.methods()


@pytest.mark.parametrize("method", fp.methods())
def test_every_method_matches_reference(method):
    for m in (1, 2, 3, 10, 57, 120):
        assert fp.fib(m, method) == fib_ref(m)


def test_large_index_is_exact():
    assert fp.fib(1000, "novel") == fib_ref(1000)
    assert fp.fib(1000) == fib_ref(1000)


def test_pascal():
    assert fp.pascal_row(6) == [math.comb(6, j) for j in range(7)]
    assert fp.binomial(90, 45) == math.comb(90, 45)
    assert fp.binomial(5, 7) == 0


def test_pattern_evaluates_to_fibonacci():
    for k in range(12):
        p = fp.synthesize_pattern(k)
        assert p.k == k
        assert fp.evaluate_pattern(p) == fib_ref(k + 1)
        for (r, c), w in p.cells.items():
            assert w == fp.classify_weight(k, r, c)
            assert abs(w) in (Fraction(1, 2), 1)


def test_reduce_to_row_dot():
    for k in range(1, 15):
        coeffs = fp.reduce_to_row(fp.synthesize_pattern(k))
        assert len(coeffs) == k + 1
        assert sum(c * math.comb(k, j) for j, c in enumerate(coeffs)) == fib_ref(k + 1)


def test_pattern_json_roundtrip():
    text = fp.pattern_json(9)
    doc = json.loads(text)
    assert doc["k"] == 9
    assert int(doc["value"]) == fib_ref(10)
    assert len(fp.pattern_from_json(text)) == len(doc["cells"])
    assert fp.pattern_csv(9).startswith("row,col,weight\n")


def test_cosine_series():
    s = fp.expand_cos_power(4)
    assert s == {0: Fraction(3, 8), 2: Fraction(1, 2), 4: Fraction(1, 8)}
    assert fp.series_mul({1: 1}, {1: 1}) == fp.expand_cos_power(2)
    # cos(pi/5) = (1 + sqrt5)/4
    assert fp.substitute_exact({1: 1}) == (Fraction(1, 4), Fraction(1, 4))


def test_derive_identity():
    for m in range(1, 40):
        coeffs = fp.derive_identity(m)
        assert sum(c * math.comb(m, i) for i, c in enumerate(coeffs)) == fib_ref(m)
    report = fp.derive(12)
    assert report["verdict"] == "pass"
    assert fp.check_binet_from_cosine(1, 60)


def test_reversal_and_verify():
    assert all(fp.check_reversal_symmetry(k) for k in range(20))
    report = fp.verify(40)
    assert report["passed"]
    assert report["suites_passed"] == report["suites_total"]


def test_render():
    art = fp.render("novel", 2, 4)
    assert art.splitlines()[2].strip() == ". # ."
    svg = fp.render("classical", 0, 5, "svg")
    assert svg.startswith("<?xml") and svg.count("<rect") == 15


def test_errors():
    with pytest.raises(ValueError):
        fp.fib(5, "bogus")
    with pytest.raises(ValueError):
        fp.render("novel", 5, 3)
    with pytest.raises(ValueError):
        fp.expand_cos_power(0)


def test_cli_in_process():
    code, out, err = fp.run_cli(["fib", "--index", "20", "--method", "all"])
    assert code == 0
    assert out.count("6765") == 7
    code, _, _ = fp.run_cli(["verify", "--max", "0"])
    assert code == 2
