import math
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from tornheim_lab.dsl import (ARITY, BinOp, Call, Imag, Neg, Number, as_value, evaluate_text, parse_expression,
                              to_text)
from tornheim_lab.errors import DomainError, ExpressionSyntaxError

CORPUS = [line for line in (Path(__file__).parent / "data" / "expressions.txt").read_text().splitlines()
          if line.strip()]


def test_corpus_size():
    assert len(CORPUS) == 50


@pytest.mark.parametrize("text", CORPUS)
def test_corpus_round_trip(text):
    ast = parse_expression(text)
    assert parse_expression(to_text(ast)) == ast
    assert to_text(parse_expression(to_text(ast))) == to_text(ast)


numbers = st.one_of(
    st.integers(0, 999).map(lambda n: Number(Fraction(n), str(n))),
    st.tuples(st.integers(0, 99), st.integers(1, 99)).map(lambda p: Number(Fraction(*p), f"{p[0]}/{p[1]}")),
    st.decimals(0, 100, places=3, allow_nan=False).map(lambda d: Number(Fraction(str(d)), str(d)))
    .filter(lambda n: "." in n.text),
)


def _calls(children):
    def build(name):
        before, after = ARITY[name]
        args = st.lists(children, min_size=before, max_size=before).map(tuple)
        tw = st.just(None) if after is None else st.lists(children, min_size=after, max_size=after).map(tuple)
        return st.builds(Call, st.just(name), args, tw)
    return st.sampled_from(sorted(ARITY)).flatmap(build)


asts = st.recursive(
    st.one_of(numbers, st.just(Imag())),
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        _calls(children),
    ),
    max_leaves=12,
)


@given(asts)
def test_ast_round_trip(ast):
    assert parse_expression(to_text(ast)) == ast


@pytest.mark.parametrize("text,line,column,expected", [
    ("T(1,2; 0.3, 0.4)", 1, 6, "','"),
    ("zeta(2, 0.3)", 1, 7, "';'"),
    ("1 +", 1, 4, "number"),
    ("1 +\n  * 2", 2, 3, "number"),
    ("(1 + 2", 1, 7, "')'"),
    ("foo(1)", 1, 1, "zeta"),
    ("1 $ 2", 1, 3, None),
    ("binom(1, 2, 3)", 1, 11, "')'"),
    ("3 4", 1, 3, "end of input"),
    ("1/0", 1, 3, "positive integer"),
])
def test_syntax_error_positions(text, line, column, expected):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(text)
    err = info.value
    assert (err.line, err.column) == (line, column)
    if expected:
        assert expected in err.expected
    assert f"line {line}, column {column}" in str(err)


def test_syntax_error_is_a_syntax_error():
    with pytest.raises(SyntaxError):
        parse_expression("T(")


def test_imaginary_shorthand():
    assert parse_expression("0.5i") == BinOp("*", Number(Fraction(1, 2), "0.5"), Imag())
    assert as_value(evaluate_text("1.5+0.5i")).value == 1.5 + 0.5j


def test_rationals_are_exact():
    assert evaluate_text("1/3 + 2/3") == 1
    assert evaluate_text("binom(4,2)") == 6
    assert evaluate_text("2/(3)") == Fraction(2, 3)


def test_factorization_example():
    v = as_value(evaluate_text("T(2,3,0; 0.3, 0.7) - zeta(2; 0.3)*zeta(3; 0.7)"))
    assert abs(v.value) < 1e-9


def test_gauss_sum_example():
    v = as_value(evaluate_text("tau(chi(3,1))"))
    assert abs(v.value - 1j * math.sqrt(3)) < 1e-12


def test_eval_examples():
    assert abs(as_value(evaluate_text("zeta(1; 1/2)")).value + math.log(2)) < 1e-9
    v = as_value(evaluate_text("L(1,2; chi(1,0), chi(1,0), chi(1,0))"))
    assert abs(v.value - 1.2020569031595942) < 1e-9


def test_domain_error_names_subexpression():
    with pytest.raises(DomainError) as info:
        evaluate_text("1 + zeta(1; 0)")
    assert info.value.expression == "zeta(1; 0)"
    assert "zeta(1; 0)" in str(info.value)


def test_semantic_errors():
    for text in ("1/(0)", "zeta(2; 0.3)/(1 - 1)", "chi(3,1) + 1", "zeta(2; i)", "binom(1/2, 1)", "L(1,1; 1, 2, 3)"):
        with pytest.raises(DomainError):
            evaluate_text(text)
