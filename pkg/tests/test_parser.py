import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclering.cycles import C, ONE, ZERO, normalize
from cyclering.parser import (
    Add,
    Basic,
    Const,
    Equation,
    Mul,
    MultiTarget,
    ParseError,
    Pow,
    Scaled,
    SumLhs,
    UnboundVariableError,
    Unsupported,
    Var,
    evaluate,
    normalize_ast,
    parse,
    parse_equation,
    parse_expression,
    print_canonical,
)

cycle_sets = st.lists(
    st.tuples(st.integers(1, 1000), st.integers(0, 50)), max_size=6
).map(normalize)


def _expressions(leaves):
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.lists(children, min_size=2, max_size=3).map(lambda cs: Add(tuple(cs))),
            st.lists(children, min_size=2, max_size=3).map(lambda cs: Mul(tuple(cs))),
            st.tuples(children, st.integers(0, 3)).map(lambda t: Pow(*t)),
        ),
        max_leaves=8,
    )


small_consts = st.lists(st.tuples(st.integers(1, 6), st.integers(0, 2)), max_size=2) \
    .map(normalize).map(Const)
ground_expressions = _expressions(small_consts)
open_expressions = _expressions(st.one_of(small_consts, st.sampled_from([Var("X"), Var("y_1")])))


def test_parse_basic_equation():
    eq = parse("C(1,4)*X = C(12,12)")
    assert isinstance(eq, Equation)
    assert eq.classification == Basic(4, 12, 12)


def test_parse_ground_sum_is_one_constant():
    assert parse("C(2,3)+C(1,6)") == Const(normalize([(3, 2), (6, 1)]))


def test_parse_sum_lhs():
    eq = parse("(C(1,2)+C(1,3))*X = C(10,6)")
    assert eq.classification == SumLhs(((1, 2), (1, 3)), 6, 10)


@pytest.mark.parametrize("text,expected", [
    ("C(2,2)*X = C(4,4)", Scaled(2, 2, 4, 4)),
    ("C(1,3)*X = C(3,6)+C(5,12)", MultiTarget(1, 3, ((3, 6), (5, 12)))),
    ("X*C(1,4) = C(12,12)", Basic(4, 12, 12)),
    ("X = C(2,5)", Basic(1, 5, 2)),
    ("C(1,2)*X + C(1,2)*X = C(4,4)", Scaled(2, 2, 4, 4)),
    ("C(1,2)*(X + X) = C(4,4)", Scaled(2, 2, 4, 4)),
])
def test_classification(text, expected):
    assert parse_equation(text).classification == expected


@pytest.mark.parametrize("text", [
    "X^2 = C(1,1)",
    "C(1,2)*X + C(1,1) = C(4,4)",
    "X*Y = C(1,1)",
    "C(1,1) = C(1,1)",
    "C(1,2)*X = Y",
    "C(1,2)*X = 0",
    "0*X = C(1,1)",
    "(C(1,2)+C(1,3))*X = C(1,6)+C(1,12)",
])
def test_unsupported(text):
    assert isinstance(parse_equation(text).classification, Unsupported)


def test_whitespace_insignificant():
    assert parse(" C ( 1 , 4 ) *\n X=C(12,12) ") == parse("C(1,4)*X=C(12,12)")


def test_zero_literals():
    assert parse("0") == Const(ZERO)
    assert parse("C(0,5)") == Const(ZERO)
    assert parse("C(0,0)") == Const(ZERO)


def test_precedence():
    e = parse("X + C(1,2)*X^2")
    assert e == Add((Var("X"), Mul((Const(C(1, 2)), Pow(Var("X"), 2)))))


@pytest.mark.parametrize("text,line,column", [
    ("C(1,4)*X = C(12,", 1, 17),
    ("C(1,0)", 1, 5),
    ("C(1,2) + * X", 1, 10),
    ("C(1,2)\n  + 7", 2, 5),
    ("C(1,2) $ X", 1, 8),
    ("C(1,2) - X", 1, 8),
    ("(C(1,2)", 1, 8),
    ("C(1,2) C(1,3)", 1, 8),
    ("X^", 1, 3),
    ("X = Y = Z", 1, 7),
])
def test_errors_are_position_annotated(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_print_canonical_examples():
    assert print_canonical(normalize([(12, 2), (6, 1), (3, 2)])) == "C(2,3)+C(1,6)+C(2,12)"
    assert print_canonical(ZERO) == "0"
    assert print_canonical(parse("(C(1,2)+C(1,3))*X=C(10,6)")) == "(C(1,2)+C(1,3))*X = C(10,6)"
    assert print_canonical(parse("(X^2)^3")) == "(X^2)^3"


def test_evaluate_examples():
    assert evaluate(parse("C(1,4)*(C(2,12)+C(1,6)+C(2,3))")) == C(12, 12)
    assert evaluate(parse("C(1,1)^5")) == ONE
    assert evaluate(parse("C(1,2)*C(1,3)")) == C(1, 6)
    assert evaluate(parse("C(1,2)*X"), {"X": C(1, 3)}) == C(1, 6)
    with pytest.raises(UnboundVariableError):
        evaluate(parse("C(1,2)*X"))
    with pytest.raises(OverflowError):
        evaluate(parse("C(1,4294967296)^3"))


@settings(max_examples=1000)
@given(cycle_sets)
def test_round_trip_cycle_sets(x):
    text = print_canonical(x)
    assert evaluate(parse_expression(text)) == x
    assert parse_expression(text) == Const(x)


@settings(max_examples=500, deadline=None)
@given(ground_expressions)
def test_round_trip_ground_expressions(e):
    assert parse_expression(print_canonical(e)) == normalize_ast(e)


@settings(max_examples=300, deadline=None)
@given(open_expressions)
def test_round_trip_open_expressions(e):
    assert parse_expression(print_canonical(e)) == normalize_ast(e)


@settings(max_examples=300, deadline=None)
@given(ground_expressions)
def test_normalization_preserves_value(e):
    assert evaluate(normalize_ast(e)) == evaluate(e)
