from fractions import Fraction

import pytest

from virtualk.cyclotomic import Cyc, zeta_pow
from virtualk.expr import (
    BasisMixError,
    EvalError,
    ParseError,
    evaluate,
    format_expr,
    format_value,
    parse,
    preferred_display,
    value_to_json,
)
from virtualk.line_elements import line_realize, sigma
from virtualk.localization import (
    from_u_basis,
    gamma,
    loc_one,
    loc_unit,
    loc_x00,
    loc_zero,
    u_gen,
)
from virtualk.virtual_ring import k_monomial, k_one


def _eval(text, n):
    return evaluate(parse(text, n), n)


def test_sector_expression_with_negative_power():
    basis, v = _eval("one[0] + 2*x[1]^-1", 3)
    assert basis == "sector"
    assert v == k_one(3) + k_monomial(3, 1, -1).scale(2)
    assert v.sectors[1].coeffs[2] == Cyc.rational(3, 2)


def test_u_idempotent_square():
    basis, v = _eval("u[1,0]*u[1,0]", 3)
    assert basis == "loc"
    assert v == from_u_basis(u_gen(3, 1, 0))


def test_line_constructor_is_sigma():
    basis, v = _eval("L(1,0;0,0)", 2)
    assert v == from_u_basis(line_realize(sigma(2, 0)))
    _, w = _eval("sigma[0]", 2)
    assert v == w


def test_adams_on_jet_block():
    basis, v = _eval("psi[2](xe[0,0])", 2)
    expected = loc_x00(2).scale(2) - loc_one(2, 0, 0) + loc_one(2, 0, 1)
    assert v == expected
    assert format_value(basis, v) == "-e[0,0] + 2*xe[0,0] + e[0,1]"


def test_gamma_of_unit():
    basis, v = _eval("gamma(one[0])", 3)
    assert basis == "loc"
    assert v == loc_unit(3)


def test_eps_examples():
    _, v = _eval("eps(x[0]^3)", 3)
    assert v == k_one(3)
    _, v = _eval("eps(x[2]^5)", 3)
    assert v.is_zero()
    _, v = _eval("psi[0](x[0]^2)", 3)
    assert v == k_one(3)


def test_scalar_arithmetic():
    basis, v = _eval("zeta^2 - 1/2", 4)
    assert basis == "scalar"
    assert v == zeta_pow(4, 2) - Cyc.rational(4, Fraction(1, 2))


def test_scalar_lifts_to_unit_multiple():
    _, v = _eval("one[0] + 2", 2)
    assert v == k_one(2).scale(3)
    _, w = _eval("e[0,1] - 1", 2)
    assert w == loc_one(2, 0, 1) - loc_unit(2)


def test_precedence_and_unary_minus():
    _, v = _eval("-2*x[1]^2 + x[1]", 3)
    assert v == k_monomial(3, 1, 2).scale(-2) + k_monomial(3, 1, 1)
    _, w = _eval("2*zeta^2", 5)
    assert w == zeta_pow(5, 2).scale_int(2)


def test_gammainv_round_trip():
    _, v = _eval("gammainv(gamma(x[0]^2 + x[1]))", 3)
    assert v == k_monomial(3, 0, 2) + k_monomial(3, 1, 1)


def test_loc_negative_power():
    _, v = _eval("(2*e[0,0] + e[0,1] + e[1,1])^-1", 2)
    from virtualk.localization import loc_mul
    _, a = _eval("2*e[0,0] + e[0,1] + e[1,1]", 2)
    assert loc_mul(v, a) == loc_unit(2)


def test_noninvertible_power_raises():
    with pytest.raises(EvalError):
        _eval("u[1,0]^-1", 2)
    with pytest.raises(EvalError):
        _eval("e[0,1]^-1", 2)


def test_basis_mixing_rejected_at_parse():
    with pytest.raises(BasisMixError):
        parse("x[1] + e[0,1]", 3)
    with pytest.raises(BasisMixError):
        parse("gamma(u[1,0])", 3)
    with pytest.raises(BasisMixError):
        parse("gammainv(x[0])", 3)
    with pytest.raises(BasisMixError):
        parse("eps(2)", 3)


def test_syntax_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse("one[0] + ", 3)
    assert "position" in str(exc.value)
    with pytest.raises(ParseError):
        parse("x[0] $ 2", 3)
    with pytest.raises(ParseError):
        parse("frob[1]", 3)


def test_index_range_checked():
    with pytest.raises(ParseError):
        parse("x[3]", 3)
    with pytest.raises(ParseError):
        parse("u[1,5]", 3)
    with pytest.raises(ParseError):
        parse("xe[1,0]", 3)
    with pytest.raises(ParseError):
        parse("L(1,0;0)", 2)


def test_format_parse_round_trip():
    corpus = [
        (3, "one[0] + 2*x[1]^-1"),
        (3, "u[1,0]*u[1,0]"),
        (2, "L(1,0; 0,0)"),
        (3, "psi[2](xe[0,0])"),
        (3, "gamma(one[0])"),
        (3, "eps(x[0]^3)"),
        (3, "-1/2*x[1] + zeta^2*x[0]"),
        (3, "(x[0] + x[1])*x[2]^2"),
        (3, "gammainv(gamma(x[0]))"),
        (3, "sigma[1]*nu[0] - 3/4"),
        (3, "L(1,2,0; zeta,0,1/2)"),
        (3, "psi[3](u[2,1] + e[0,0])"),
    ]
    for n, text in corpus:
        ast = parse(text, n)
        assert parse(format_expr(ast), n) == ast, text


def test_preferred_display():
    assert preferred_display(parse("u[1,0]", 2)) == "u"
    assert preferred_display(parse("sigma[0]", 2)) == "u"
    assert preferred_display(parse("e[0,1]", 2)) == "loc"
    assert preferred_display(parse("u[1,0] + e[0,1]", 2)) == "loc"
    assert preferred_display(parse("x[0]", 2)) == "sector"


def test_json_serialization():
    basis, v = _eval("psi[2](xe[0,0])", 2)
    doc = value_to_json(2, basis, v)
    assert '"basis": "loc"' in doc
    assert '["e", 0, 0]' in doc and '["xe", 0, 0]' in doc
    basis, v = _eval("x[1] + one[0]", 2)
    doc = value_to_json(2, basis, v)
    assert '"basis": "sector"' in doc
    basis, v = _eval("zeta", 4)
    doc = value_to_json(4, basis, v)
    assert '"basis": "scalar"' in doc


def test_format_value_zero():
    assert format_value("loc", loc_zero(2)) == "0"
