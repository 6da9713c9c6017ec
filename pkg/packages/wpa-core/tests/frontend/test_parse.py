"""Tests for the formula parser."""

import pytest

from wpa_core.frontend import (
    And,
    Atom,
    Exists,
    FormulaParseError,
    Forall,
    Implies,
    Not,
    Or,
    SourcePos,
    Term,
    UnknownSymbolError,
    parse,
)

X_IS_1 = Atom(Term((('x', 1),)), Term((), 1))
Y_IS_2 = Atom(Term((('y', 1),)), Term((), 2))
Z_IS_3 = Atom(Term((('z', 1),)), Term((), 3))


class TestParse:
    def test_evenness(self):
        assert parse('E y. x = 2*y') == Exists('y', Atom(Term((('x', 1),)), Term((('y', 2),))))

    def test_conjunction_binds_tighter_than_disjunction(self):
        assert parse('x = 1 | y = 2 & z = 3') == Or(X_IS_1, And(Y_IS_2, Z_IS_3))

    def test_left_associative(self):
        assert parse('x = 1 & y = 2 & z = 3') == And(And(X_IS_1, Y_IS_2), Z_IS_3)

    def test_implication_is_right_associative(self):
        assert parse('x = 1 -> y = 2 -> z = 3') == Implies(X_IS_1, Implies(Y_IS_2, Z_IS_3))

    def test_negation(self):
        assert parse('!x = 1') == Not(X_IS_1)
        assert parse('!!(x = 1)') == Not(Not(X_IS_1))

    def test_quantifier_extends_right(self):
        assert parse('E y. x = 1 & y = 2') == Exists('y', And(X_IS_1, Y_IS_2))
        assert parse('(E y. x = 1) & y = 2') == And(Exists('y', X_IS_1), Y_IS_2)

    def test_forall(self):
        assert parse('A x. E y. x = 1 | y = 2') == Forall('x', Exists('y', Or(X_IS_1, Y_IS_2)))

    def test_comments_and_whitespace(self):
        assert parse('# parity\n  x = 1  # trailing\n') == X_IS_1

    def test_positions(self):
        f = parse('x = 1 &\n  y = 2')
        assert f.pos == SourcePos(1, 1)
        assert f.right.pos == SourcePos(2, 3)

    def test_positions_ignored_by_equality(self):
        assert parse('x = 1') == parse('  x   =   1')


class TestTerms:
    def test_linear_combination(self):
        atom = parse('2*x + 3 - y = 0')
        assert atom.lhs == Term((('x', 2), ('y', -1)), 3)

    def test_unary_minus(self):
        assert parse('-x = -3').lhs == Term((('x', -1),))
        assert parse('-x = -3').rhs == Term((), -3)

    def test_cancellation(self):
        assert parse('x - x = 0').lhs == Term((('x', 0),), 0)

    def test_zero_coefficient(self):
        assert parse('0*x = 0').lhs == Term((('x', 0),))

    def test_repeated_variable_merges(self):
        assert parse('x + 2*y + 3*x = 1').lhs == Term((('x', 4), ('y', 2)))

    def test_indexed_names(self):
        assert parse('x1 = x2 + 1').rhs == Term((('x2', 1),), 1)

    def test_keyword_prefix_is_a_name(self):
        assert parse('Ex = Al').lhs == Term((('Ex', 1),))

    def test_large_constants(self):
        big = 10**40
        assert parse(f'x = {big}').rhs == Term((), big)


class TestParseErrors:
    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbolError) as excinfo:
            parse('x = 1 $')
        assert excinfo.value.line == 1
        assert excinfo.value.column == 7
        assert "'$'" in str(excinfo.value)

    def test_unknown_symbol_on_second_line(self):
        with pytest.raises(UnknownSymbolError) as excinfo:
            parse('x = 1 &\n  y = @')
        assert (excinfo.value.line, excinfo.value.column) == (2, 7)

    def test_unexpected_token(self):
        with pytest.raises(FormulaParseError) as excinfo:
            parse('x = = 1')
        assert excinfo.value.line == 1
        assert excinfo.value.column == 5

    @pytest.mark.parametrize('text', ['x =', '', 'E . x = 1', 'x * 2 = 1', 'x = 1 &', '(x = 1'])
    def test_malformed(self, text: str):
        with pytest.raises(FormulaParseError):
            parse(text)

    def test_unknown_symbol_is_parse_error(self):
        assert issubclass(UnknownSymbolError, FormulaParseError)
