"""Formula syntax: parsing, printing, variable numbering and desugaring into the core fragment.

Core formulas use atoms, ``!``, ``&``, ``|`` and ``E``. Universal quantifiers and implications are
rewritten away, and the number of remaining negations is the formula's weight.
"""

import re
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput

_GRAMMAR = r"""
    ?start: formula

    ?formula: disjunction
            | disjunction "->" formula -> implies

    ?disjunction: conjunction
                | disjunction "|" conjunction -> disj

    ?conjunction: unary
                | conjunction "&" unary -> conj

    ?unary: "!" unary -> neg
          | "E" VAR "." formula -> exists
          | "A" VAR "." formula -> forall
          | "(" formula ")"
          | atom

    atom: sum "=" sum

    ?sum: term
        | sum "+" term -> add
        | sum "-" term -> sub

    ?term: INT -> const
         | VAR -> var
         | INT "*" VAR -> scaled
         | "-" term -> negate

    VAR: /[A-Za-z_][A-Za-z0-9_]*/
    INT: /[0-9]+/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_PARSER = Lark(_GRAMMAR, parser='lalr', propagate_positions=True)

_INDEXED = re.compile(r'x([1-9][0-9]*)')


class FormulaError(Exception):
    """Base class for formula front-end errors."""


class FormulaParseError(FormulaError):
    """Raised when a formula does not match the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f'{message} at line {line}, column {column}')
        self.line = line
        self.column = column


class UnknownSymbolError(FormulaParseError):
    """Raised when a formula contains a character outside the language."""


class SourcePos(NamedTuple):
    line: int
    column: int


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    """Linear term ``sum(c * v) + constant``; names in first-occurrence order.

    A coefficient may be zero after cancellation; its name is kept so that it still counts as an
    occurring variable.
    """

    coefficients: tuple[tuple[str, int], ...] = ()
    constant: int = 0

    def plus(self, other: 'Term') -> 'Term':
        merged = dict(self.coefficients)
        for name, c in other.coefficients:
            merged[name] = merged.get(name, 0) + c
        return Term(tuple(merged.items()), self.constant + other.constant)

    def scaled(self, factor: int) -> 'Term':
        return Term(tuple((n, c * factor) for n, c in self.coefficients), self.constant * factor)


@dataclass(frozen=True)
class _Node:
    pos: SourcePos | None = field(default=None, compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Atom(_Node):
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Not(_Node):
    body: 'Formula'


@dataclass(frozen=True)
class And(_Node):
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Or(_Node):
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Implies(_Node):
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Exists(_Node):
    var: str
    body: 'Formula'


@dataclass(frozen=True)
class Forall(_Node):
    var: str
    body: 'Formula'


Formula = Atom | Not | And | Or | Implies | Exists | Forall


def _pos(meta) -> SourcePos | None:
    if getattr(meta, 'empty', True):
        return None
    return SourcePos(meta.line, meta.column)


@v_args(meta=True)
class _FormulaBuilder(Transformer):
    def implies(self, meta, children):
        return Implies(children[0], children[1], pos=_pos(meta))

    def disj(self, meta, children):
        return Or(children[0], children[1], pos=_pos(meta))

    def conj(self, meta, children):
        return And(children[0], children[1], pos=_pos(meta))

    def neg(self, meta, children):
        return Not(children[0], pos=_pos(meta))

    def exists(self, meta, children):
        return Exists(str(children[0]), children[1], pos=_pos(meta))

    def forall(self, meta, children):
        return Forall(str(children[0]), children[1], pos=_pos(meta))

    def atom(self, meta, children):
        return Atom(children[0], children[1], pos=_pos(meta))

    def add(self, meta, children):
        return children[0].plus(children[1])

    def sub(self, meta, children):
        return children[0].plus(children[1].scaled(-1))

    def const(self, meta, children):
        return Term((), int(children[0]))

    def var(self, meta, children):
        return Term(((str(children[0]), 1),))

    def scaled(self, meta, children):
        return Term(((str(children[1]), int(children[0])),))

    def negate(self, meta, children):
        return children[0].scaled(-1)


def parse(text: str) -> Formula:
    """Parse formula text into an AST.

    Raises:
        UnknownSymbolError: If the text contains a character the lexer does not know.
        FormulaParseError: If the tokens do not form a formula.
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedCharacters as e:
        raise UnknownSymbolError(f'unknown symbol {text[e.pos_in_stream]!r}', e.line, e.column) from e
    except UnexpectedInput as e:
        raise FormulaParseError('unexpected input', e.line, e.column) from e
    return _FormulaBuilder().transform(tree)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _print_monomial(name: str, c: int) -> str:
    if abs(c) == 1:
        return name
    return f'{abs(c)}*{name}'


def print_term(t: Term) -> str:
    parts: list[str] = []
    for name, c in t.coefficients:
        if not parts:
            parts.append(('-' if c < 0 else '') + _print_monomial(name, c))
        else:
            parts.append((' - ' if c < 0 else ' + ') + _print_monomial(name, c))
    if t.constant or not parts:
        if not parts:
            parts.append(str(t.constant))
        else:
            parts.append((' - ' if t.constant < 0 else ' + ') + str(abs(t.constant)))
    return ''.join(parts)


def _wrap(f: Formula) -> str:
    if isinstance(f, (Atom, Not)):
        return print_formula(f)
    return f'({print_formula(f)})'


def print_formula(f: Formula) -> str:
    """Concrete syntax for ``f``; parsing it back yields an equal AST."""
    match f:
        case Atom(lhs, rhs):
            return f'{print_term(lhs)} = {print_term(rhs)}'
        case Not(body):
            return f'!{_wrap(body)}'
        case And(left, right):
            return f'{_wrap(left)} & {_wrap(right)}'
        case Or(left, right):
            return f'{_wrap(left)} | {_wrap(right)}'
        case Implies(left, right):
            return f'{_wrap(left)} -> {_wrap(right)}'
        case Exists(var, body):
            return f'E {var}. {print_formula(body)}'
        case Forall(var, body):
            return f'A {var}. {print_formula(body)}'
    raise TypeError(f'not a formula: {f!r}')


# ---------------------------------------------------------------------------
# Variables
# ---------------------------------------------------------------------------


def _walk(f: Formula, bound: frozenset[str]) -> Iterator[tuple[str, bool]]:
    # yields (name, is_free) for every variable occurrence, binders included as bound
    match f:
        case Atom(lhs, rhs):
            for name, _ in lhs.coefficients + rhs.coefficients:
                yield name, name not in bound
        case Not(body):
            yield from _walk(body, bound)
        case And(left, right) | Or(left, right) | Implies(left, right):
            yield from _walk(left, bound)
            yield from _walk(right, bound)
        case Exists(var, body) | Forall(var, body):
            yield var, False
            yield from _walk(body, bound | {var})


def free_variables(f: Formula) -> tuple[str, ...]:
    """Free variable names in order of first occurrence."""
    return tuple(dict.fromkeys(name for name, free in _walk(f, frozenset()) if free))


@dataclass(frozen=True)
class VariableMap:
    """Assignment of 1-based coordinate indices to variable names."""

    indices: dict[str, int]
    free: tuple[str, ...]

    def index(self, name: str) -> int:
        return self.indices[name]

    def name(self, index: int) -> str:
        for name, i in self.indices.items():
            if i == index:
                return name
        return f'x{index}'

    @property
    def dim(self) -> int:
        """Largest index of a free variable, 0 for sentences."""
        return max((self.indices[n] for n in self.free), default=0)

    @property
    def size(self) -> int:
        return max(self.indices.values(), default=0)


def assign_variables(f: Formula) -> VariableMap:
    """Number variables: ``x<N>`` takes index N, then free names, then bound names, smallest unused first."""
    names = tuple(dict.fromkeys(name for name, _ in _walk(f, frozenset())))
    free = free_variables(f)
    indices: dict[str, int] = {}
    for name in names:
        if m := _INDEXED.fullmatch(name):
            indices[name] = int(m.group(1))
    taken = set(indices.values())
    candidate = 1
    for name in list(free) + [n for n in names if n not in free]:
        if name in indices:
            continue
        while candidate in taken:
            candidate += 1
        indices[name] = candidate
        taken.add(candidate)
    return VariableMap(indices, free)


def max_var(f: Formula) -> int:
    """Largest index of a free variable of ``f``: the dimension of its solution set."""
    return assign_variables(f).dim


# ---------------------------------------------------------------------------
# Desugaring
# ---------------------------------------------------------------------------


def negate(f: Formula) -> Formula:
    """Negation of a core formula that cancels double negations where one is at hand."""
    match f:
        case Not(body):
            return body
        case Or(Not(a), b):
            return And(a, negate(b))
        case Or(a, Not(b)):
            return And(negate(a), b)
    return Not(f, pos=f.pos)


def _core(f: Formula) -> Formula:
    match f:
        case Atom():
            return f
        case Not(body):
            return negate(_core(body))
        case And(left, right):
            return And(_core(left), _core(right), pos=f.pos)
        case Or(left, right):
            return Or(_core(left), _core(right), pos=f.pos)
        case Implies(left, right):
            return Or(negate(_core(left)), _core(right), pos=f.pos)
        case Exists(var, body):
            return Exists(var, _core(body), pos=f.pos)
        case Forall(var, body):
            return negate(Exists(var, negate(_core(body)), pos=f.pos))
    raise TypeError(f'not a formula: {f!r}')


def weight(f: Formula) -> int:
    """Number of negation nodes."""
    match f:
        case Atom():
            return 0
        case Not(body):
            return 1 + weight(body)
        case And(left, right) | Or(left, right) | Implies(left, right):
            return weight(left) + weight(right)
        case Exists(_, body) | Forall(_, body):
            return weight(body)
    raise TypeError(f'not a formula: {f!r}')


def desugar_and_weigh(f: Formula) -> tuple[Formula, int]:
    """Rewrite into the core fragment and count the remaining negations."""
    core = _core(f)
    return core, weight(core)
