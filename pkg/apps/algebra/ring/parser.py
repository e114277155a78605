"""
Текстовый разбор многочленов и мономиальных порядков.

Грамматика многочленов (ASCII):

    expr   := term (('+' | '-') term)*
    term   := ['+' | '-'] factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | x[i][j] | y[j] | имя | макрос | '(' expr ')'

Неявное умножение запрещено, '/' допускается только внутри литерала.
Макросы (det, minor[i], g[i]) подставляются из переданного словаря.

Грамматика порядка:

    order lex: v1 > v2 > ... > vk [> ...rest]
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Mapping, NamedTuple, Optional, Union

from apps.algebra.exceptions import ExponentOverflowError, ParseError, UnknownVariableError
from .orders import MonomialOrder, complete_order
from .polynomial import Polynomial
from .variables import Variable

MAX_EXPONENT = 1000

MACRO_NAMES = ("det", "minor", "g")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<ellipsis>\.\.\.)
  | (?P<op>[-+*^/()\[\]>:;])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, newline_separates: bool = False) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, position = 1, 0, 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        column = position - line_start + 1
        if match is None:
            raise ParseError(f"Недопустимый символ {text[position]!r}", line, column)
        kind = match.lastgroup
        if kind == "newline":
            if newline_separates:
                tokens.append(Token("sep", "\n", line, column))
            line, line_start = line + 1, match.end()
        elif kind == "op" and match.group() == ";":
            tokens.append(Token("sep", ";", line, column))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, match.group(), line, column))
        position = match.end()
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


@dataclass
class Document:
    """Содержимое входного файла: необязательный порядок и список многочленов"""

    order: Optional[MonomialOrder] = None
    polynomials: List[Polynomial] = field(default_factory=list)


class _Parser:
    def __init__(self, tokens: List[Token], ring, macros: Optional[Mapping[str, Polynomial]] = None):
        self.tokens = tokens
        self.position = 0
        self.ring = ring
        self.macros = macros or {}

    # -- навигация --

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def at(self, text: str) -> bool:
        token = self.current
        return token.kind in ("op", "ident", "ellipsis") and token.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"Ожидалось {text!r}")
        return self.advance()

    def expect_int(self) -> int:
        token = self.current
        if token.kind != "number":
            self.fail("Ожидалось целое число")
        self.advance()
        return int(token.text)

    def fail(self, message: str, token: Token = None, error=ParseError):
        token = token or self.current
        found = token.text if token.kind != "eof" else "конец ввода"
        raise error(f"{message}, найдено {found!r}", token.line, token.column)

    # -- многочлены --

    def expression(self) -> Polynomial:
        result = self.term()
        while self.at("+") or self.at("-"):
            sign = self.advance().text
            value = self.term()
            result = result + value if sign == "+" else result - value
        return result

    def term(self) -> Polynomial:
        negate = False
        if self.at("-") or self.at("+"):
            negate = self.advance().text == "-"
        result = self.factor()
        while True:
            if self.at("*"):
                self.advance()
                result = result * self.factor()
            elif self.current.kind in ("number", "ident") or self.at("("):
                self.fail("Неявное умножение запрещено, используйте '*'")
            else:
                break
        return -result if negate else result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.advance()
            token = self.current
            exponent = self.expect_int()
            if exponent > MAX_EXPONENT:
                raise ExponentOverflowError(
                    f"Показатель {exponent} превышает предел {MAX_EXPONENT}", token.line, token.column
                )
            return base ** exponent
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            numerator = self.expect_int()
            if self.at("/"):
                self.advance()
                denominator_token = self.current
                denominator = self.expect_int()
                if denominator == 0:
                    self.fail("Нулевой знаменатель", denominator_token)
                return self.ring.constant(Fraction(numerator, denominator))
            return self.ring.constant(numerator)
        if self.at("("):
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        if token.kind == "ident":
            return self.ring.var(self.variable()) if token.text not in MACRO_NAMES else self.macro()
        self.fail("Ожидался литерал, переменная или '('")

    def variable(self) -> Variable:
        token = self.advance()
        if token.text == "x":
            self.expect("[")
            i = self.expect_int()
            self.expect("]")
            self.expect("[")
            j = self.expect_int()
            self.expect("]")
            variable = Variable.x(i, j) if i and j else None
        elif token.text == "y":
            self.expect("[")
            j = self.expect_int()
            self.expect("]")
            variable = Variable.y(j) if j else None
        else:
            variable = self.ring.lookup(token.text)
        if variable is None or variable not in self.ring:
            label = str(variable) if variable is not None else token.text
            raise UnknownVariableError(f"Неизвестная переменная {label}", token.line, token.column)
        return variable

    def macro(self) -> Polynomial:
        token = self.advance()
        name = token.text
        if name != "det":
            self.expect("[")
            name = f"{name}[{self.expect_int()}]"
            self.expect("]")
        if name not in self.macros:
            raise UnknownVariableError(f"Макрос {name} недоступен в этом контексте", token.line, token.column)
        return self.macros[name]

    # -- порядки --

    def order(self) -> MonomialOrder:
        self.expect("order")
        self.expect("lex")
        self.expect(":")
        chain = [self.variable_token()]
        while self.at(">"):
            self.advance()
            if self.current.kind == "ellipsis":
                self.advance()
                self.expect("rest")
                return complete_order(self.ring, chain)
            chain.append(self.variable_token())
        return MonomialOrder(self.ring, chain)

    def variable_token(self) -> Variable:
        if self.current.kind != "ident":
            self.fail("Ожидалась переменная")
        return self.variable()

    # -- верхний уровень --

    def end_of_statement(self) -> bool:
        return self.current.kind in ("sep", "eof")

    def expect_end(self):
        if self.current.kind != "eof":
            self.fail("Лишний текст после выражения")


def parse_polynomial(text: str, ring, macros: Optional[Mapping[str, Polynomial]] = None) -> Polynomial:
    parser = _Parser(tokenize(text), ring, macros)
    if parser.current.kind == "eof":
        parser.fail("Пустое выражение")
    result = parser.expression()
    parser.expect_end()
    return result


def parse_order(text: str, ring) -> MonomialOrder:
    parser = _Parser(tokenize(text), ring)
    result = parser.order()
    parser.expect_end()
    return result


def parse(text: str, ring, macros: Optional[Mapping[str, Polynomial]] = None) -> Union[Polynomial, MonomialOrder]:
    """Многочлен или порядок, в зависимости от первого слова"""
    if text.lstrip().startswith("order"):
        return parse_order(text, ring)
    return parse_polynomial(text, ring, macros)


def parse_document(text: str, ring, macros: Optional[Mapping[str, Polynomial]] = None) -> Document:
    """
    Разбор входного файла: инструкции разделены ';' или переводом строки,
    '#' открывает комментарий, строка порядка может стоять только первой.
    """
    parser = _Parser(tokenize(text, newline_separates=True), ring, macros)
    document = Document()
    first = True
    while parser.current.kind != "eof":
        if parser.current.kind == "sep":
            parser.advance()
            continue
        if parser.at("order"):
            if not first:
                parser.fail("Порядок допускается только в начале файла")
            document.order = parser.order()
        else:
            document.polynomials.append(parser.expression())
        if not parser.end_of_statement():
            parser.fail("Ожидался конец инструкции")
        first = False
    return document
