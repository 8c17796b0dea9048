"""
Recursive-descent parser for infix polynomial input.

Grammar:
    system := "(" expr ("," expr)* ")" | expr
    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom (("^" | "**") INT)?
    atom   := INT | "{" INT "}" | VAR | "(" expr ")"

INT literals map into the prime subfield; `{k}` is the element with index k
(decimal or 0x-hex). Variables are x, y, z (indices 0, 1, 2) or x1, x2, ...
(1-based). Division is allowed by nonzero constants only.
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from src.errors import PolyParseError
from src.gf.field import FieldSpec
from src.mpoly.poly import MultiPoly, PolySystem

TOKEN_PATTERN = re.compile(
    r'\s*(?:(?P<num>0x[0-9a-fA-F]+|\d+)|(?P<var>x\d+|[xyz])|(?P<op>\*\*|[-+*/^(),{}]))'
)
NAMED_VARIABLES = {'x': 0, 'y': 1, 'z': 2}


@dataclass
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, pos)
        if not match:
            raise PolyParseError("unexpected character", text, pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldSpec, nvars: int):
        self.text = text
        self.field = field
        self.nvars = nvars
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, text: Optional[str] = None) -> Token:
        token = self.peek()
        if token is None:
            raise PolyParseError("unexpected end of input", self.text, len(self.text))
        if text is not None and token.text != text:
            raise PolyParseError(f"expected '{text}', found '{token.text}'", self.text, token.position)
        self.index += 1
        return token

    def at(self, *texts: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == 'op' and token.text in texts

    def expr(self) -> MultiPoly:
        value = self.term()
        while self.at('+', '-'):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def term(self) -> MultiPoly:
        value = self.unary()
        while self.at('*', '/'):
            op = self.take()
            rhs = self.unary()
            if op.text == '*':
                value = value * rhs
                continue
            if not rhs.is_constant() or rhs.is_zero():
                raise PolyParseError("division only by nonzero constants", self.text, op.position)
            value = value.scale(self.field.inv(rhs.coefficient_of((0,) * self.nvars)))
        return value

    def unary(self) -> MultiPoly:
        if self.at('-'):
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.at('^', '**'):
            self.take()
            token = self.take()
            if token.kind != 'num':
                raise PolyParseError("exponent must be an integer literal", self.text, token.position)
            return base ** int(token.text, 0)
        return base

    def atom(self) -> MultiPoly:
        token = self.take()
        if token.kind == 'num':
            return MultiPoly.constant(self.field, self.nvars, self.field.from_int(int(token.text, 0)))
        if token.kind == 'var':
            index = NAMED_VARIABLES.get(token.text)
            if index is None:
                index = int(token.text[1:]) - 1
            if not 0 <= index < self.nvars:
                raise PolyParseError(f"variable '{token.text}' outside {self.nvars} variables", self.text, token.position)
            return MultiPoly.variable(self.field, self.nvars, index)
        if token.text == '{':
            inner = self.take()
            if inner.kind != 'num':
                raise PolyParseError("element literal needs an index", self.text, inner.position)
            value = int(inner.text, 0)
            if not 0 <= value < self.field.q:
                raise PolyParseError(f"element index {value} outside the field", self.text, inner.position)
            self.take('}')
            return MultiPoly.constant(self.field, self.nvars, value)
        if token.text == '(':
            value = self.expr()
            self.take(')')
            return value
        raise PolyParseError(f"unexpected '{token.text}'", self.text, token.position)

    def finish(self):
        token = self.peek()
        if token is not None:
            raise PolyParseError(f"trailing '{token.text}'", self.text, token.position)


def parse_poly(text: str, field: FieldSpec, nvars: int) -> MultiPoly:
    parser = _Parser(text, field, nvars)
    value = parser.expr()
    parser.finish()
    return value


def split_components(text: str) -> List[str]:
    """
    Split "(f1, f2, ...)" at top-level commas; a bare expression is one component.
    """
    stripped = text.strip()
    if not (stripped.startswith('(') and stripped.endswith(')')):
        return [stripped]
    depth = 0
    for i, ch in enumerate(stripped):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth == 0 and i != len(stripped) - 1:
                # outer parentheses close early, e.g. "(x+1)*(y)"
                return [stripped]
    inner = stripped[1:-1]
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(inner):
        if ch in '({':
            depth += 1
        elif ch in ')}':
            depth -= 1
        elif ch == ',' and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    parts.append(inner[start:])
    if any(not p.strip() for p in parts):
        raise PolyParseError("empty component", text)
    return [p.strip() for p in parts]


def parse_system(text: str, field: FieldSpec) -> PolySystem:
    """
    Parse a system written as a parenthesized tuple; its length fixes the number of variables.
    """
    components = split_components(text)
    n = len(components)
    return PolySystem([parse_poly(c, field, n) for c in components])
