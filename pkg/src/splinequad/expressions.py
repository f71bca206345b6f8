"""
Small arithmetic-expression parser for user-supplied integrands.

Grammar (one free variable x, whitespace-insensitive):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?              # right-associative
    atom   := NUMBER | 'x' | FUNC '(' expr ')' | '(' expr ')'
    FUNC   := sin | cos | exp | log | sqrt | abs

Precedence is ^ above unary minus above '*'/'/' above '+'/'-', so
-x^2 parses as -(x^2) and 2^-3 is accepted.  Parse errors carry the byte
offset and the set of tokens that would have been accepted there.
"""
import math
import operator
import re

__all__ = (
    'Expression',
    'ExpressionError',
    'ExpressionSyntaxError',
    'UnknownFunctionError',
    'parse_expression',
)

_FUNCTIONS = {
    'sin': math.sin,
    'cos': math.cos,
    'exp': math.exp,
    'log': math.log,
    'sqrt': math.sqrt,
    'abs': math.fabs,
}

_BINARY = {
    '+': operator.add,
    '-': operator.sub,
    '*': operator.mul,
    '/': operator.truediv,
    '^': operator.pow,
}

_TOKEN_RE = re.compile(r"""
    (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
  | (?P<ws>\s+)
""", re.VERBOSE)


class ExpressionError(ValueError):
    """Base class for parse failures."""


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, offset, expected):
        self.offset = offset
        self.expected = tuple(expected)
        super().__init__("syntax error at offset %d: expected %s"
                         % (offset, ' or '.join(self.expected)))


class UnknownFunctionError(ExpressionError):
    def __init__(self, name, offset):
        self.name = name
        self.offset = offset
        super().__init__("unknown function %r at offset %d (have: %s)"
                         % (name, offset, ', '.join(sorted(_FUNCTIONS))))


class Expression(object):
    """Parsed expression; callable as a function of x."""

    def __init__(self, root, source):
        self._root = root
        self.source = source

    def __call__(self, x):
        return _eval_node(self._root, x)

    evaluate = __call__

    def __repr__(self):
        return "Expression(%r)" % self.source


def parse_expression(src):
    """
    Parse `src` per the module grammar.

    Returns
    -------
    Expression

    Raises
    ------
    ExpressionSyntaxError
        With the byte offset and the acceptable-token set.
    UnknownFunctionError
        For a call to anything outside sin/cos/exp/log/sqrt/abs.
    """
    if not src or not src.strip():
        raise ExpressionSyntaxError(0, _ATOM_EXPECTED)
    return Expression(_Parser(src).parse(), src)


#==============================================================================
_ATOM_EXPECTED = ("a number", "'x'", "a function call", "'('", "'-'")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ExpressionSyntaxError(pos, _ATOM_EXPECTED)
        if m.lastgroup != 'ws':
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(('end', '', len(src)))
    return tokens


class _Parser(object):

    def __init__(self, src):
        self._tokens = _tokenize(src)
        self._pos = 0

    def parse(self):
        root = self._expr()
        kind, _, offset = self._peek()
        if kind != 'end':
            raise ExpressionSyntaxError(
                offset, ("'+'", "'-'", "'*'", "'/'", "'^'", "end of input"))
        return root

    def _peek(self):
        return self._tokens[self._pos]

    def _advance(self):
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _expr(self):
        node = self._term()
        while self._peek()[1] in ('+', '-'):
            op = self._advance()[1]
            node = ('bin', op, node, self._term())
        return node

    def _term(self):
        node = self._unary()
        while self._peek()[1] in ('*', '/'):
            op = self._advance()[1]
            node = ('bin', op, node, self._unary())
        return node

    def _unary(self):
        if self._peek()[1] == '-':
            self._advance()
            return ('neg', self._unary())
        return self._power()

    def _power(self):
        node = self._atom()
        if self._peek()[1] == '^':
            self._advance()
            node = ('bin', '^', node, self._unary())
        return node

    def _atom(self):
        kind, text, offset = self._advance()
        if kind == 'number':
            return ('num', float(text))
        if kind == 'name':
            if text == 'x':
                return ('var',)
            if self._peek()[1] != '(':
                if text in _FUNCTIONS:
                    raise ExpressionSyntaxError(self._peek()[2], ("'('",))
                raise ExpressionSyntaxError(offset, _ATOM_EXPECTED)
            if text not in _FUNCTIONS:
                raise UnknownFunctionError(text, offset)
            self._advance()  # '('
            arg = self._expr()
            self._expect(')')
            return ('call', text, arg)
        if text == '(':
            node = self._expr()
            self._expect(')')
            return node
        raise ExpressionSyntaxError(offset, _ATOM_EXPECTED)

    def _expect(self, symbol):
        kind, text, offset = self._advance()
        if text != symbol:
            raise ExpressionSyntaxError(offset, ("'%s'" % symbol,))


def _eval_node(node, x):
    kind = node[0]
    if kind == 'num':
        return node[1]
    if kind == 'var':
        return x
    if kind == 'neg':
        return -_eval_node(node[1], x)
    if kind == 'bin':
        return _BINARY[node[1]](_eval_node(node[2], x), _eval_node(node[3], x))
    return _FUNCTIONS[node[1]](_eval_node(node[2], x))
