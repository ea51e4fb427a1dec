"""Recursive-descent parser for linear combinations of cos/sin modes.

Grammar (whitespace between tokens is ignored)::

    expr      := term (("+" | "-") term)*
    term      := ["+" | "-"] (scalar ["*" primitive] | primitive)
    primitive := ("cos" | "sin") "(" [digits] "t" ")" | scalar
    scalar    := digits ["/" digits]

``t`` alone means ``1t``.  Repeated modes add up.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import ParseError
from .exact import ZERO, ExactScalar, format_scalar, rational
from .trig import TrigField

_DIGITS = "0123456789"
_SPACE = " \t\r\n"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.acc: dict[int, list] = defaultdict(lambda: [ZERO, ZERO])

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in _SPACE:
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            self.fail(f"expected {ch!r}, got {got!r}")
        self.pos += 1

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if start == self.pos:
            self.fail("expected digit")
        return int(self.text[start:self.pos])

    def scalar(self) -> ExactScalar:
        start = self.pos
        num = self.digits()
        if self.peek() == "/":
            self.pos += 1
            den = self.digits()
            if den == 0:
                self.fail("malformed rational: zero denominator", start)
            return rational(num, den)
        return rational(num)

    def parse(self) -> TrigField:
        if not self.peek():
            self.fail("expected cos/sin/number, got end of input")
        self.term(1)
        while True:
            ch = self.peek()
            if not ch:
                break
            if ch in "+-":
                self.pos += 1
                self.term(1 if ch == "+" else -1)
            else:
                self.fail(f"trailing garbage {ch!r}; expected '+' or '-'")
        return TrigField({k: tuple(v) for k, v in self.acc.items()})

    def term(self, sign: int):
        ch = self.peek()
        if ch and ch in "+-":
            self.pos += 1
            sign = -sign if ch == "-" else sign
            ch = self.peek()
        if ch and ch in _DIGITS:
            coef = self.scalar()
            if self.peek() == "*":
                self.pos += 1
                self.primitive(sign * coef)
            else:
                self.acc[0][0] += sign * coef
        else:
            self.primitive(rational(sign))

    def primitive(self, coef: ExactScalar):
        ch = self.peek()
        start = self.pos
        if ch and ch in _DIGITS:
            self.acc[0][0] += coef * self.scalar()
            return
        name = self.text[start:start + 3]
        if name not in ("cos", "sin"):
            self.fail("expected cos/sin/number", start)
        self.pos += 3
        self.expect("(")
        self.skip()
        mode_pos = self.pos
        if self.peek() == "-":
            self.fail("negative mode", mode_pos)
        k = self.digits() if self.peek() and self.peek() in _DIGITS else 1
        if self.peek() != "t":
            self.fail(f"expected 't', got {self.peek() or 'end of input'!r}")
        self.pos += 1
        self.expect(")")
        if name == "cos":
            self.acc[k][0] += coef
        else:
            if k == 0:
                self.fail("sin(0t) is not a basis element", mode_pos)
            self.acc[k][1] += coef


def parse_field(text) -> TrigField:
    """Parse a field expression such as ``"cos(t) - 1/2*sin(3t)"``."""
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8", errors="replace")
    return _Parser(text).parse()


def _term(coef: ExactScalar, prim: str, first: bool) -> str:
    neg = coef < 0
    mag = -coef if neg else coef
    if prim:
        body = prim if mag == 1 else f"{format_scalar(mag)}*{prim}"
    else:
        body = format_scalar(mag)
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def format_field(x: TrigField) -> str:
    """Canonical text: modes ascending, cos before sin."""
    parts = []
    for k, (a, b) in x.items():
        if k == 0:
            parts.append(_term(a, "", not parts))
            continue
        if a:
            parts.append(_term(a, f"cos({k}t)", not parts))
        if b:
            parts.append(_term(b, f"sin({k}t)", not parts))
    return "".join(parts) if parts else "0"
