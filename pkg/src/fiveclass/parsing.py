"""Parser and renderer for the manifold-expression grammar.

    expr := term (('#' | '#~') term)*
    term := 'X(' int ')' | 'X(' int ',' int ')' | 'S2xRP3' | '*S2xRP3'
          | 'CP2xS1' | int '*(S2xS2)xS1'

Whitespace is insignificant; '#~' marks framing bit 1 at the join.  Syntax
errors carry the byte offset and the expected-token set.  The category is
inferred: topological when any X(p,q) or *S2xRP3 block occurs, smooth
otherwise.  A top-level expression must have fundamental group Z/2, so it
needs at least one X/S2xRP3-type block.
"""

from __future__ import annotations

from .algebra import (
    CP2xS1,
    Block,
    Category,
    FakeRP5,
    FakeRP5Top,
    ManifoldExpression,
    S2xRP3,
    S2xS2xS1,
    StarS2xRP3,
    block_top_only,
)
from .errors import ExpressionSemanticError, ExpressionSyntaxError

_TERM_EXPECTED = ("X(", "S2xRP3", "*S2xRP3", "CP2xS1", "<int>*(S2xS2)xS1")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def try_literal(self, lit: str) -> bool:
        self.skip_ws()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def expect_literal(self, lit: str) -> None:
        if not self.try_literal(lit):
            raise ExpressionSyntaxError(self.pos, (lit,))

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise ExpressionSyntaxError(start, ("<int>",))
        return int(self.text[start : self.pos])


def _parse_term(cur: _Cursor) -> Block:
    cur.skip_ws()
    start = cur.pos
    if cur.try_literal("X"):
        cur.expect_literal("(")
        first = cur.parse_int()
        if cur.try_literal(","):
            second = cur.parse_int()
            cur.expect_literal(")")
            return FakeRP5Top(first, second)
        cur.expect_literal(")")
        return FakeRP5(first)
    if cur.try_literal("*S2xRP3"):
        return StarS2xRP3()
    if cur.try_literal("S2xRP3"):
        return S2xRP3()
    if cur.try_literal("CP2xS1"):
        return CP2xS1()
    ch = cur.text[cur.pos] if cur.pos < len(cur.text) else ""
    if ch.isdigit() or ch in "+-":
        count = cur.parse_int()
        cur.expect_literal("*(S2xS2)xS1")
        if count < 1:
            raise ExpressionSemanticError(
                f"S2xS2 count must be >= 1, got {count} at offset {start}"
            )
        return S2xS2xS1(count)
    raise ExpressionSyntaxError(cur.pos, _TERM_EXPECTED)


def parse_expression(text: str) -> ManifoldExpression:
    cur = _Cursor(text)
    blocks = [_parse_term(cur)]
    framings: list[int] = []
    while not cur.eof():
        if cur.try_literal("#~"):
            framings.append(1)
        elif cur.try_literal("#"):
            framings.append(0)
        else:
            raise ExpressionSyntaxError(cur.pos, ("#", "#~"))
        blocks.append(_parse_term(cur))
    category = (
        Category.TOP if any(block_top_only(b) for b in blocks) else Category.SMOOTH
    )
    expr = ManifoldExpression(category, blocks, framings)
    if not expr.has_z2_block():
        raise ExpressionSemanticError(
            "expression has no Z/2 block (no X(..) or S2xRP3 term), "
            "so its fundamental group is Z, not Z/2"
        )
    return expr


def render_block(b: Block) -> str:
    if isinstance(b, FakeRP5):
        return f"X({b.q})"
    if isinstance(b, FakeRP5Top):
        return f"X({b.p},{b.q})"
    if isinstance(b, S2xRP3):
        return "S2xRP3"
    if isinstance(b, StarS2xRP3):
        return "*S2xRP3"
    if isinstance(b, CP2xS1):
        return "CP2xS1"
    return f"{b.k}*(S2xS2)xS1"


def render_expression(e: ManifoldExpression) -> str:
    parts = [render_block(e.blocks[0])]
    for bit, block in zip(e.framings, e.blocks[1:]):
        parts.append("#~" if bit else "#")
        parts.append(render_block(block))
    return " ".join(parts)
