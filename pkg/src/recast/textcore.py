"""Word tokenization, span arithmetic, and edit splicing.

Tokens are maximal runs of alphanumeric characters, with apostrophes kept
inside a token ("don't" is one token). Punctuation and whitespace are not
tokens, but every token records its byte range in the original text so
edits can be spliced back losslessly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InputTooLarge, SpanOutOfBounds

MAX_INPUT_BYTES = 10_000

_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*")


@dataclass(frozen=True)
class Token:
    text: str
    byte_start: int
    byte_end: int
    index: int


@dataclass(frozen=True)
class Span:
    """Contiguous token range, start inclusive, end exclusive."""

    start_token: int
    end_token: int

    def __len__(self) -> int:
        return self.end_token - self.start_token


@dataclass(frozen=True)
class Document:
    raw: str
    tokens: tuple[Token, ...]

    def validate_span(self, span: Span) -> None:
        if not (0 <= span.start_token < span.end_token <= len(self.tokens)):
            raise SpanOutOfBounds(
                f"span [{span.start_token}, {span.end_token}) invalid for "
                f"{len(self.tokens)} tokens"
            )

    def span_byte_range(self, span: Span) -> tuple[int, int]:
        self.validate_span(span)
        return (
            self.tokens[span.start_token].byte_start,
            self.tokens[span.end_token - 1].byte_end,
        )

    def span_text(self, span: Span) -> str:
        start, end = self.span_byte_range(span)
        return self.raw.encode("utf-8")[start:end].decode("utf-8")


def tokenize(text: str) -> Document:
    """Tokenize text into a Document with byte-addressed word tokens.

    Raises InputTooLarge for inputs over MAX_INPUT_BYTES bytes. Empty or
    whitespace-only text yields a document with zero tokens.
    """
    if len(text.encode("utf-8")) > MAX_INPUT_BYTES:
        raise InputTooLarge(f"input exceeds {MAX_INPUT_BYTES} bytes")

    ascii_only = text.isascii()
    tokens = []
    pos = 0
    byte = 0
    for i, m in enumerate(_TOKEN_RE.finditer(text)):
        if ascii_only:
            start, end = m.start(), m.end()
        else:
            byte += len(text[pos:m.start()].encode("utf-8"))
            start = byte
            byte += len(m.group().encode("utf-8"))
            end = byte
            pos = m.end()
        tokens.append(Token(text=m.group(), byte_start=start, byte_end=end, index=i))
    return Document(raw=text, tokens=tuple(tokens))


def apply_replacement(doc: Document, span: Span, replacement: str) -> Document:
    """Splice `replacement` over the span's byte range and re-tokenize.

    An empty replacement deletes the span; the space run left at the
    junction is collapsed to a single space and trimmed at text edges.
    The input document is never modified.
    """
    start, end = doc.span_byte_range(span)
    raw = doc.raw.encode("utf-8")
    if replacement:
        new_raw = (raw[:start] + replacement.encode("utf-8") + raw[end:]).decode("utf-8")
    else:
        prefix = raw[:start].decode("utf-8")
        suffix = raw[end:].decode("utf-8")
        merged = prefix + suffix
        left = len(prefix)
        while left > 0 and merged[left - 1] == " ":
            left -= 1
        right = len(prefix)
        while right < len(merged) and merged[right] == " ":
            right += 1
        if right > left:
            merged = merged[:left] + " " + merged[right:]
        new_raw = merged.strip(" ")
    return tokenize(new_raw)
