"""A small s-expression reader with source positions, and a printer."""

from __future__ import annotations

from dataclasses import dataclass, field


class ParseError(ValueError):
    """Error with a source position and, when known, the expected token."""

    def __init__(self, message, line=0, col=0, expected=None, path=None, kind="grammar"):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        self.path = path
        self.kind = kind
        super().__init__(self._render())

    def _render(self):
        where = f"{self.path or '<input>'}:{self.line}:{self.col}"
        extra = f" (expected {self.expected})" if self.expected else ""
        return f"{where}: {self.kind} error: {self.message}{extra}"

    def with_path(self, path):
        return ParseError(self.message, self.line, self.col, self.expected, path, self.kind)


@dataclass
class Atom:
    text: str
    line: int = 0
    col: int = 0
    quoted: bool = False

    def __repr__(self):
        return repr(self.text) if self.quoted else self.text


@dataclass
class SList:
    items: list = field(default_factory=list)
    line: int = 0
    col: int = 0

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __iter__(self):
        return iter(self.items)

    @property
    def head(self):
        if self.items and isinstance(self.items[0], Atom) and not self.items[0].quoted:
            return self.items[0].text
        return None

    def __repr__(self):
        return "(" + " ".join(map(repr, self.items)) + ")"


_DELIMS = set('()";')


def read_all(text: str, path=None) -> list:
    """Parse every top-level expression in ``text``."""
    toks = _tokenize(text, path)
    out, i = [], 0
    while i < len(toks):
        node, i = _parse(toks, i, path)
        out.append(node)
    return out


def read_one(text: str, path=None):
    nodes = read_all(text, path)
    if len(nodes) != 1:
        line, col = (nodes[1].line, nodes[1].col) if len(nodes) > 1 else (1, 1)
        raise ParseError(f"expected one expression, found {len(nodes)}", line, col, path=path)
    return nodes[0]


def _tokenize(text, path):
    toks = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            toks.append((ch, line, col, False))
            i, col = i + 1, col + 1
            continue
        if ch == '"':
            j, buf = i + 1, []
            while j < n and text[j] != '"':
                if text[j] == "\\" and j + 1 < n:
                    j += 1
                if text[j] == "\n":
                    raise ParseError("unterminated string", line, col, '"', path, "lexical")
                buf.append(text[j])
                j += 1
            if j >= n:
                raise ParseError("unterminated string", line, col, '"', path, "lexical")
            toks.append(("".join(buf), line, col, True))
            col += j + 1 - i
            i = j + 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in _DELIMS:
            j += 1
        toks.append((text[i:j], line, col, None))
        col += j - i
        i = j
    return toks


def _parse(toks, i, path):
    text, line, col, kind = toks[i]
    if kind is None or kind is True:
        return Atom(text, line, col, quoted=bool(kind)), i + 1
    if text == ")":
        raise ParseError("unexpected ')'", line, col, "an expression", path)
    items, i = [], i + 1
    while True:
        if i >= len(toks):
            raise ParseError("unclosed '('", line, col, "')'", path)
        if toks[i][0] == ")" and toks[i][3] is False:
            return SList(items, line, col), i + 1
        node, i = _parse(toks, i, path)
        items.append(node)


# ------------------------------------------------------------------ printing


def quote(s: str) -> str:
    """Render a string as an atom, quoting it when needed."""
    if s and not any(c.isspace() or c in _DELIMS for c in s):
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render(x, width=100, indent=0) -> str:
    """Render nested lists of strings; long lists break one item per line."""
    if isinstance(x, str):
        return x
    if isinstance(x, (Atom, SList)):
        return repr(x)
    flat = "(" + " ".join(render(y, 10 ** 9) for y in x) + ")"
    if len(flat) + indent <= width or len(x) < 2:
        return flat
    head = render(x[0], width, indent + 1)
    pad = " " * (indent + 2)
    rest = [pad + render(y, width, indent + 2) for y in x[1:]]
    return "(" + head + "\n" + "\n".join(rest) + ")"
