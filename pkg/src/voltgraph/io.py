"""Line-oriented document format and DOT export.

A document declares one group, then vertices, then edges with optional
voltages, *or* vertex labels (never both)::

    format 1
    group cyclic 3
    vertex u
    vertex v
    link u v 1
    loop u 2
    semiedge v 0

``group`` takes a prefix expression (``cyclic N``, ``product A B`` or
``table N``).  Each ``table N`` is followed by N lines of N entries, one per
table group in declaration order.  Product elements are written as
comma-joined leaf components (``1,0``).  ``#`` starts a comment; the
``format`` line is optional on input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import LabeledGraph, VoltageGraph
from .graph import EdgeKind, Graph, GraphError, build_graph, classify_edge, edges
from .groups import FiniteGroup, GroupError, cyclic, direct_product, table_group

__all__ = [
    "ParseError",
    "FORMAT_VERSION",
    "parse",
    "parse_group",
    "serialize",
    "serialize_group",
    "export_dot",
    "read_document",
]

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass
class _Token:
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[list[_Token]]:
    lines = []
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            toks.append(_Token(part, lineno, col + 1))
            col += len(part)
        if toks:
            lines.append(toks)
    return lines


def _nat(tok: _Token) -> int:
    if not tok.text.isdigit():
        raise ParseError(tok.line, tok.column, f"expected a natural number, got {tok.text!r}")
    return int(tok.text)


class _GroupReader:
    """Recursive-descent reader for prefix group expressions."""

    def __init__(self, toks: list[_Token], end: _Token):
        self.toks = toks
        self.pos = 0
        self.end = end
        self.tables: list[tuple[_Token, int]] = []

    def next(self) -> _Token:
        if self.pos >= len(self.toks):
            raise ParseError(self.end.line, self.end.column + len(self.end.text),
                             "incomplete group expression")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        tok = self.next()
        if tok.text == "cyclic":
            ntok = self.next()
            n = _nat(ntok)
            if n < 1:
                raise ParseError(ntok.line, ntok.column, "cyclic group order must be >= 1")
            return ("cyclic", n)
        if tok.text == "product":
            return ("product", self.expr(), self.expr())
        if tok.text == "table":
            ntok = self.next()
            n = _nat(ntok)
            if n < 1:
                raise ParseError(ntok.line, ntok.column, "table group order must be >= 1")
            self.tables.append((tok, n))
            return ("table", len(self.tables) - 1)
        raise ParseError(tok.line, tok.column, f"unknown group kind {tok.text!r}")


def _read_group(lines: list[list[_Token]], i: int) -> tuple[FiniteGroup, int]:
    head = lines[i]
    reader = _GroupReader(head[1:], head[0])
    tree = reader.expr()
    if reader.pos != len(reader.toks):
        tok = reader.toks[reader.pos]
        raise ParseError(tok.line, tok.column, "trailing tokens after group expression")
    i += 1
    built: list[FiniteGroup] = []
    for tok, n in reader.tables:
        rows = []
        for r in range(n):
            if i >= len(lines):
                raise ParseError(tok.line, tok.column, f"table needs {n} rows, found {r}")
            row = lines[i]
            if len(row) != n:
                raise ParseError(row[0].line, row[0].column, f"table row needs {n} entries")
            rows.append([_nat(t) for t in row])
            i += 1
        try:
            built.append(table_group(rows))
        except GroupError as exc:
            raise ParseError(tok.line, tok.column, f"not a group: {exc}") from None

    def make(node) -> FiniteGroup:
        if node[0] == "cyclic":
            return cyclic(node[1])
        if node[0] == "product":
            return direct_product(make(node[1]), make(node[2]))
        return built[node[1]]

    return make(tree), i


def parse_group(text: str) -> FiniteGroup:
    """Parse a stand-alone ``group ...`` declaration (plus table rows)."""
    lines = _tokenize(text)
    if not lines or lines[0][0].text != "group":
        raise ParseError(1, 1, "expected a group declaration")
    group, i = _read_group(lines, 0)
    if i != len(lines):
        tok = lines[i][0]
        raise ParseError(tok.line, tok.column, "unexpected input after group declaration")
    return group


def _element(group: FiniteGroup, tok: _Token) -> int:
    try:
        return group.parse_element(tok.text)
    except GroupError as exc:
        raise ParseError(tok.line, tok.column, str(exc)) from None


def parse(text: str) -> VoltageGraph | LabeledGraph:
    """Parse a document into a voltage graph, or a labelled graph if it has labels."""
    lines = _tokenize(text)
    group: FiniteGroup | None = None
    names: list[str] = []
    index: dict[str, int] = {}
    edge_spec: list[tuple[EdgeKind, tuple[int, ...]]] = []
    voltages: list[tuple[int, _Token | None, _Token]] = []  # (value, elem token, keyword token)
    labels: dict[int, int] = {}
    first_label: _Token | None = None
    first_voltage: _Token | None = None

    def vertex(tok: _Token) -> int:
        if tok.text not in index:
            raise ParseError(tok.line, tok.column, f"undeclared vertex {tok.text!r}")
        return index[tok.text]

    def need_group(tok: _Token) -> FiniteGroup:
        if group is None:
            raise ParseError(tok.line, tok.column, "group must be declared first")
        return group

    i = 0
    while i < len(lines):
        toks = lines[i]
        kw = toks[0]
        word = kw.text
        if word == "format":
            if len(toks) != 2 or toks[1].text != str(FORMAT_VERSION):
                raise ParseError(kw.line, kw.column, f"unsupported format line (expected 'format {FORMAT_VERSION}')")
            i += 1
            continue
        if word == "group":
            if group is not None:
                raise ParseError(kw.line, kw.column, "group declared twice")
            group, i = _read_group(lines, i)
            continue
        need_group(kw)
        if word == "vertex":
            if len(toks) != 2:
                raise ParseError(kw.line, kw.column, "usage: vertex NAME")
            name = toks[1].text
            if name in index:
                raise ParseError(toks[1].line, toks[1].column, f"vertex {name!r} declared twice")
            index[name] = len(names)
            names.append(name)
        elif word in ("link", "loop", "semiedge"):
            arity = 2 if word == "link" else 1
            if len(toks) not in (1 + arity, 2 + arity):
                raise ParseError(kw.line, kw.column, f"usage: {word} {'U V' if arity == 2 else 'U'} [ELEM]")
            ends = tuple(vertex(t) for t in toks[1:1 + arity])
            if word == "link" and ends[0] == ends[1]:
                raise ParseError(toks[2].line, toks[2].column, "a link needs two distinct endpoints")
            elem_tok = toks[1 + arity] if len(toks) == 2 + arity else None
            value = _element(group, elem_tok) if elem_tok else 0  # type: ignore[arg-type]
            if elem_tok is not None and first_voltage is None:
                first_voltage = elem_tok
            if word == "semiedge" and group.mul(value, value) != 0:  # type: ignore[union-attr]
                tok = elem_tok or kw
                raise ParseError(
                    tok.line, tok.column,
                    f"semiedge voltage {tok.text if elem_tok else '0'} is not an involution in "
                    f"{group.name}",  # type: ignore[union-attr]
                )
            edge_spec.append((EdgeKind(word), ends))
            voltages.append((value, elem_tok, kw))
        elif word == "label":
            if len(toks) != 3:
                raise ParseError(kw.line, kw.column, "usage: label VERTEX ELEM")
            v = vertex(toks[1])
            if v in labels:
                raise ParseError(toks[1].line, toks[1].column, f"vertex {toks[1].text!r} labelled twice")
            labels[v] = _element(group, toks[2])  # type: ignore[arg-type]
            if first_label is None:
                first_label = kw
        else:
            raise ParseError(kw.line, kw.column, f"unknown declaration {word!r}")
        i += 1

    if group is None:
        raise ParseError(1, 1, "missing group declaration")
    if first_label is not None and first_voltage is not None:
        later = max(first_label, first_voltage, key=lambda t: (t.line, t.column))
        raise ParseError(later.line, later.column, "a document holds either voltages or labels, not both")
    try:
        g = build_graph(len(names), edge_spec, vertex_names=names)
    except GraphError as exc:
        raise ParseError(1, 1, str(exc)) from None
    if first_label is not None:
        return LabeledGraph(g, group, [labels.get(v, 0) for v in range(len(names))])
    alpha = [0] * g.dart_count
    for orb, (value, _, _) in zip(edges(g), voltages):
        alpha[orb[0]] = value
        if len(orb) == 2:
            alpha[orb[1]] = group.inv(value)
    return VoltageGraph(g, group, alpha)


def read_document(path: str) -> VoltageGraph | LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def serialize_group(group: FiniteGroup) -> list[str]:
    out = [f"group {group.declaration()}"]
    for t in group.table_groups():
        out += [" ".join(str(c) for c in row) for row in t.table]
    return out


def _edge_lines(g: Graph, alpha: tuple[int, ...] | None, group: FiniteGroup) -> list[str]:
    out = []
    for orb in edges(g):
        d = orb[0]
        kind = classify_edge(g, d)
        u, w = g.vertex_name(g.src[d]), g.vertex_name(g.tgt[d])
        ends = f"{u} {w}" if kind is EdgeKind.LINK else u
        line = f"{kind.value} {ends}"
        if alpha is not None:
            line += f" {group.format_element(alpha[d])}"
        out.append(line)
    return out


def serialize(obj: VoltageGraph | LabeledGraph) -> str:
    """Canonical text: vertices by id, edges by least dart, LF line endings."""
    g, group = obj.graph, obj.group
    names = [g.vertex_name(v) for v in g.vertices()]
    if len(set(names)) != len(names) or any(not n or "#" in n or n != "".join(n.split()) for n in names):
        names = [f"v{v}" for v in g.vertices()]
        g = g.with_names(names)
    out = [f"format {FORMAT_VERSION}"] + serialize_group(group)
    out += [f"vertex {name}" for name in names]
    if isinstance(obj, VoltageGraph):
        out += _edge_lines(g, obj.alpha, group)
    else:
        out += _edge_lines(g, None, group)
        out += [f"label {names[v]} {group.format_element(obj.beta[v])}" for v in g.vertices()]
    return "\n".join(out) + "\n"


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(obj: Graph | VoltageGraph | LabeledGraph, name: str = "G") -> str:
    """Undirected DOT with one edge per λ-orbit.

    Voltage graphs label each edge with the voltage of its least dart and
    point it along that dart.  Semiedges end at an invisible point node.
    """
    if isinstance(obj, Graph):
        g, alpha, beta, group = obj, None, None, None
    elif isinstance(obj, VoltageGraph):
        g, alpha, beta, group = obj.graph, obj.alpha, None, obj.group
    else:
        g, alpha, beta, group = obj.graph, None, obj.beta, obj.group
    lines = [f"graph {_q(name)} {{"]
    for v in g.vertices():
        attrs = ""
        if beta is not None:
            attrs = f" [xlabel={_q(group.format_element(beta[v]))}]"  # type: ignore[union-attr]
        lines.append(f"  {_q(g.vertex_name(v))}{attrs};")
    stub = 0
    for orb in edges(g):
        d = orb[0]
        kind = classify_edge(g, d)
        attrs = []
        if alpha is not None:
            attrs.append(f"label={_q(group.format_element(alpha[d]))}")  # type: ignore[union-attr]
        u = _q(g.vertex_name(g.src[d]))
        if kind is EdgeKind.SEMIEDGE:
            node = _q(f"_semi{stub}")
            stub += 1
            lines.append(f"  {node} [shape=point, style=invis];")
            target = node
        else:
            target = _q(g.vertex_name(g.tgt[d]))
            if alpha is not None:
                attrs.append("dir=forward")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {target}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
