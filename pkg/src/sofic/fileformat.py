"""Line-oriented text format for graphs and automata.

A file holds one or more documents, each opened by a header line::

    graph NAME | dfa NAME | medfa NAME

followed, in any order, by declarations:

    vertex NAME
    edge SRC LABEL DST
    start NAME          (dfa: exactly once; medfa: repeatable, in order)
    accept NAME...      (dfa/medfa)

Tokens are whitespace-separated; everything after a ``#`` is a comment.
Edges may only reference declared vertices.  Rendering emits the
canonical form (sorted vertices and edges), and parse/render/parse is
the identity on it.
"""

from dataclasses import dataclass

from .constructions import Dfa, MultiEntryDfa
from .errors import DuplicateVertexError, ParseError
from .graphs import LabeledGraph

KINDS = ("graph", "dfa", "medfa")


@dataclass(frozen=True)
class GraphDocument:
    """One named document: a graph or automaton plus its header kind."""

    kind: str
    name: str
    value: object


def _finish(kind, name, line, vertices, edges, starts, accepting):
    if kind == "graph":
        if starts or accepting:
            raise ParseError(line, "graph documents take no start/accept lines")
        return GraphDocument(kind, name, LabeledGraph(vertices=vertices, edges=edges))
    if not starts:
        raise ParseError(line, f"{kind} document {name!r} has no start state")
    sigma = sorted({a for _, a, _ in edges})
    delta = {}
    for src, a, dst in edges:
        if (src, a) in delta:
            raise ParseError(
                line, f"{kind} document {name!r} has two {a!r}-edges from {src!r}"
            )
        delta[(src, a)] = dst
    try:
        if kind == "dfa":
            if len(starts) > 1:
                raise ParseError(line, "dfa documents take a single start state")
            value = Dfa(vertices, sigma, delta, starts[0], accepting)
        else:
            value = MultiEntryDfa(vertices, sigma, delta, starts, accepting)
    except ValueError as exc:
        raise ParseError(line, f"invalid {kind} {name!r}: {exc}") from None
    return GraphDocument(kind, name, value)


def parse(text):
    """Parses every document in `text`, returning a tuple of GraphDocuments.

    Raises
    ------
    ParseError
        With the offending 1-based line number.
    """
    docs = []
    kind = name = None
    header_line = 0
    vertices = []
    edges = []
    starts = []
    accepting = []

    def close():
        if kind is not None:
            docs.append(
                _finish(kind, name, header_line, vertices, edges, starts, accepting)
            )

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        directive, args = tokens[0], tokens[1:]
        if directive in KINDS:
            if len(args) != 1:
                raise ParseError(number, f"{directive} header needs exactly one name")
            close()
            kind, name, header_line = directive, args[0], number
            vertices, edges, starts, accepting = [], [], [], []
            continue
        if kind is None:
            raise ParseError(number, f"{directive!r} before any document header")
        if directive == "vertex":
            if len(args) != 1:
                raise ParseError(number, "vertex takes exactly one name")
            if args[0] in vertices:
                raise DuplicateVertexError(
                    number, f"vertex {args[0]!r} declared twice"
                )
            vertices.append(args[0])
        elif directive == "edge":
            if len(args) != 3:
                raise ParseError(number, "edge takes SRC LABEL DST")
            src, label, dst = args
            for endpoint in (src, dst):
                if endpoint not in vertices:
                    raise ParseError(
                        number, f"edge references unknown vertex {endpoint!r}"
                    )
            edges.append((src, label, dst))
        elif directive == "start":
            if kind == "graph":
                raise ParseError(number, "start is only valid in dfa/medfa documents")
            if len(args) != 1:
                raise ParseError(number, "start takes exactly one name")
            if args[0] not in vertices:
                raise ParseError(number, f"unknown start vertex {args[0]!r}")
            if kind == "dfa" and starts:
                raise ParseError(number, "dfa documents take a single start state")
            starts.append(args[0])
        elif directive == "accept":
            if kind == "graph":
                raise ParseError(number, "accept is only valid in dfa/medfa documents")
            for state in args:
                if state not in vertices:
                    raise ParseError(number, f"unknown accepting vertex {state!r}")
                accepting.append(state)
        else:
            raise ParseError(number, f"unknown directive {directive!r}")
    close()
    return tuple(docs)


def parse_one(text, expect=None):
    """Parses exactly one document, optionally checking its kind."""
    docs = parse(text)
    if len(docs) != 1:
        raise ParseError(0, f"expected exactly one document, found {len(docs)}")
    if expect is not None and docs[0].kind != expect:
        raise ParseError(0, f"expected a {expect} document, found {docs[0].kind}")
    return docs[0]


def render(docs):
    """Renders one document or an iterable of documents in canonical form."""
    if isinstance(docs, GraphDocument):
        docs = (docs,)
    chunks = []
    for doc in docs:
        lines = [f"{doc.kind} {doc.name}"]
        value = doc.value
        if doc.kind == "graph":
            vertices, edges = value.vertices, value.edges
        else:
            vertices = value.states
            edges = sorted((q, a, t) for (q, a), t in value.delta.items())
        lines.extend(f"vertex {v}" for v in vertices)
        if doc.kind == "dfa":
            lines.append(f"start {value.start}")
        elif doc.kind == "medfa":
            lines.extend(f"start {s}" for s in value.starts)
        if doc.kind != "graph" and value.accepting:
            lines.append("accept " + " ".join(sorted(value.accepting)))
        lines.extend(f"edge {src} {label} {dst}" for src, label, dst in edges)
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"


def graph_document(name, graph):
    return GraphDocument("graph", name, graph)


def dfa_document(name, dfa):
    return GraphDocument("dfa", name, dfa)


def medfa_document(name, medfa):
    return GraphDocument("medfa", name, medfa)
