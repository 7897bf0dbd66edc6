"""Edge-labeled directed multigraphs and the transition action.

The carrier type for everything in this package is :class:`LabeledGraph`,
an immutable edge-labeled directed multigraph.  Vertices are named by
nonempty whitespace-free strings, and so are the labels; a *word* is a
tuple of label tokens (the empty tuple is the empty word).  All iteration
orders are derived from the lexicographic order on names, so every
operation in this package is reproducible run to run.

Duplicate parallel edges carrying the same label are collapsed on
construction: for the deterministic graphs the algorithms care about they
are indistinguishable at the language level.
"""

from collections import deque

from .errors import NotDeterministicError, UnknownVertexError


def _check_token(token, what):
    if not isinstance(token, str) or not token:
        raise ValueError(f"{what} must be a nonempty string, got {token!r}")
    if any(c.isspace() for c in token):
        raise ValueError(f"{what} {token!r} contains whitespace")
    return token


class LabeledGraph:
    """An immutable edge-labeled directed multigraph.

    Parameters
    ----------
    vertices : iterable of str, optional
        Vertex names; endpoints of `edges` are included automatically,
        so this is only needed for isolated vertices.
    edges : iterable of (src, label, dst) triples, optional

    Examples
    --------
    >>> g = LabeledGraph(edges=[("a", "x", "b"), ("b", "x", "a"), ("a", "x", "b")])
    >>> g.vertices
    ('a', 'b')
    >>> g.edges
    (('a', 'x', 'b'), ('b', 'x', 'a'))
    """

    __slots__ = ("vertices", "edges", "_out", "_next", "_in_degree", "_deterministic")

    def __init__(self, vertices=(), edges=()):
        vertex_set = {_check_token(v, "vertex") for v in vertices}
        edge_set = set()
        for src, label, dst in edges:
            _check_token(src, "vertex")
            _check_token(label, "label")
            _check_token(dst, "vertex")
            vertex_set.add(src)
            vertex_set.add(dst)
            edge_set.add((src, label, dst))
        self.vertices = tuple(sorted(vertex_set))
        self.edges = tuple(sorted(edge_set))

        out = {v: {} for v in self.vertices}
        in_degree = {v: 0 for v in self.vertices}
        for src, label, dst in self.edges:
            out[src].setdefault(label, []).append(dst)
            in_degree[dst] += 1
        self._out = {
            v: {a: tuple(dsts) for a, dsts in sorted(lab.items())}
            for v, lab in out.items()
        }
        self._in_degree = in_degree
        self._deterministic = all(
            len(dsts) == 1 for lab in self._out.values() for dsts in lab.values()
        )
        # single-successor map, meaningful only for deterministic graphs
        self._next = (
            {v: {a: dsts[0] for a, dsts in lab.items()} for v, lab in self._out.items()}
            if self._deterministic
            else None
        )

    def out_edges(self, q):
        """Yields the (label, dst) pairs of edges starting at `q`, sorted."""
        self._require_vertex(q)
        for label, dsts in self._out[q].items():
            for dst in dsts:
                yield label, dst

    def successors(self, q, label):
        """The tuple of endpoints of `label`-edges starting at `q`, sorted."""
        self._require_vertex(q)
        return self._out[q].get(label, ())

    def out_labels(self, q):
        """The sorted tuple of labels on edges starting at `q`."""
        self._require_vertex(q)
        return tuple(self._out[q])

    def in_degree(self, q):
        self._require_vertex(q)
        return self._in_degree[q]

    def _require_vertex(self, q):
        if q not in self._out:
            raise UnknownVertexError(f"vertex {q!r} is not in the graph")

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, q):
        return q in self._out

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"LabeledGraph(vertices={self.vertices!r}, edges={self.edges!r})"


EMPTY = LabeledGraph()


def is_deterministic(g):
    """Returns True iff no vertex of `g` has two equal-labeled outgoing edges.

    Examples
    --------
    >>> is_deterministic(LabeledGraph(edges=[("v", "0", "v"), ("v", "1", "v")]))
    True
    >>> is_deterministic(LabeledGraph(edges=[("v", "0", "v"), ("v", "0", "w"), ("w", "0", "v")]))
    False
    """
    return g._deterministic


def _require_deterministic(g):
    if not g._deterministic:
        raise NotDeterministicError("graph is not deterministic")


def alphabet(g):
    """The sorted tuple of labels appearing on edges of `g`."""
    return tuple(sorted({label for _, label, _ in g.edges}))


def essentialize(g):
    """The maximal subgraph of `g` with no stranded vertex.

    A vertex is stranded if it has no outgoing or no incoming edge.
    Removing one can strand another, so removal iterates to a fixpoint;
    the result is independent of removal order and may be empty.  The
    operation is idempotent.

    Examples
    --------
    >>> essentialize(LabeledGraph(edges=[("a", "x", "b")])).vertices
    ()
    """
    alive = set(g.vertices)
    while True:
        out_ok = {src for src, _, dst in g.edges if src in alive and dst in alive}
        in_ok = {dst for src, _, dst in g.edges if src in alive and dst in alive}
        keep = {v for v in alive if v in out_ok and v in in_ok}
        if keep == alive:
            break
        alive = keep
    return LabeledGraph(
        vertices=alive,
        edges=[e for e in g.edges if e[0] in alive and e[2] in alive],
    )


def is_essential(g):
    """Returns True iff no vertex of `g` is stranded."""
    return all(g._out[v] for v in g.vertices) and all(
        g._in_degree[v] > 0 for v in g.vertices
    )


def step(g, q, w):
    """The transition action q . w, or None when no path labeled `w` starts at q.

    In a deterministic graph a path is determined by its start vertex and
    its label word, so the endpoint is well defined.  The empty word acts
    as the identity.

    Parameters
    ----------
    g : deterministic LabeledGraph
    q : vertex of `g`
    w : word (sequence of label tokens)

    Examples
    --------
    >>> gm = LabeledGraph(edges=[("A", "0", "A"), ("A", "1", "B"), ("B", "0", "A")])
    >>> step(gm, "A", ("1", "0"))
    'A'
    >>> step(gm, "B", ("1",)) is None
    True
    """
    _require_deterministic(g)
    g._require_vertex(q)
    table = g._next
    for a in w:
        q = table[q].get(a)
        if q is None:
            return None
    return q


def subset_step(g, s, w):
    """The transition action S . w on a set of vertices, as a frozenset.

    Vertices where the action of `w` is undefined simply drop out, so the
    result can be empty.  The operation is monotone in `s` and distributes
    over union.

    Parameters
    ----------
    g : deterministic LabeledGraph
    s : iterable of vertices of `g`
    w : word
    """
    _require_deterministic(g)
    current = set()
    for q in s:
        g._require_vertex(q)
        current.add(q)
    table = g._next
    for a in w:
        nxt = set()
        for q in current:
            dst = table[q].get(a)
            if dst is not None:
                nxt.add(dst)
        current = nxt
        if not current:
            break
    return frozenset(current)


class Component(tuple):
    """One irreducible component: a frozenset of vertices plus side flags."""

    __slots__ = ()

    def __new__(cls, vertices, initial, terminal):
        return super().__new__(cls, (frozenset(vertices), initial, terminal))

    @property
    def vertices(self):
        return self[0]

    @property
    def initial(self):
        return self[1]

    @property
    def terminal(self):
        return self[2]

    def __repr__(self):
        return (
            f"Component({sorted(self.vertices)}, "
            f"initial={self.initial}, terminal={self.terminal})"
        )


def irreducible_components(g):
    """The strongly connected components of `g` with initial/terminal flags.

    A component is initial when no edge enters it from another component,
    and terminal when no edge leaves it.  Components are returned sorted
    by their smallest vertex.

    Examples
    --------
    >>> g = LabeledGraph(edges=[("a", "x", "b"), ("b", "x", "b")])
    >>> irreducible_components(g)
    (Component(['a'], initial=True, terminal=False), Component(['b'], initial=False, terminal=True))
    """
    succ = {v: sorted({dst for _, dst in g.out_edges(v)}) for v in g.vertices}
    index = {}
    lowlink = {}
    on_stack = set()
    stack = []
    counter = 0
    comp_of = {}
    comps = []

    for root in g.vertices:
        if root in index:
            continue
        # iterative Tarjan: (vertex, iterator over its successors)
        work = [(root, iter(succ[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                cid = len(comps)
                comps.append(comp)
                for w in comp:
                    comp_of[w] = cid

    initial = [True] * len(comps)
    terminal = [True] * len(comps)
    for src, _, dst in g.edges:
        a, b = comp_of[src], comp_of[dst]
        if a != b:
            initial[b] = False
            terminal[a] = False
    result = [
        Component(comp, initial[i], terminal[i]) for i, comp in enumerate(comps)
    ]
    result.sort(key=lambda c: min(c.vertices))
    return tuple(result)


def is_irreducible(g):
    """Returns True iff `g` is strongly connected (at most one component)."""
    return len(irreducible_components(g)) <= 1


def induced_subgraph(g, p):
    """The subgraph of `g` induced by the vertex set `p`.

    Keeps exactly the vertices in `p` and the edges with both endpoints
    in `p`.

    Raises
    ------
    UnknownVertexError
        If `p` is not a subset of the vertices of `g`.
    """
    p = set(p)
    for v in p:
        g._require_vertex(v)
    return LabeledGraph(
        vertices=p,
        edges=[e for e in g.edges if e[0] in p and e[2] in p],
    )


def disjoint_union(g, h):
    """The disjoint union of `g` and `h`, plus a provenance map.

    Vertices keep their names unless the two graphs collide, in which
    case the right-hand vertex gets a fresh ``~2``-suffixed name.  The
    provenance map sends each vertex of the union to ``(side, original)``
    with side 0 for `g` and 1 for `h`.

    Returns
    -------
    (LabeledGraph, dict)
    """
    taken = set(g.vertices)
    rename = {}
    for v in h.vertices:
        if v not in taken:
            rename[v] = v
        else:
            fresh = v + "~2"
            while fresh in taken or fresh in rename.values():
                fresh += "~2"
            rename[v] = fresh
        taken.add(rename[v])
    provenance = {v: (0, v) for v in g.vertices}
    provenance.update({rename[v]: (1, v) for v in h.vertices})
    union = LabeledGraph(
        vertices=list(g.vertices) + [rename[v] for v in h.vertices],
        edges=list(g.edges)
        + [(rename[s], a, rename[d]) for s, a, d in h.edges],
    )
    return union, provenance


def reachable_from(g, sources):
    """The set of vertices reachable from `sources` (including them)."""
    seen = set()
    queue = deque()
    for v in sources:
        g._require_vertex(v)
        if v not in seen:
            seen.add(v)
            queue.append(v)
    while queue:
        v = queue.popleft()
        for _, dst in g.out_edges(v):
            if dst not in seen:
                seen.add(dst)
                queue.append(dst)
    return frozenset(seen)
