"""Polynomial-time synchronizing-word machinery.

Three algorithms live here.  The first finds a synchronizing word in an
irreducible deterministic graph by repeatedly merging a pair of live
vertices with a pair-synchronizing word.  The second finds a word
separating one graph's language from another's, which decides subshift
containment when the first graph is irreducible.  The third combines the
two to recognize synchronizing presentations: every initial irreducible
component must synchronize internally and be separable from the rest of
the graph.  A constructive variant produces, for a synchronizing
presentation, a word synchronizing to any requested vertex.

All "choose any" points are resolved by the sorted order on vertex names
and labels, and all witness searches are breadth-first, so outputs are
shortest-per-stage and reproducible.
"""

from collections import deque

from .errors import NotIrreducibleError, NotSynchronizingError, SameVertexError
from .graphs import (
    alphabet,
    induced_subgraph,
    irreducible_components,
    step,
    subset_step,
    _require_deterministic,
)
from .products import find_word_to, sink_vertex_graph, sink_vertex_name


def pair_synchronizing_word(g, p, q):
    """A shortest word w with ``|{p, q} . w| == 1``, or None.

    The search runs over pairs of vertices of the sink-completed graph,
    stopping as soon as one coordinate dies (the word is in one follower
    set but not the other) or both coordinates meet off the sink (the
    word sends p and q to the same vertex).

    Parameters
    ----------
    g : deterministic LabeledGraph
    p, q : distinct vertices of `g`

    Raises
    ------
    NotDeterministicError
    SameVertexError
    """
    _require_deterministic(g)
    g._require_vertex(p)
    g._require_vertex(q)
    if p == q:
        raise SameVertexError(f"need two distinct vertices, got {p!r} twice")
    gamma = alphabet(g)
    g0 = sink_vertex_graph(g, gamma)
    sink = sink_vertex_name(g)
    table = g0._next
    seen = {(p, q)}
    queue = deque([((p, q), ())])
    while queue:
        (x, y), word = queue.popleft()
        for a in gamma:
            x2, y2 = table[x][a], table[y][a]
            extended = word + (a,)
            dead_x, dead_y = x2 == sink, y2 == sink
            if dead_x != dead_y or (not dead_x and x2 == y2):
                return extended
            if dead_x and dead_y:
                continue
            if (x2, y2) not in seen:
                seen.add((x2, y2))
                queue.append(((x2, y2), extended))
    return None


def synchronizing_word_irreducible(g):
    """A synchronizing word for an irreducible deterministic graph, or None.

    Maintains a live set X with ``Q . u == X``, shrinking it with a
    pair-synchronizing word for the two smallest members each round; when
    no such word exists the graph has no synchronizing word at all.  At
    most ``|Q|`` rounds are needed.

    Raises
    ------
    NotDeterministicError
    NotIrreducibleError
        Also raised for the empty graph, which has no vertices to merge.
    """
    _require_deterministic(g)
    if not g.vertices:
        raise NotIrreducibleError("the empty graph has no synchronizing-word search")
    if len(irreducible_components(g)) != 1:
        raise NotIrreducibleError("graph is not strongly connected")
    live = frozenset(g.vertices)
    word = ()
    while len(live) >= 2:
        p, q = sorted(live)[:2]
        w = pair_synchronizing_word(g, p, q)
        if w is None:
            return None
        live = subset_step(g, live, w)
        word += w
    return word


def separating_word(g, h):
    """A word in the language of `g` but not of `h`, or None.

    Tracks one vertex p of `g` and the live set X of `h`, repeatedly
    finding a word readable from p in `g` but not from the smallest
    member of X in `h`; such a word exists exactly when some word kills
    all of `h` while staying readable in `g`.  For essential inputs,
    None means the shift of `g` is contained in the shift of `h`.

    The tracked vertex starts at the smallest vertex of `g`, and the
    returned word is readable in `g` from that vertex.

    Parameters
    ----------
    g : deterministic irreducible LabeledGraph, nonempty
    h : deterministic LabeledGraph; may be empty or nonessential

    Raises
    ------
    NotDeterministicError
    NotIrreducibleError
        For the first argument only.
    """
    _require_deterministic(g)
    _require_deterministic(h)
    if not g.vertices:
        raise NotIrreducibleError("the first argument must be nonempty")
    if len(irreducible_components(g)) != 1:
        raise NotIrreducibleError("the first argument must be strongly connected")
    gamma = tuple(sorted(set(alphabet(g)) | set(alphabet(h))))
    h0 = sink_vertex_graph(h, gamma)
    sink = sink_vertex_name(h)
    h_table = h0._next
    g_table = g._next
    p = g.vertices[0]
    live = frozenset(h.vertices)
    word = ()
    while live:
        q = min(live)
        found = None
        seen = {(p, q)}
        queue = deque([((p, q), ())])
        while queue and found is None:
            (x, y), prefix = queue.popleft()
            for a in gamma:
                x2 = g_table[x].get(a)
                if x2 is None:
                    continue
                y2 = h_table[y][a]
                if y2 == sink:
                    found = prefix + (a,)
                    break
                if (x2, y2) not in seen:
                    seen.add((x2, y2))
                    queue.append(((x2, y2), prefix + (a,)))
        if found is None:
            return None
        p = step(g, p, found)
        live = subset_step(h, live, found)
        word += found
    return word


def is_synchronizing(g):
    """Returns True iff every vertex of `g` has a word synchronizing to it.

    Checks, for each initial irreducible component, that the induced
    subgraph has a synchronizing word and that a word separates it from
    the subgraph induced by the remaining vertices.  The empty graph is
    vacuously synchronizing.

    Raises
    ------
    NotDeterministicError
    """
    _require_deterministic(g)
    all_vertices = set(g.vertices)
    for comp in irreducible_components(g):
        if not comp.initial:
            continue
        inside = induced_subgraph(g, comp.vertices)
        outside = induced_subgraph(g, all_vertices - comp.vertices)
        if synchronizing_word_irreducible(inside) is None:
            return False
        if separating_word(inside, outside) is None:
            return False
    return True


def sync_word_to_vertex(g, r):
    """A word sending every vertex of the synchronizing presentation `g` to `r`.

    Concatenates a synchronizing word for an initial component from which
    `r` is reachable, a connector to the separation start, the separating
    word (killing everything outside the component), and a path to `r`.

    Parameters
    ----------
    g : deterministic, essential, synchronizing LabeledGraph
    r : vertex of `g`

    Raises
    ------
    UnknownVertexError
    NotSynchronizingError
    """
    g._require_vertex(r)
    if not is_synchronizing(g):
        raise NotSynchronizingError("graph is not a synchronizing presentation")
    preds = {}
    for src, _, dst in g.edges:
        preds.setdefault(dst, set()).add(src)
    can_reach = {r}
    queue = deque([r])
    while queue:
        v = queue.popleft()
        for u in preds.get(v, ()):
            if u not in can_reach:
                can_reach.add(u)
                queue.append(u)
    component = next(
        comp
        for comp in irreducible_components(g)
        if comp.initial and comp.vertices & can_reach
    )
    inside = induced_subgraph(g, component.vertices)
    outside = induced_subgraph(g, set(g.vertices) - component.vertices)
    sync = synchronizing_word_irreducible(inside)
    (focused,) = subset_step(inside, component.vertices, sync)
    separator = separating_word(inside, outside)
    sep_start = inside.vertices[0]
    connector = find_word_to(inside, {focused}, lambda v: v == sep_start)
    landing = step(inside, sep_start, separator)
    tail = find_word_to(g, {landing}, lambda v: v == r)
    return sync + connector + separator + tail
