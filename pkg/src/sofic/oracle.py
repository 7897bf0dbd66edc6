"""Naive reference implementations used to cross-validate the algorithms.

Everything here recomputes from the raw edge list with straight-line
breadth-first or exhaustive search, sharing no traversal machinery with
the modules it checks; speed is explicitly not a goal.
"""

from collections import deque

MAX_LANGUAGE_DEPTH = 14


def _edge_map(g):
    succ = {}
    for src, a, dst in g.edges:
        succ.setdefault((src, a), set()).add(dst)
    return succ


def language_upto(g, depth):
    """All words of length at most `depth` readable somewhere in `g`.

    A word is in the language when the whole-vertex-set image under it
    is nonempty.  Includes the empty word whenever the graph is
    nonempty.  `depth` is capped at 14 to bound the stored word set.

    Parameters
    ----------
    g : deterministic essential LabeledGraph
    depth : int

    Returns
    -------
    set of words
    """
    if not 0 <= depth <= MAX_LANGUAGE_DEPTH:
        raise ValueError(f"depth must be between 0 and {MAX_LANGUAGE_DEPTH}")
    succ = _edge_map(g)
    labels = sorted({a for _, a, _ in g.edges})
    words = set()
    start = frozenset(g.vertices)
    if not start:
        return words
    stack = [(start, ())]
    while stack:
        subset, word = stack.pop()
        words.add(word)
        if len(word) == depth:
            continue
        for a in labels:
            image = set()
            for q in subset:
                image |= succ.get((q, a), set())
            if image:
                stack.append((frozenset(image), word + (a,)))
    return words


def lang_subset_upto(g, h, depth):
    """Whether every word of `g` up to `depth` is also a word of `h`."""
    return language_upto(g, depth) <= language_upto(h, depth)


def lang_equal_upto(g, h, depth):
    """Whether `g` and `h` have the same words up to `depth`."""
    return language_upto(g, depth) == language_upto(h, depth)


def dfa_intersection_shortest(dfas):
    """A shortest word accepted by every automaton, or None.

    Breadth-first search on the product state space, expanding labels in
    sorted order.
    """
    if not dfas:
        raise ValueError("need at least one automaton")
    sigma = dfas[0].alphabet
    if any(d.alphabet != sigma for d in dfas):
        raise ValueError("all automata must share one alphabet")
    start = tuple(d.start for d in dfas)
    if all(q in d.accepting for q, d in zip(start, dfas)):
        return ()
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        state, word = queue.popleft()
        for a in sigma:
            nxt = tuple(d.delta[(q, a)] for q, d in zip(state, dfas))
            if nxt in seen:
                continue
            extended = word + (a,)
            if all(q in d.accepting for q, d in zip(nxt, dfas)):
                return extended
            seen.add(nxt)
            queue.append((nxt, extended))
    return None


def dfa_union_universal(dfas):
    """Whether the union of the languages is everything, with a witness.

    A word misses the union exactly when every complemented automaton
    accepts it, so the witness is the shortest word in the intersection
    of the complements.

    Returns
    -------
    (bool, word or None)
        ``(True, None)`` when universal, else ``(False, w)`` with `w` a
        shortest word outside the union.
    """
    witness = dfa_intersection_shortest([d.complemented() for d in dfas])
    return witness is None, witness


def is_word_synchronizing(g, w):
    """The vertex `w` synchronizes `g` to, or None.

    Walks every vertex through `w` by scanning the edge list and checks
    whether exactly one endpoint survives.

    Parameters
    ----------
    g : deterministic LabeledGraph
    w : word
    """
    succ = _edge_map(g)
    survivors = set(g.vertices)
    for a in w:
        survivors = {d for q in survivors for d in succ.get((q, a), ())}
    if len(survivors) == 1:
        return next(iter(survivors))
    return None
