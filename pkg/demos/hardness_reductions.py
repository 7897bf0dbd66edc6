"""DFA problems embedded into shift problems, end to end.

Union universality of a DFA list lines up with equality, irreducibility,
SDP existence, finite type, and two-vertex minimality of the generated
presentations; intersection nonemptiness lines up with the existence of
a synchronizing word.  This script runs both a universal and a
non-universal instance through all three generators.

Run with:  python3 demos/hardness_reductions.py
"""

from sofic.constructions import Dfa, reduction_irred, reduction_sft, reduction_sync
from sofic.exact import (
    decide_equality,
    decide_irreducibility,
    decide_minimality,
    decide_sdp_exists,
    decide_sft,
    shortest_sync_word,
)
from sofic.oracle import dfa_intersection_shortest, dfa_union_universal

ALL = Dfa(["s"], ["a"], {("s", "a"): "s"}, "s", ["s"])          # L = a*
EPS = Dfa(["s", "d"], ["a"], {("s", "a"): "d", ("d", "a"): "d"}, "s", ["s"])  # L = {eps}

for name, dfas in [("universal (L = a*)", [ALL]), ("non-universal (L = {eps})", [EPS])]:
    universal, witness = dfa_union_universal(dfas)
    print(f"--- {name}: union universal = {universal}, witness = {witness}")

    g, h = reduction_irred(dfas)
    print("  equality reduction:    shift(G) = shift(H):", decide_equality(g, h))
    print("                         shift(G) irreducible:", decide_irreducibility(g))
    print("                         shift(G) has an SDP: ", decide_sdp_exists(g))

    g, h2 = reduction_sft(dfas)
    print("  finite-type reduction: shift(G) is an SFT:  ", decide_sft(g))
    print("                         2-vertex presentation:", decide_minimality(g, 2))

    g = reduction_sync(dfas)
    word = shortest_sync_word(g)
    common = dfa_intersection_shortest(dfas)
    print("  sync-word reduction:   common word:", common, "| sync word:", word)
    print()
