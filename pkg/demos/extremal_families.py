"""Exponential growth made concrete.

The three-state machines M_0..M_k over {0..k} accept a common word only
at length 2**k, and feeding them to the sync-word generator produces
presentations whose shortest synchronizing word has length 2**k + 2 on
5k+6 vertices: a counterexample family to the quadratic reset-word bound
one might hope to carry over from complete automata.  A multiple-entry
machine run through the synchronizing-blowup generator shows the dual
effect on presentation sizes.

Run with:  python3 demos/extremal_families.py
"""

from sofic.constructions import (
    MultiEntryDfa,
    family_mik,
    padded_family_gn,
    reduction_sync,
    sdp_blowup,
    word_wk,
)
from sofic.exact import shortest_sync_word
from sofic.oracle import dfa_intersection_shortest

print("shortest common word of the machine family:")
for k in range(5):
    word = dfa_intersection_shortest(family_mik(k))
    print(f"  k={k}: length {len(word):2} = 2^{k}; witness {' '.join(word_wk(k))}")

print("\nshortest synchronizing words of the generated presentations:")
for k in range(4):
    g = reduction_sync(family_mik(k))
    word = shortest_sync_word(g)
    print(f"  k={k}: {len(g.vertices):2} vertices, sync length {len(word):2} = 2^{k}+2")

print("\npadded members with exact vertex counts:")
for n in (11, 13, 16):
    g = padded_family_gn(n)
    print(f"  n={n}: sync length {len(shortest_sync_word(g))}")

print("\nsynchronizing blowup for a three-entry machine:")
N = MultiEntryDfa(
    ["x", "y", "z"],
    ["a", "b", "c"],
    {
        ("x", "a"): "y", ("x", "b"): "y", ("x", "c"): "x",
        ("y", "a"): "y", ("y", "b"): "z", ("y", "c"): "x",
        ("z", "a"): "y", ("z", "b"): "x", ("z", "c"): "y",
    },
    ["x", "y", "z"],
    ["z"],
)
g = sdp_blowup(N)
print(f"  presentation: {len(g.vertices)} vertices;"
      " its minimal synchronizing presentation needs 9"
      " (determinizing the union language takes all 7 nonempty subsets)")
