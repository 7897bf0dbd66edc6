"""Equal shifts without isomorphic presentations.

The three-vertex graph G below is reducible but follower-separated, and
the subgraph H induced by its terminal component presents exactly the
same shift.  The two graphs are not isomorphic, so equality of shifts is
strictly weaker than isomorphism once presentations stop being
synchronizing.  H itself is synchronizing, which is why the shift is
irreducible even though G is not strongly connected.

Run with:  python3 demos/figure_pair.py
"""

from sofic.classify import are_isomorphic, follower_partition
from sofic.exact import decide_equality, decide_irreducibility, shortest_sync_word
from sofic.graphs import LabeledGraph, induced_subgraph, irreducible_components
from sofic.syncwords import is_synchronizing, sync_word_to_vertex

G = LabeledGraph(
    edges=[
        ("q1", "0", "q1"),
        ("q1", "1", "q2"),
        ("q2", "1", "q2"),
        ("q2", "0", "q3"),
        ("q3", "0", "q2"),
    ]
)
H = induced_subgraph(G, {"q2", "q3"})

print("components of G:")
for comp in irreducible_components(G):
    print("  ", sorted(comp.vertices), "initial" if comp.initial else "", "terminal" if comp.terminal else "")

print("follower classes of G:", [sorted(c) for c in follower_partition(G).classes])
print("same shift?          ", decide_equality(G, H))
print("isomorphic?          ", are_isomorphic(G, H) is not None)
print("shift irreducible?   ", decide_irreducibility(G))
print("G synchronizing?     ", is_synchronizing(G))
print("H synchronizing?     ", is_synchronizing(H))
print("shortest sync word of G:", shortest_sync_word(G))

print("\nwords aiming H at each vertex:")
for target in H.vertices:
    print(f"  to {target}:", " ".join(sync_word_to_vertex(H, target)))
