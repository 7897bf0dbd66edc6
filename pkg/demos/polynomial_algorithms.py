"""The three polynomial-time procedures on small presentations.

Walks the golden-mean and even shifts through synchronizing-word search,
separating-word search (language containment for an irreducible left
side), and the synchronizing-presentation test, then shows the hat-graph
finite-type test telling the two shifts apart.

Run with:  python3 demos/polynomial_algorithms.py
"""

from sofic.classify import is_sft_sync, m_step_bound
from sofic.graphs import LabeledGraph, subset_step
from sofic.products import hat_graph
from sofic.syncwords import (
    is_synchronizing,
    pair_synchronizing_word,
    separating_word,
    synchronizing_word_irreducible,
)

GOLDEN = LabeledGraph(edges=[("A", "0", "A"), ("A", "1", "B"), ("B", "0", "A")])
EVEN = LabeledGraph(edges=[("A", "1", "A"), ("A", "0", "B"), ("B", "0", "A")])
FULL = LabeledGraph(edges=[("v", "0", "v"), ("v", "1", "v")])

print("pair-synchronizing word for (A, B) in golden mean:",
      pair_synchronizing_word(GOLDEN, "A", "B"))

w = synchronizing_word_irreducible(GOLDEN)
print("synchronizing word:", w, "->", sorted(subset_step(GOLDEN, GOLDEN.vertices, w)))

print("\ncontainment checks (None = contained):")
print("  golden mean vs full shift:", separating_word(GOLDEN, FULL))
print("  full shift vs golden mean:", separating_word(FULL, GOLDEN))
print("  even vs golden mean:      ", separating_word(EVEN, GOLDEN))

print("\nsynchronizing presentations?")
for name, g in [("golden", GOLDEN), ("even", EVEN), ("full", FULL)]:
    print(f"  {name}: {is_synchronizing(g)}")

print("\nfinite-type test via the hat graph:")
for name, g in [("golden", GOLDEN), ("even", EVEN)]:
    hat = hat_graph(g)
    print(f"  {name}: hat edges = {hat.edges}, SFT = {is_sft_sync(g)}")
print("step bound for the golden mean:", m_step_bound(GOLDEN))
