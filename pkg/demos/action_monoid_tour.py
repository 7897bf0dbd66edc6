"""Inside the exact deciders: actions of words as partial functions.

Every word acts on a deterministic presentation's vertices as a partial
function; the finitely many actions form a monoid under composition, and
emptiness patterns of products inside it answer the questions that
subset tracking alone cannot (SDP existence, finite type on reducible
inputs).  This script prints the whole monoid of the golden-mean and
even shifts and classifies each element.

Run with:  python3 demos/action_monoid_tour.py
"""

from sofic.exact import (
    action_monoid,
    is_intrinsically_sync_relation,
    preceded_by_intrinsic_sync,
)
from sofic.graphs import LabeledGraph

GOLDEN = LabeledGraph(edges=[("A", "0", "A"), ("A", "1", "B"), ("B", "0", "A")])
EVEN = LabeledGraph(edges=[("A", "1", "A"), ("A", "0", "B"), ("B", "0", "A")])

for name, g in [("golden mean", GOLDEN), ("even shift", EVEN)]:
    monoid = action_monoid(g)
    print(f"--- {name}: {monoid.size} actions")
    for element in monoid.elements:
        word = monoid.word_witness(element)
        shown = " ".join(word) if word else "(empty word)"
        flags = []
        if is_intrinsically_sync_relation(monoid, element):
            flags.append("intrinsically sync")
        if preceded_by_intrinsic_sync(monoid, element):
            flags.append("preceded")
        pairs = sorted(element.pairs)
        print(f"  [{shown:>12}] = {pairs}  {'; '.join(flags)}")
    print()

print(
    "note: the even shift's one-letter action of 0 is not intrinsically\n"
    "synchronizing (10 and 01 extend it but 101 does not), which is why\n"
    "arbitrarily long such words keep the even shift from finite type"
)
