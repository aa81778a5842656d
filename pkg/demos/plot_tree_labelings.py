"""
Labeling a tree so no two edges cross
=====================================

Draw the labels 1..n on a line and each edge as an arc above it.
Disjoint edges may nest or sit side by side but never interleave.
"""

from mupermanent import LabeledGraph, UnlabeledTree, find_crossing, is_mu_labeling, label_tree
from mupermanent.labeling import exists_mu_labeling, relabel_edges

# the path 2-1-4-3-5 has the interleaving arcs {1,4} and {3,5}
bad = LabeledGraph.from_path((2, 1, 4, 3, 5))
print("crossing pair:", find_crossing(bad.edges))

# the path 5-1-2-3-4 is fine
print("5-1-2-3-4 valid:", is_mu_labeling(LabeledGraph.from_path((5, 1, 2, 3, 4))))

# any tree can be labeled: walk a longest path from the root, then keep
# extending from the largest label that still has unlabeled neighbours
tree = UnlabeledTree([("a", "b"), ("b", "c"), ("b", "d"), ("d", "e"), ("e", "f"), ("a", "g")])
labels = label_tree(tree, root="a")
for v in sorted(labels, key=labels.get):
    print(v, "->", labels[v])
relabeled = relabel_edges(tree.edges(), labels)
print("labeled edges:", sorted(relabeled))
assert is_mu_labeling(relabeled)

# complete graphs: K3 can be labeled, K4 cannot
for n in (3, 4, 5):
    found = exists_mu_labeling(LabeledGraph.complete(n).edges)
    print(f"K{n}:", "labelable" if found else "no labeling")
