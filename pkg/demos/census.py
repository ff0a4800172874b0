"""Walk through the tree and forest censuses.

Enumerates rooted trees up to isomorphism, cross-checks the counts
against an independent level-sequence enumerator, and shows how forests
on n vertices pair off with trees on n + 1 via grafting.
"""

from forestinv import automorphism_order, b_plus, enumerate_forests, enumerate_trees
from forestinv.oracles import count_trees_by_level_sequence, euler_transform


def main():
    print("rooted trees up to isomorphism")
    print("n  count  oracle  trees")
    for n in range(1, 8):
        trees = enumerate_trees(n)
        oracle = count_trees_by_level_sequence(n)
        shown = " ".join(t.key for t in trees[:4])
        if len(trees) > 4:
            shown += " ..."
        print(f"{n}  {len(trees):5d}  {oracle:6d}  {shown}")

    print()
    print("forests with n vertices match trees with n + 1 (graft a root):")
    for n in range(0, 7):
        forests = enumerate_forests(n)
        grafted = sorted(b_plus(f).key for f in forests)
        trees = sorted(t.key for t in enumerate_trees(n + 1))
        status = "ok" if grafted == trees else "MISMATCH"
        print(f"  |F_{n}| = {len(forests):4d} = |T_{n + 1}| = {len(trees):4d}  {status}")

    print()
    counts = [len(enumerate_trees(n)) for n in range(1, 11)]
    forest_counts = euler_transform(counts[:9])
    print("the Euler transform turns the tree census into the forest census,")
    print("which is the tree census shifted by one:")
    print("  trees          ", counts)
    print("  forests (n>=1) ", forest_counts)
    print("  shift agrees:   ", forest_counts == counts[1:])

    print()
    print("automorphism group orders on 5 vertices:")
    for tree in enumerate_trees(5):
        print(f"  {tree.key:14s} alpha = {automorphism_order(tree)}")


if __name__ == "__main__":
    main()
