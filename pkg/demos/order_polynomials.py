"""Order polynomials of rooted trees, computed by operator recursion.

The strict polynomial counts labelings that strictly decrease from each
vertex to its children when evaluated at the number of allowed labels;
the weak polynomial allows ties.  Both come out of the same engine, and
both are checked here against direct enumeration of labelings.
"""

from forestinv import (
    brute_force_order_count,
    enumerate_trees,
    order_poly,
    parse_tree,
    pretty,
    strict_order_poly,
)


def main():
    print("order polynomials on 3 and 4 vertices")
    for n in (3, 4):
        for tree in enumerate_trees(n):
            strict = strict_order_poly(tree)
            weak = order_poly(tree)
            print(f"  {tree.key:12s} strict {pretty(strict)}")
            print(f"  {'':12s} weak   {pretty(weak)}")

    print()
    print("values are exact label-counting numbers; spot check at m = 3:")
    cherry = parse_tree("(()())")
    strict = strict_order_poly(cherry)
    weak = order_poly(cherry)
    for m in range(0, 5):
        direct_strict = brute_force_order_count(cherry, m, strict=True)
        direct_weak = brute_force_order_count(cherry, m, strict=False)
        print(
            f"  m={m}: strict {strict(m)} (direct {direct_strict}), "
            f"weak {weak(m)} (direct {direct_weak})"
        )

    print()
    print("reciprocity: strict(m) equals (-1)^n * weak(-m) on every tree")
    rows = []
    for n in range(1, 7):
        ok = all(
            strict_order_poly(t)(m) == (-1) ** n * order_poly(t)(-m)
            for t in enumerate_trees(n)
            for m in range(-3, 4)
        )
        rows.append(ok)
    print("  n = 1..6:", rows)


if __name__ == "__main__":
    main()
