"""Labeled planar trees and order-sensitive invariants.

Planar trees keep their children in a fixed left-to-right order and
carry vertex labels.  Valued in free words, the invariant reads off
labels root first, so sibling order matters.  The tensor extension
remembers enough structure to reconstruct grafting algebraically.
"""

from forestinv import (
    check_tensor_grafting,
    enumerate_planar,
    enumerate_planar_forests,
    evaluate_planar,
    free_word_family,
    parse_planar_forest,
    parse_planar_tree,
    planar_equation_residual,
    planar_tree_count,
    pretty,
    tensor_family,
    u_planar_by_enumeration,
    u_planar_by_recurrence,
)


def main():
    family = free_word_family(["a", "b"])
    print("word values read labels from the root down:")
    for text in ("(a:)", "(a:(b:))", "(a:(b:)(a:))", "(a:(a:)(b:))"):
        value = evaluate_planar(parse_planar_tree(text), family)
        print(f"  {text:14s} -> {pretty(value)}")
    print("  the last two differ only in sibling order")

    print()
    print("census: Catalan(n-1) shapes times label choices")
    for n in range(1, 6):
        count = len(enumerate_planar(n, ["a", "b"]))
        print(f"  n={n}: {count} == {planar_tree_count(n, 2)}")

    print()
    print("per-label generating function, recurrence vs enumeration:")
    rec = u_planar_by_recurrence(family, 5)
    enum = u_planar_by_enumeration(family, 5)
    print("  termwise equal:", rec.per_label == enum.per_label)
    print("  geometric fixed point residual is zero:",
          planar_equation_residual(family, 5).is_zero())

    print()
    print("the flat word value forgets shape; the tensor value does not:")
    chain = parse_planar_tree("(a:(a:(a:)))")
    cherry = parse_planar_tree("(a:(a:)(a:))")
    print("  words equal:  ", evaluate_planar(chain, family) == evaluate_planar(cherry, family))
    tensors = tensor_family(family)
    print("  tensors equal:", evaluate_planar(chain, tensors) == evaluate_planar(cherry, tensors))
    print("  chain tensor: ", pretty(evaluate_planar(chain, tensors)))
    print("  cherry tensor:", pretty(evaluate_planar(cherry, tensors)))

    print()
    print("tensor values turn grafting into an operator application:")
    samples = [parse_planar_forest(t) for t in ("", "(a:)", "(a:)(b:)", "(b:(a:))")]
    report = check_tensor_grafting(samples, family)
    for check in report.graft_checks:
        shown = check["forest"] if check["forest"] else "(empty)"
        print(f"  graft {check['label']} onto {shown:12s} ok={check['ok']}")
    all_small = []
    for n in range(0, 4):
        all_small.extend(enumerate_planar_forests(n, ["a", "b"]))
    full = check_tensor_grafting(all_small, family)
    print(f"  all {len(full.graft_checks)} grafts and {len(full.product_checks)}"
          f" products on small forests agree: {full.ok}")


if __name__ == "__main__":
    main()
