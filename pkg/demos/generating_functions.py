"""Generating functions over the tree census.

U_n collects the invariant over every tree on n vertices, each weighted
by one over its automorphism count.  A fixed-point recurrence produces
the same terms without ever enumerating a tree, and the series of the
plain weights reproduces the classic n^(n-1)/n! numbers.
"""

from forestinv import (
    cayley_check,
    pretty,
    strict_order_spec,
    u_by_enumeration,
    u_by_recurrence,
    verify_functional_equation,
    weak_order_spec,
)


def main():
    spec = strict_order_spec()
    print(f"leading terms for the {spec.name} invariant, by recurrence:")
    rec = u_by_recurrence(spec, 6)
    for n, term in enumerate(rec.terms, start=1):
        print(f"  U_{n} = {pretty(term)}")

    print()
    print("the same terms by summing over every tree:")
    enum = u_by_enumeration(spec, 6)
    print("  termwise equal:", rec.terms == enum.terms)

    print()
    print("residual of the fixed-point equation q*X(exp U) = U, built")
    print("from the enumeration side so nothing is true by construction:")
    for name, s in (("strict", strict_order_spec()), ("weak", weak_order_spec())):
        residual = verify_functional_equation(s, 7)
        print(f"  {name}: zero through q^7: {residual.is_zero()}")

    print()
    print("automorphism-weighted tree counts against n^(n-1)/n!:")
    report = cayley_check(10)
    for row in report.rows:
        print(
            f"  n={row['n']:2d}  sum {str(row['tree_sum']):>18s}"
            f"  closed form {str(row['closed_form']):>18s}  {row['equal']}"
        )
    print("  series fixed point holds:", report.residual_zero)


if __name__ == "__main__":
    main()
