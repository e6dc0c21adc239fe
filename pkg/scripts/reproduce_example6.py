"""Radial and unrefined distances for the 3x3 worked example, next to the
published figures."""

from chanspace import fixtures
from chanspace.verify import check_example6
from chanspace.metrics import radial_agreement_probability


def main():
    for name, ch in (("Q", fixtures.Q), ("R", fixtures.R)):
        rep = radial_agreement_probability(fixtures.P, ch)
        print(f"d^P({name}) = {rep.distance}   per-column S = {rep.per_column_s}")
    print()
    for row in check_example6()["info"]["table"]:
        mark = " " if row["match"] else "*"
        print(f"{mark} {row['quantity']:<32} published {row['published']:<10} enumerated {row['enumerated']}")


if __name__ == "__main__":
    main()
