"""Smoke test for the luttinger extension module.

Build and install first, e.g. `maturin develop --release` in crates/python.
"""

from fractions import Fraction

import luttinger as lt


def main():
    a = lt.Braid.parse(3, "1 2 1")
    b = lt.Braid.parse(3, "2 1 2")
    assert a.equal(b)
    assert not lt.Braid(3, [1, 2]).equal(lt.Braid(3, [2, 1]))
    assert lt.Braid(3, [1, 2]).perm() == [2, 3, 1]
    assert (a * a).normal_form() == "D^2"
    assert lt.Braid.full_twist(3).exponent_sum() == 6
    assert lt.Braid(2, [1]).artin_images() == [[1, 2, -1], [1]]

    conic = lt.Factorization.smooth_curve(2)
    assert conic.validate() == (True, "ok")
    assert conic.census() == {"branch_points": 2, "cusps": 0, "nodes": 0}
    pres = conic.presentation()
    assert pres.relators == [[1, -2], [1, -2], [1, 2]]
    assert pres.abelianization() == (0, [2])
    assert len(pres.covers(2)) == 1

    cubic = lt.Factorization.smooth_curve(3)
    moved = cubic.hurwitz_move(0, 1).hurwitz_move(3, -1)
    assert moved.validate()[0]
    assert moved.presentation().abelianization() == (0, [3])
    assert cubic.presentation().covers(2) == []
    twisted = cubic.partial_conjugate(0, len(cubic), lt.Braid(3, [1, -2]), 2)
    assert twisted.census() == cubic.census()
    assert lt.Factorization.parse_bmf(cubic.to_bmf()).equal_factorwise(cubic)

    inv = lt.family_invariants(2, 1)
    assert (inv["cusps"], inv["nodes"]) == (81, 0)
    assert inv["lambda"] == Fraction(3, 2) and inv["H"] == Fraction(1, 2)
    assert lt.family_invariants(3, 3)["h1"] == "Z/3"
    assert lt.distinguish(2, 0, 1)["result"] == "distinct"
    assert lt.distinguish(3, 1, 2)["result"] == "not-decided"
    assert lt.torus_primitivity(4, 7) and not lt.torus_primitivity(3, 1)
    assert lt.holonomy_relative(2, Fraction(3, 2), 0, 0, -1) == Fraction(1, 2)
    assert lt.holonomy_two_ways(7) == (Fraction(11, 7), Fraction(11, 7))
    assert lt.canonical_defect(1, "1/2") == {"PD[T]": Fraction(1, 2)}

    try:
        lt.Braid(3, [5])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range letter accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
