"""Reduced homology over Z and over fields, exactly.

Run with: python3 demos/homology_basics.py
"""

from polyprod import (
    GF,
    RATIONALS,
    SimplicialComplex,
    cone_over_rp2,
    cycle_complex,
    euler_characteristic_reduced,
    reduced_cohomology,
    reduced_homology,
    relative_homology,
    rp2_complex,
)


def main():
    # boundaries of simplices are spheres: a single Z in degree n - 2
    for n in range(1, 8):
        sphere = SimplicialComplex.boundary_simplex(range(1, n + 1))
        print(f"boundary of the {n}-vertex simplex:", reduced_homology(sphere))

    # polygon cycles are circles regardless of the vertex count
    print("pentagon cycle:", reduced_homology(cycle_complex(5)))

    # the six-vertex projective plane carries 2-torsion; the four standard
    # coefficient systems see it differently
    rp2 = rp2_complex()
    print("projective plane over Z: ", reduced_homology(rp2))
    print("                 over Q: ", reduced_homology(rp2, RATIONALS))
    print("                 over F2:", reduced_homology(rp2, GF(2)))
    print("                 over F3:", reduced_homology(rp2, GF(3)))
    print("cohomology shifts the torsion up:", reduced_cohomology(rp2))
    print("reduced Euler characteristic:", euler_characteristic_reduced(rp2))

    # coning kills everything
    cone = cone_over_rp2()
    print("cone over the plane:", reduced_homology(cone))

    # the pair (full simplex, plane) remembers the plane one degree up
    groups, agrees = relative_homology(rp2.ground, rp2)
    print("relative homology of (simplex, plane):", groups,
          "(matches the degree-shifted plane: %s)" % agrees)


if __name__ == "__main__":
    main()
