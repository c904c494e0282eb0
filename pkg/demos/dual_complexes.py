"""Complexes, Alexander duals and the small-ground census.

Run with: python3 demos/dual_complexes.py
"""

from polyprod import (
    SimplicialComplex,
    document_of,
    enumerate_complexes,
    make_complex,
    mask_of,
    self_dual_complex,
)


def show(label, K):
    print(f"{label}:")
    for line in document_of(K).render().splitlines():
        print("  " + line)


def main():
    # two spellings of "nothing": the void complex has no faces at all,
    # the empty-face complex has exactly the empty face
    void = SimplicialComplex.void((1, 2))
    point_cloud = SimplicialComplex.empty_face_complex(mask_of([1, 2]))
    print("void faces:", sorted(void.faces))
    print("{0} faces:", sorted(point_cloud.faces))

    tri = SimplicialComplex.boundary_simplex(range(1, 4))
    show("boundary of the triangle", tri)
    show("its dual on the same ground", tri.dual(tri.ground))

    # the dual is an involution and swaps unions with intersections
    K1 = make_complex(range(1, 4), [(1, 2), (3,)])
    K2 = make_complex(range(1, 4), [(2, 3)])
    g = mask_of(range(1, 4))
    assert K1.dual(g).dual(g) == K1
    assert K1.union(K2).dual(g) == K1.dual(g).intersection(K2.dual(g))
    print("involution and De Morgan checks passed on a hand pair")

    # face counts of a complex and its dual always sum to 2^n
    n = K1.n_vertices
    print("face count identity:",
          len(K1.faces), "+", len(K1.dual(g).faces), "=", 2 ** n)

    # exhaustive census of complexes on tiny grounds, void and {0} included
    for k in range(5):
        family = list(enumerate_complexes(mask_of(range(1, k + 1))))
        print(f"complexes on {k} labeled vertices: {len(family)}")

    # a self-dual complex per ground size up to four
    for k in range(1, 5):
        K = self_dual_complex(k)
        assert K.dual(K.ground) == K
    show("a self-dual complex on four vertices", self_dual_complex(4))


if __name__ == "__main__":
    main()
