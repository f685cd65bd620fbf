"""Brute-force intertwiner oracle vs the mesh-recursion Hom dimensions."""

import pytest

from clustercat.dynkin import build_quiver, knit, positive_roots
from clustercat.reps import brute_force_hom_dim, indecomposable_rep


@pytest.mark.parametrize(
    "family,rank,orientation",
    [
        ("A", 2, "default"),
        ("A", 3, "default"),
        ("A", 3, [(2, 1), (2, 3)]),
        ("D", 4, "default"),
        ("D", 4, [(3, 1), (3, 2), (4, 3)]),
    ],
)
def test_every_root_realized_and_end_is_one_dimensional(family, rank, orientation):
    q = build_quiver(family, rank, orientation)
    for root in sorted(positive_roots(family, rank)):
        rep = indecomposable_rep(q, root)
        assert rep.dim_vector() == root
        assert brute_force_hom_dim(rep, rep) == 1


@pytest.mark.parametrize(
    "family,rank,orientation",
    [
        ("A", 2, "default"),
        ("A", 3, "default"),
        ("A", 4, "default"),
        ("A", 3, [(2, 1), (2, 3)]),
        ("D", 4, "default"),
        ("D", 4, [(3, 1), (3, 2), (4, 3)]),
        ("D", 5, "default"),
    ],
)
def test_hom_table_matches_brute_force(family, rank, orientation):
    q = build_quiver(family, rank, orientation)
    ar = knit(q)
    reps = {m.mid: indecomposable_rep(q, m.dim) for m in ar.indecs}
    for x in ar.indecs:
        for y in ar.indecs:
            assert ar.hom_dim(x.mid, y.mid) == brute_force_hom_dim(reps[x.mid], reps[y.mid]), (
                f"Hom({x}, {y}) disagrees"
            )


def test_rejects_non_roots():
    q = build_quiver("A", 3)
    with pytest.raises(ValueError):
        indecomposable_rep(q, (1, 0, 1))
    with pytest.raises(ValueError):
        indecomposable_rep(q, (0, 0, 0))
    with pytest.raises(ValueError):
        indecomposable_rep(q, (2, 1, 0))
