import math

import pytest

from ap3lattice.errors import DomainError
from ap3lattice.poset import ideal_to_antichain, join_irreducibles, order_ideals
from ap3lattice.tableaux import Shape, Tableau, _mn_flats, has_unique_reducible_at, in_Mn, tableau_poset
from ap3lattice.triple_posets import (
    antichain_to_system, build_Phin, build_Pn, build_Qn, ideal_to_tableau, is_Pn_element, phi,
    phi_inverse, phin_elements, pn_elements, psi,
)
from ap3lattice.triples import enumerate_valid


def test_small_posets():
    assert pn_elements(4) == [(1, 2, 4), (1, 3, 3), (1, 3, 4), (2, 2, 4)]
    assert sorted(phin_elements(4)) == sorted([(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 2, 2)])
    assert phin_elements(3) == [(1, 1, 1)]
    assert build_Pn(2).size == 0 and build_Phin(2).size == 0
    assert len(order_ideals(build_Pn(2))) == 1


@pytest.mark.parametrize("n", range(2, 11))
def test_sizes(n):
    assert build_Pn(n).size == build_Phin(n).size == math.comb(n, 3)


def test_phi_and_psi_examples():
    assert phi((1, 1, 1), 4) == (1, 3, 4)
    assert phi((1, 2, 2), 4) == (2, 2, 4)
    assert psi((1, 1, 1), 4).rows == ((2, 2), (3,))
    assert psi((1, 2, 2), 4).rows == ((1, 3), (2,))
    with pytest.raises(DomainError):
        phi((1, 3, 1), 4)
    with pytest.raises(DomainError):
        phi_inverse((1, 1, 1), 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_phi_is_order_isomorphism(n):
    F, P = build_Phin(n), build_Pn(n)
    index = {x: t for t, x in enumerate(P.labels)}
    img = [index[phi(e, n)] for e in F.labels]
    assert sorted(img) == list(range(P.size))
    for i in range(F.size):
        assert phi_inverse(P.labels[img[i]], n) == F.labels[i]
        for j in range(F.size):
            assert F.leq(i, j) == P.leq(img[i], img[j])


@pytest.mark.parametrize("n", range(2, 9))
def test_psi_images_have_one_reducible_entry(n):
    for e in phin_elements(n):
        t = psi(e, n)
        assert in_Mn(t, n) and has_unique_reducible_at(t, n, e.a, e.b)


@pytest.mark.parametrize("n", range(2, 7))
def test_psi_image_is_join_irreducibles_of_Mn(n):
    shape = Shape.staircase(n - 1)
    lattice = tableau_poset([Tableau.from_flat(shape, f) for f in _mn_flats(n)])
    ji = set(join_irreducibles(lattice)[0].labels) if lattice.size > 1 else set()
    assert ji == {psi(e, n) for e in phin_elements(n)}
    q = build_Qn(n)
    assert q.size == len(ji)


@pytest.mark.parametrize("n", range(2, 8))
def test_antichains_are_valid_systems(n):
    p = build_Pn(n)
    fam = {antichain_to_system([p.labels[x] for x in ideal_to_antichain(p, m)], n) for m in order_ideals(p).masks()}
    assert fam == set(enumerate_valid(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_birkhoff_map_is_bijective(n):
    p = build_Pn(n)
    imgs = {ideal_to_tableau([p.labels[x] for x in ideal], n).flat() for ideal in order_ideals(p)}
    assert imgs == set(_mn_flats(n))


def test_membership_predicates():
    assert is_Pn_element((1, 2, 4), 4) and not is_Pn_element((1, 2, 3), 4)
