import math
import random
from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from pgonal.degeneration import (
    ChainDecomposition,
    QuotientPiece,
    class_stabilizer,
    collar_bound,
    curve_monodromy,
    lift_piece,
    node_multiplicity,
    p_class,
    p_labels,
    p_piece_shape,
    pinch_chain,
)
from pgonal.errors import InconsistentPiece, InvalidOrder, OutOfRange, TooShort, ZeroExponent
from pgonal.monodromy import genus_of, validate
from pgonal.oracle import pclass_orbit_bruteforce
from pgonal.strata import enumerate_strata


def test_curve_monodromy():
    assert curve_monodromy(validate(5, (1, 1, 1, 2)), 2) == 2
    assert curve_monodromy(validate(3, (1, 1, 1, 2, 2, 2)), 3) == 0
    assert curve_monodromy(validate(5, (1, 2, 3, 4)), 2) == 3
    with pytest.raises(OutOfRange):
        curve_monodromy(validate(5, (1, 2, 3, 4)), 3)


def test_node_multiplicity():
    assert node_multiplicity(0, 3) == 3
    assert node_multiplicity(2, 5) == 1
    assert node_multiplicity(0, 5) == 5


def disk(cones, p):
    return QuotientPiece(boundary=((0, -sum(cones) % p),), cones=tuple(cones))


@pytest.mark.parametrize(
    "piece,p,shape,name",
    [
        (disk((1, 1), 3), 3, (1, 1), "Q"),
        (QuotientPiece(boundary=((0, 0), (1, 2)), cones=(1,)), 3, (0, 4), "X"),
        (QuotientPiece(boundary=((0, 1), (1, 1)), cones=(1,)), 3, (1, 2), "α"),
        (disk((1, 2), 3), 3, (0, 3), "Y"),
        (disk((1, 4), 5), 5, (0, 5), "P(4)"),
        (disk((1, 1), 5), 5, (2, 1), "P(1)"),
    ],
)
def test_lift_piece(piece, p, shape, name):
    (comp,) = lift_piece(piece, p)
    assert (comp.genus, comp.cusps) == shape
    assert comp.name == name


def test_lift_piece_rejects_inconsistent_monodromy():
    with pytest.raises(InconsistentPiece):
        lift_piece(QuotientPiece(boundary=((0, 1),), cones=(1, 1)), 5)


def test_unbranched_annulus_lifts_to_p_annuli():
    comps = lift_piece(QuotientPiece(boundary=((0, 0), (1, 0)), cones=()), 5)
    assert len(comps) == 5
    assert all((c.genus, c.cusps) == (0, 2) for c in comps)


@pytest.mark.parametrize(
    "p,js,chain",
    [
        (3, (1, 1, 1, 2, 2, 2), "Q -1- X -3- X -1- Q"),
        (5, (1, 1, 1, 2), "P(1) -1- P(2)"),
        (5, (1, 4, 1, 4), "P(4) -5- P(4)"),
    ],
)
def test_pinch_chain(p, js, chain):
    surface = pinch_chain(validate(p, js))
    assert surface.chain_string() == chain
    assert surface.arithmetic_genus == genus_of(p, len(js))


def test_pinch_chain_needs_four_points():
    with pytest.raises(TooShort):
        pinch_chain(validate(5, (1, 2, 2)))


def _valid_ordered(p, r):
    for head in product(range(1, p), repeat=r - 1):
        last = -sum(head) % p
        if last:
            yield head + (last,)


@pytest.mark.parametrize(
    "p,r",
    [(p, r) for p in (3, 5, 7) for r in range(4, 9) if (p - 1) ** (r - 1) <= 50_000] + [(11, 4), (11, 5)],
)
def test_arithmetic_genus_conserved_on_all_ordered_tuples(p, r):
    g = genus_of(p, r)
    for js in _valid_ordered(p, r):
        assert pinch_chain(validate(p, js)).arithmetic_genus == g


@pytest.mark.parametrize("p,r", [(5, 8), (7, 7), (7, 8), (11, 6), (11, 7), (11, 8)])
def test_arithmetic_genus_conserved_on_every_stratum(p, r):
    rng = random.Random(p * 100 + r)
    g = genus_of(p, r)
    for s in enumerate_strata(p, r):
        js = list(s.canonical)
        for _ in range(3):
            rng.shuffle(js)
            assert pinch_chain(validate(p, js)).arithmetic_genus == g


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_riemann_hurwitz_bookkeeping(p):
    # every chain piece, summed over components, has Euler characteristic p * chi_orb
    for s in enumerate_strata(p, 5):
        for piece in ChainDecomposition.of(s.tuple).pieces():
            comps = lift_piece(piece, p)
            total = sum(2 - 2 * c.genus - c.cusps for c in comps)
            assert Fraction(total) == p * piece.orbifold_euler(p)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_r4_boundary_class_independent_of_ordering(p):
    for s in enumerate_strata(p, 4):
        ms = s.canonical
        seen = {}
        for order in permutations(range(4)):
            js = tuple(ms[i] for i in order)
            split = frozenset({frozenset(order[:2]), frozenset(order[2:])})
            surface = pinch_chain(validate(p, js))
            key = (tuple(sorted(surface.labels)), surface.multiplicities)
            assert seen.setdefault(split, key) == key


@pytest.mark.parametrize("a,b,p,j", [(1, 1, 5, 1), (3, 4, 5, 2), (2, 3, 5, 4), (1, 2, 5, 2), (1, 3, 5, 2)])
def test_p_class(a, b, p, j):
    assert p_class(a, b, p) == j


def test_p_class_rejects_zero():
    with pytest.raises(ZeroExponent):
        p_class(0, 1, 5)


def test_genus_four_piece_lists():
    # the three orbit lists of pairs for the quintic pieces
    assert {p_class(a, b, 5) for a, b in [(1, 1), (4, 4)]} == {1}
    assert {p_class(a, b, 5) for a, b in [(1, 2), (1, 3), (2, 4), (3, 4)]} == {2}
    assert {p_class(a, b, 5) for a, b in [(1, 4), (2, 3)]} == {4}


pairs = st.sampled_from([3, 5, 7, 11, 13, 17, 19]).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1), st.integers(1, p - 1), st.integers(1, p - 1))
)


@given(pairs)
def test_p_class_invariances(pabc):
    p, a, b, c = pabc
    j = p_class(a, b, p)
    assert p_class(c * a, c * b, p) == j
    assert p_class(b, a, p) == j


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_number_of_p_labels(p):
    orbits = pclass_orbit_bruteforce(p)
    assert len(p_labels(p)) == len(orbits) == (p + 1) // 2
    for block in orbits.blocks:
        assert len({p_class(a, b, p) for a, b in block}) == 1


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_p_minus_one_is_the_unique_sphere(p):
    for j in p_labels(p):
        (comp,) = lift_piece(disk((1, j), p), p)
        assert (comp.genus, comp.cusps) == p_piece_shape(j, p)
        if j == p - 1:
            assert (1 + j) % p == 0 and comp.genus == 0 and comp.cusps == p
        else:
            assert comp.genus == (p - 1) // 2 and comp.cusps == 1


@pytest.mark.parametrize(
    "a,b,p,expected",
    [
        (1, 1, 5, {(1, "id"), (1, "swap")}),
        (1, 2, 5, {(1, "id")}),
        (1, 4, 5, {(1, "id"), (4, "swap")}),
    ],
)
def test_class_stabilizer(a, b, p, expected):
    assert class_stabilizer(a, b, p) == expected


def _closed_form_collar(d):
    x = 1 / math.sin(2 * math.pi / d)
    return 2 * math.log(x + math.sqrt(max(0.0, x * x - 1)))


def test_collar_bound_values():
    assert collar_bound(3) == pytest.approx(math.log(3), abs=1e-12)
    assert collar_bound(5) == pytest.approx(0.6389165, abs=1e-7)
    assert collar_bound(4) == 0.0
    for d in range(3, 60):
        assert collar_bound(d) == pytest.approx(_closed_form_collar(d), abs=1e-9)


def test_collar_bound_positive_and_increasing_past_four():
    assert all(collar_bound(d) > 0 for d in range(3, 200) if d != 4)
    # sin(2 pi / d) falls with d once d >= 4, so the bound grows
    values = [collar_bound(d) for d in range(4, 200)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_collar_bound_invalid_order():
    with pytest.raises(InvalidOrder):
        collar_bound(2)
