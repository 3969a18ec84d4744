import pytest
from hypothesis import given, strategies as st

from pgonal.errors import NotRamifiedOverSphere, SumNotZero, TooShort, WrongModulus, ZeroExponent
from pgonal.monodromy import (
    SignedCounts,
    admissible_mplus_set,
    branch_count,
    genus_of,
    signed_counts,
    trigonal_tuple,
    validate,
)


def test_validate_accepts_type_one_data():
    t = validate(5, (1, 1, 1, 2))
    assert t.r == 4 and t.genus == 4


def test_validate_normalizes():
    assert validate(5, (6, -4, 11, 7)).exponents == (1, 1, 1, 2)


def test_validate_errors():
    with pytest.raises(SumNotZero) as exc:
        validate(5, (1, 1, 1, 1))
    assert exc.value.total == 4
    with pytest.raises(TooShort):
        validate(3, (1, 2))
    with pytest.raises(ZeroExponent) as exc:
        validate(5, (1, 5, 4, 0))
    assert exc.value.index == 2


@pytest.mark.parametrize("p,r,g", [(5, 4, 4), (11, 4, 10), (3, 7, 5), (3, 3, 1), (7, 5, 9)])
def test_genus_of(p, r, g):
    assert genus_of(p, r) == g


def test_genus_of_trigonal_is_r_minus_two():
    assert all(genus_of(3, r) == r - 2 for r in range(3, 40))


def test_branch_count():
    assert branch_count(5, 4) == 4
    assert branch_count(3, 5) == 7
    with pytest.raises(NotRamifiedOverSphere):
        branch_count(5, 3)


@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(2, 200))
def test_genus_branch_count_roundtrip(p, g):
    try:
        r = branch_count(p, g)
    except NotRamifiedOverSphere:
        assert (2 * g) % (p - 1)
        return
    assert genus_of(p, r) == g


def test_signed_counts():
    assert signed_counts(validate(3, (1, 1, 1, 1, 1, 2, 2))) == SignedCounts(5, 2)
    assert signed_counts(validate(3, (1, 1, 1))) == SignedCounts(3, 0)
    assert signed_counts(validate(3, (2, 2, 2))) == SignedCounts(0, 3)
    with pytest.raises(SumNotZero):
        validate(3, (1, 1, 1, 1, 1, 1, 2, 2))
    with pytest.raises(WrongModulus):
        signed_counts(validate(5, (1, 1, 1, 2)))


@pytest.mark.parametrize("g,expected", [(5, {2, 5}), (6, {1, 4, 7}), (4, {0, 3, 6})])
def test_admissible_mplus_set(g, expected):
    assert admissible_mplus_set(g) == expected


@pytest.mark.parametrize("g", range(2, 40))
def test_admissible_set_matches_validation(g):
    allowed = admissible_mplus_set(g)
    for k in range(g + 3):
        if k in allowed:
            assert signed_counts(trigonal_tuple(g, k)).m_plus == k
        else:
            with pytest.raises(SumNotZero):
                trigonal_tuple(g, k)
    # m_plus = m_minus mod 3 is an equivalent description
    assert allowed == {k for k in range(g + 3) if (k - (g + 2 - k)) % 3 == 0}


@given(st.sampled_from([3, 5, 7, 11]), st.data())
def test_scaling_commutes_with_validation(p, data):
    head = data.draw(st.lists(st.integers(1, p - 1), min_size=2, max_size=7))
    last = -sum(head) % p
    c = data.draw(st.integers(1, p - 1))
    js = head + [last]
    scaled = [c * j % p for j in js]
    if last == 0:
        with pytest.raises(ZeroExponent):
            validate(p, scaled)
    else:
        assert validate(p, js).scaled(c) == validate(p, scaled)
