"""Frame lattice laws and degree parsing."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzybig import TWO_POINT, UNIT_INTERVAL, chain, frame_from_name, join_all, meet
from fuzzybig.errors import FrameMismatchError

CHAIN5 = chain(5)

unit_values = st.fractions(min_value=0, max_value=1, max_denominator=32).map(
    UNIT_INTERVAL.value
)
two_point_values = st.booleans().map(TWO_POINT.value)
chain_values = st.integers(min_value=0, max_value=4).map(CHAIN5.value)

any_frame_values = st.one_of(unit_values, two_point_values, chain_values)


def same_frame_triples():
    return st.one_of(
        st.tuples(unit_values, unit_values, unit_values),
        st.tuples(two_point_values, two_point_values, two_point_values),
        st.tuples(chain_values, chain_values, chain_values),
    )


def test_meet_on_unit_interval_is_min():
    assert meet(d("3/10"), d("7/10")) == d("3/10")


def test_top_is_identity_for_meet():
    for frame in (UNIT_INTERVAL, TWO_POINT, CHAIN5):
        x = frame.bottom.join(frame.top.meet(frame.bottom))
        assert frame.top.meet(x) == x
    assert UNIT_INTERVAL.top.meet(d("2/5")) == d("2/5")


def test_two_point_meet_of_top_and_bottom_is_bottom():
    assert TWO_POINT.top.meet(TWO_POINT.bottom) == TWO_POINT.bottom


def test_join_all_on_unit_interval_is_max():
    xs = [d("1/5"), d("9/10"), d("1/2")]
    assert join_all(xs) == d("9/10")


def test_join_all_of_empty_is_bottom():
    assert join_all([], frame=UNIT_INTERVAL) == UNIT_INTERVAL.bottom
    with pytest.raises(ValueError):
        join_all([])


def test_join_all_on_chain():
    assert CHAIN5.join_all([CHAIN5.value(1), CHAIN5.value(3)]) == CHAIN5.value(3)


def d(text):
    return UNIT_INTERVAL.parse_degree(text)


@given(same_frame_triples())
def test_meet_distributes_over_join(xs):
    x, y, z = xs
    frame = x.frame
    left = x.meet(frame.join_all([y, z]))
    right = frame.join_all([x.meet(y), x.meet(z)])
    assert left == right


@given(same_frame_triples())
def test_meet_join_associative_commutative_idempotent(xs):
    x, y, z = xs
    assert x.meet(y.meet(z)) == x.meet(y).meet(z)
    assert x.join(y.join(z)) == x.join(y).join(z)
    assert x.meet(y) == y.meet(x)
    assert x.join(y) == y.join(x)
    assert x.meet(x) == x
    assert x.join(x) == x


@given(same_frame_triples())
def test_order_characterisations_agree(xs):
    x, y, _ = xs
    assert x.leq(y) == (x.meet(y) == x)
    assert x.leq(y) == (x.join(y) == y)


@given(any_frame_values)
def test_bounds(x):
    frame = x.frame
    assert frame.bottom.leq(x)
    assert x.leq(frame.top)


def test_mixed_frames_rejected():
    with pytest.raises(FrameMismatchError):
        UNIT_INTERVAL.top.meet(TWO_POINT.top)
    with pytest.raises(FrameMismatchError):
        CHAIN5.value(2).join(UNIT_INTERVAL.value(Fraction(1, 2)))
    with pytest.raises(FrameMismatchError):
        UNIT_INTERVAL.join_all([TWO_POINT.top])


def test_degree_parsing_is_exact():
    assert d("3/10") == d("0.3")
    assert d("0.3").raw == Fraction(3, 10)
    assert UNIT_INTERVAL.format_degree(d("0.3")) == "3/10"
    assert UNIT_INTERVAL.format_degree(d("1")) == "1"


def test_degree_out_of_range_rejected():
    with pytest.raises(ValueError):
        UNIT_INTERVAL.parse_degree("1.2")
    with pytest.raises(ValueError):
        UNIT_INTERVAL.parse_degree("-1/2")
    with pytest.raises(ValueError):
        CHAIN5.parse_degree("5")
    with pytest.raises(ValueError):
        TWO_POINT.parse_degree("2")


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        UNIT_INTERVAL.value(0.3)


def test_frame_names_round_trip():
    for frame in (UNIT_INTERVAL, TWO_POINT, chain(7)):
        assert frame_from_name(frame.name) == frame
    with pytest.raises(ValueError):
        frame_from_name("lattice:oops")
    with pytest.raises(ValueError):
        frame_from_name("chain:x")
