"""Frame lattices carrying every degree in the model.

A frame is a partially ordered set with all joins, finite meets, and meet
distributing over join.  Everything in this package only ever takes finite
joins, so three concrete bounded chains cover all uses:

* ``unit-interval`` -- exact rationals in [0, 1], the default carrier;
* ``two-point``     -- the Boolean lattice {bottom, top}, bridging the
  crisp structures;
* ``chain:<n>``     -- the finite chain 0 < 1 < ... < n-1.

Unit-interval degrees are ``fractions.Fraction`` values, never floats, so
every lattice law checked by the test suite is an exact equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import FrameMismatchError


class FrameValue:
    """An element of a frame, tagged with the frame it belongs to.

    Values are immutable and only combine with values of the same frame;
    mixing frames raises :class:`FrameMismatchError`.
    """

    __slots__ = ("frame", "raw")

    def __init__(self, frame: "Frame", raw):
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FrameValue is immutable")

    def meet(self, other: "FrameValue") -> "FrameValue":
        """Greatest lower bound of ``self`` and ``other``."""
        self.frame.check_value(other)
        return self.frame.value(self.frame._meet(self.raw, other.raw))

    def join(self, other: "FrameValue") -> "FrameValue":
        """Least upper bound of ``self`` and ``other``."""
        self.frame.check_value(other)
        return self.frame.value(self.frame._join(self.raw, other.raw))

    def leq(self, other: "FrameValue") -> bool:
        """Lattice order: true iff ``self`` lies below ``other``."""
        self.frame.check_value(other)
        return self.frame._leq(self.raw, other.raw)

    def is_bottom(self) -> bool:
        return self.raw == self.frame._bottom_raw()

    def is_top(self) -> bool:
        return self.raw == self.frame._top_raw()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FrameValue)
            and self.frame == other.frame
            and self.raw == other.raw
        )

    def __hash__(self) -> int:
        return hash((self.frame, self.raw))

    def __repr__(self) -> str:
        return f"{self.frame._format(self.raw)}[{self.frame.name}]"


class Frame:
    """A bounded distributive lattice of degrees.

    All shipped instances are chains, which trivially satisfy the frame
    distributivity law; the subclass hooks would equally support richer
    lattices.
    """

    name: str = "?"

    # --- subclass hooks -------------------------------------------------
    def _contains(self, raw) -> bool:
        raise NotImplementedError

    def _coerce(self, raw):
        return raw

    def _leq(self, a, b) -> bool:
        raise NotImplementedError

    def _meet(self, a, b):
        return a if self._leq(a, b) else b

    def _join(self, a, b):
        return b if self._leq(a, b) else a

    def _bottom_raw(self):
        raise NotImplementedError

    def _top_raw(self):
        raise NotImplementedError

    def _parse(self, text: str):
        raise NotImplementedError

    def _format(self, raw) -> str:
        raise NotImplementedError

    # --- public surface ---------------------------------------------------
    def value(self, raw) -> FrameValue:
        """Wrap a raw carrier element, rejecting anything off the carrier."""
        raw = self._coerce(raw)
        if not self._contains(raw):
            raise ValueError(f"{raw!r} is not a degree of frame {self.name}")
        return FrameValue(self, raw)

    @property
    def bottom(self) -> FrameValue:
        return FrameValue(self, self._bottom_raw())

    @property
    def top(self) -> FrameValue:
        return FrameValue(self, self._top_raw())

    def check_value(self, v: FrameValue) -> None:
        if not isinstance(v, FrameValue) or v.frame != self:
            got = getattr(getattr(v, "frame", None), "name", type(v).__name__)
            raise FrameMismatchError(
                f"expected a degree of frame {self.name}, got one of {got}"
            )

    def meet(self, a: FrameValue, b: FrameValue) -> FrameValue:
        self.check_value(a)
        return a.meet(b)

    def join(self, a: FrameValue, b: FrameValue) -> FrameValue:
        self.check_value(a)
        return a.join(b)

    def join_all(self, values: Iterable[FrameValue]) -> FrameValue:
        """Least upper bound of a finite collection; empty yields bottom."""
        out = self.bottom
        for v in values:
            self.check_value(v)
            out = out.join(v)
        return out

    def leq(self, a: FrameValue, b: FrameValue) -> bool:
        self.check_value(a)
        return a.leq(b)

    def parse_degree(self, text: str) -> FrameValue:
        if not isinstance(text, str):
            raise ValueError(f"degree must be a string, got {text!r}")
        return self.value(self._parse(text))

    def format_degree(self, v: FrameValue) -> str:
        self.check_value(v)
        return self._format(v.raw)

    def __eq__(self, other) -> bool:
        return isinstance(other, Frame) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"Frame({self.name})"


class UnitIntervalFrame(Frame):
    """Exact rationals in [0, 1] under the usual order."""

    name = "unit-interval"

    def _coerce(self, raw):
        if isinstance(raw, float):
            raise TypeError(
                "unit-interval degrees are exact rationals; pass a Fraction, "
                "int or string, not a float"
            )
        if isinstance(raw, bool):
            raise TypeError("unit-interval degrees are rationals, not booleans")
        if isinstance(raw, (int, str)):
            raw = Fraction(raw)
        return raw

    def _contains(self, raw) -> bool:
        return isinstance(raw, Fraction) and 0 <= raw <= 1

    def _leq(self, a, b) -> bool:
        return a <= b

    def _bottom_raw(self):
        return Fraction(0)

    def _top_raw(self):
        return Fraction(1)

    def _parse(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{text!r} is not an exact rational: {exc}") from exc

    def _format(self, raw) -> str:
        return str(raw)


class TwoPointFrame(Frame):
    """The Boolean lattice: bottom < top."""

    name = "two-point"

    def _coerce(self, raw):
        if isinstance(raw, bool):
            return raw
        if raw in (0, 1):
            return bool(raw)
        return raw

    def _contains(self, raw) -> bool:
        return isinstance(raw, bool)

    def _leq(self, a, b) -> bool:
        return (not a) or b

    def _bottom_raw(self):
        return False

    def _top_raw(self):
        return True

    def _parse(self, text: str):
        if text == "0":
            return False
        if text == "1":
            return True
        raise ValueError(f"two-point degree must be '0' or '1', got {text!r}")

    def _format(self, raw) -> str:
        return "1" if raw else "0"


class FiniteChainFrame(Frame):
    """The chain 0 < 1 < ... < n-1."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("a finite chain needs at least two elements")
        self.size = n
        self.name = f"chain:{n}"

    def _contains(self, raw) -> bool:
        return isinstance(raw, int) and not isinstance(raw, bool) and 0 <= raw < self.size

    def _leq(self, a, b) -> bool:
        return a <= b

    def _bottom_raw(self):
        return 0

    def _top_raw(self):
        return self.size - 1

    def _parse(self, text: str):
        try:
            return int(text)
        except ValueError as exc:
            raise ValueError(f"{text!r} is not a chain element") from exc

    def _format(self, raw) -> str:
        return str(raw)


UNIT_INTERVAL = UnitIntervalFrame()
TWO_POINT = TwoPointFrame()

_CHAINS: dict[int, FiniteChainFrame] = {}


def chain(n: int) -> FiniteChainFrame:
    """The finite chain frame with ``n`` elements (cached)."""
    if n not in _CHAINS:
        _CHAINS[n] = FiniteChainFrame(n)
    return _CHAINS[n]


def frame_from_name(name: str) -> Frame:
    """Resolve the serialized frame names: unit-interval | two-point | chain:<n>."""
    if name == UNIT_INTERVAL.name:
        return UNIT_INTERVAL
    if name == TWO_POINT.name:
        return TWO_POINT
    if name.startswith("chain:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"malformed chain frame name {name!r}") from None
        return chain(n)
    raise ValueError(f"unknown frame {name!r}")


def meet(a: FrameValue, b: FrameValue) -> FrameValue:
    return a.meet(b)


def join(a: FrameValue, b: FrameValue) -> FrameValue:
    return a.join(b)


def join_all(values: Iterable[FrameValue], frame: Frame | None = None) -> FrameValue:
    """Join of a finite collection.

    An empty collection is permitted when ``frame`` says which bottom to
    return.
    """
    values = list(values)
    if frame is None:
        if not values:
            raise ValueError("join_all of an empty collection needs an explicit frame")
        frame = values[0].frame
    return frame.join_all(values)
