"""Red/blue colouring of due dates and bundle construction."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..instance import Instance


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class Coloring:
    """Red due-date indices plus the bundles as inclusive ``(k, m)`` runs.

    Indices are 0-based positions in ``Instance.due_dates``.  ``threshold``
    is ``floor(P ** (1 - delta))``; a group is red iff its load exceeds it.
    Every index is either red or in exactly one bundle.
    """

    n_dues: int
    red: tuple[int, ...]
    bundles: tuple[tuple[int, int], ...]
    threshold: int

    @property
    def colors(self) -> tuple[Color, ...]:
        out = [Color.BLUE] * self.n_dues
        for i in self.red:
            out[i] = Color.RED
        return tuple(out)

    @property
    def red_count(self) -> int:
        return len(self.red)

    @property
    def bundle_count(self) -> int:
        return len(self.bundles)

    def steps(self) -> list[tuple[int, int, bool]]:
        """``(k, i, is_red)`` for each due date that does work, in increasing ``i``.

        Red due dates appear as ``(i, i, True)``; a bundle appears once, at
        its end.  Blue due dates inside a bundle produce no step.
        """
        out = [(i, i, True) for i in self.red] + [(k, m, False) for k, m in self.bundles]
        out.sort(key=lambda step: step[1])
        return out


def as_fraction(value) -> Fraction:
    """Parse ``1/2``-style strings, ints, floats and Fractions."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(str(value)).limit_denominator(1000)
    return Fraction(value)


def check_delta(delta) -> Fraction:
    delta = as_fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return delta


def choose_delta(alpha) -> Fraction:
    """Bundle parameter ``1 - 1/alpha`` for a convolution exponent ``alpha``."""
    alpha = as_fraction(alpha)
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    return 1 - 1 / alpha


def iroot(n: int, k: int) -> int:
    """Largest integer ``r`` with ``r ** k <= n``."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def load_threshold(total_load: int, delta) -> int:
    """``floor(P ** (1 - delta))`` in exact integer arithmetic.

    For an integer load ``L``, ``L > P ** (1 - delta)`` iff ``L`` exceeds this
    value, so the red test is exact.
    """
    exponent = 1 - check_delta(delta)
    return iroot(total_load ** exponent.numerator, exponent.denominator)


def color_and_bundle(instance: Instance, delta) -> Coloring:
    """Colour heavy groups red and bundle the rest from the right.

    Starting from the largest uncoloured index ``m``, the bundle reaches left
    to the smallest ``k`` such that ``k..m`` holds no red index and the
    group loads of ``k..m`` sum to at most the threshold.  ``(m, m)`` always
    qualifies since a non-red group is under the threshold on its own.
    """
    tau = load_threshold(instance.total_load, delta)
    loads = instance.loads_array
    prefix = instance.prefix_loads
    red = loads > tau
    red_idx = np.flatnonzero(red)

    bundles = []
    m = instance.n_dues - 1
    while m >= 0:
        if red[m]:
            m -= 1
            continue
        pos = np.searchsorted(red_idx, m)
        after_red = int(red_idx[pos - 1]) + 1 if pos > 0 else 0
        by_load = int(np.searchsorted(prefix, prefix[m + 1] - tau, side="left"))
        k = max(after_red, by_load)
        bundles.append((k, m))
        m = k - 1
    bundles.reverse()
    return Coloring(instance.n_dues, tuple(red_idx.tolist()), tuple(bundles), tau)
