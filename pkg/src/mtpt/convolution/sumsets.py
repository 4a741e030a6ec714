"""Dense integer sets, sumsets and subset sums.

Sets are dense membership bitmaps over ``[0, cap]`` stored in a Python int
(bit ``x`` set iff ``x`` is a member), so a shifted OR runs at machine-word
speed.  ``sumset`` decomposes the shorter operand into runs of consecutive
members and dilates the other operand by each run with doubling shifts; when
that would take more shifts than an FFT costs, it switches to a float FFT
convolution.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

# Shifted ORs that cost about as much as one FFT boolean convolution of the
# same width (measured on CPython ints vs numpy.fft).
FFT_BREAK_EVEN = 1024


def low_mask(t: int) -> int:
    """Bitmap of ``[0, t]``; empty for ``t < 0``."""
    return (1 << (t + 1)) - 1 if t >= 0 else 0


def bits_to_array(bits: int, length: int) -> np.ndarray:
    """Boolean membership array of ``bits`` restricted to ``[0, length)``."""
    if length <= 0:
        return np.zeros(0, dtype=bool)
    bits &= (1 << length) - 1
    raw = np.frombuffer(bits.to_bytes((length + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, count=length, bitorder="little").view(bool)


def array_to_bits(members: np.ndarray) -> int:
    packed = np.packbits(np.asarray(members, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


class MemberSet:
    """A finite set of nonnegative integers with no further invariant."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("membership bitmap must be nonnegative")
        self.bits = bits

    @classmethod
    def from_members(cls, members: Iterable[int]) -> "MemberSet":
        bits = 0
        for x in members:
            if x < 0:
                raise ValueError(f"negative member {x}")
            bits |= 1 << int(x)
        return cls(bits)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and (self.bits >> x) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MemberSet):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        shown = self.members()
        if len(shown) > 12:
            return f"{type(self).__name__}(<{len(shown)} members, max {shown[-1]}>)"
        return f"{type(self).__name__}({{{', '.join(map(str, shown))}}})"

    def members(self) -> list[int]:
        return np.flatnonzero(bits_to_array(self.bits, self.bits.bit_length())).tolist()

    def max(self) -> int | None:
        return self.bits.bit_length() - 1 if self.bits else None


class SumSet(MemberSet):
    """Achievable loads in ``[0, cap]``; always contains 0."""

    __slots__ = ("cap",)

    def __init__(self, bits: int, cap: int):
        super().__init__(bits)
        if cap < 0:
            raise ValueError("cap must be >= 0")
        if not bits & 1:
            raise ValueError("a SumSet must contain 0")
        if bits.bit_length() > cap + 1:
            raise ValueError(f"member {bits.bit_length() - 1} exceeds cap {cap}")
        self.cap = cap

    @classmethod
    def from_members(cls, members: Iterable[int], cap: int) -> "SumSet":
        return cls(MemberSet.from_members(members).bits | 1, cap)

    @classmethod
    def zero(cls, cap: int = 0) -> "SumSet":
        return cls(1, cap)

    def union(self, other: MemberSet) -> "SumSet":
        bits = self.bits | other.bits
        if bits.bit_length() > self.cap + 1:
            bits &= low_mask(self.cap)
        return SumSet(bits, self.cap)

    def trim(self, t: int) -> "SumSet":
        """Drop members above ``t`` (``t >= 0``); the cap is kept."""
        if self.bits.bit_length() <= t + 1:
            return self
        return SumSet(self.bits & low_mask(t), self.cap)


def _runs(bits: int) -> tuple[list[int], list[int]]:
    """Start positions and lengths of the maximal runs of set bits."""
    starts = bits & ~(bits << 1)
    if starts.bit_count() <= 16:
        ends = bits & ~(bits >> 1)
        out_starts, out_lengths = [], []
        while starts:
            first = (starts & -starts).bit_length() - 1
            last = (ends & -ends).bit_length() - 1
            out_starts.append(first)
            out_lengths.append(last - first + 1)
            starts &= starts - 1
            ends &= ends - 1
        return out_starts, out_lengths
    arr = bits_to_array(bits, bits.bit_length()).astype(np.int8)
    edges = np.diff(arr, prepend=0, append=0)
    first = np.flatnonzero(edges == 1)
    return first.tolist(), (np.flatnonzero(edges == -1) - first).tolist()


def _dilate(bits: int, length: int) -> int:
    """``bits`` OR-ed with its shifts by ``1 .. length - 1``."""
    covered = 1
    while covered < length:
        step = min(covered, length - covered)
        bits |= bits << step
        covered += step
    return bits


def _shift_cost(lengths: list[int]) -> int:
    return len(lengths) + sum((n - 1).bit_length() for n in lengths)


def _fft_or_convolve(a: int, b: int, cap: int) -> int:
    la, lb = a.bit_length(), b.bit_length()
    size = la + lb - 1
    nfft = 1 << (size - 1).bit_length()
    fa = np.fft.rfft(bits_to_array(a, la).astype(np.float64), nfft)
    fb = np.fft.rfft(bits_to_array(b, lb).astype(np.float64), nfft)
    counts = np.fft.irfft(fa * fb, nfft)[: min(size, cap + 1)]
    return array_to_bits(counts > 0.5)


def or_convolve(a: int, b: int, cap: int, method: str = "auto") -> int:
    """Bitmap of ``{x + y <= cap : x in a, y in b}``.

    ``method`` is ``"auto"``, ``"shift"`` or ``"fft"``; all give the same set.
    """
    if cap < 0 or not a or not b:
        return 0
    if a.bit_length() > cap + 1:
        a &= low_mask(cap)
    if b.bit_length() > cap + 1:
        b &= low_mask(cap)
    if a.bit_length() < b.bit_length():
        a, b = b, a
    if method == "fft":
        return _fft_or_convolve(a, b, cap)
    if b == 1:
        return a
    starts, lengths = _runs(b)
    if method == "auto" and _shift_cost(lengths) > FFT_BREAK_EVEN:
        return _fft_or_convolve(a, b, cap)
    out = 0
    for start, length in zip(starts, lengths):
        part = a if a.bit_length() <= cap - start + 1 else a & low_mask(cap - start)
        out |= _dilate(part, length) << start
    return out if out.bit_length() <= cap + 1 else out & low_mask(cap)


def sumset(a: MemberSet, b: MemberSet, cap: int) -> MemberSet:
    """``{x + y : x in a, y in b, x + y <= cap}``.

    The result is a :class:`SumSet` when both operands contain 0.
    """
    bits = or_convolve(a.bits, b.bits, cap)
    if bits & 1:
        return SumSet(bits, cap)
    return MemberSet(bits)


def _subset_sum_bits(values: list[int], cap: int) -> int:
    if len(values) <= 8:
        bits = 1
        for v in values:
            bits |= bits << v
        return bits if bits.bit_length() <= cap + 1 else bits & low_mask(cap)
    half = len(values) // 2
    return or_convolve(_subset_sum_bits(values[:half], cap), _subset_sum_bits(values[half:], cap), cap)


def subset_sums(values: Iterable[int], cap: int) -> SumSet:
    """All sub-multiset sums of ``values`` that do not exceed ``cap``."""
    if cap < 0:
        raise ValueError("cap must be >= 0")
    vals = []
    for v in values:
        v = int(v)
        if v < 1:
            raise ValueError(f"subset_sums needs positive values, got {v}")
        if v <= cap:
            vals.append(v)
    return SumSet(_subset_sum_bits(vals, cap), cap)


def prefix(s: SumSet, t: int) -> MemberSet:
    """Members ``<= t``; a :class:`SumSet` for ``t >= 0``, an empty raw set otherwise."""
    if t < 0:
        return MemberSet(0)
    return s.trim(t)


def suffix(s: MemberSet, t: int) -> MemberSet:
    """Members ``> t`` as a raw set (it never contains 0 for ``t >= 0``)."""
    if t < 0:
        return MemberSet(s.bits)
    return MemberSet((s.bits >> (t + 1)) << (t + 1))
