"""Max-min-skewed (MMS) convolution and its backends.

All backends compute

    C[k] = max over i of min(A[i], B[k - i] - i)

over the overlapping index range, with saturating sentinel arithmetic.  The
pure-Python :func:`mms_definitional` is the reference every backend must match
entry for entry.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Sequence

import numba
import numpy as np

from .extint import NEG_INF, POS_INF, as_level_vector, sat_sub, sat_sub_vector

# Sentinels minus any index stay beyond this; results are snapped back.
_SNAP = 1 << 61


class UnknownBackendError(ValueError):
    pass


def mms_definitional(a, b) -> np.ndarray:
    """Evaluate the MMS convolution directly from its definition."""
    A = as_level_vector(a).tolist()
    B = as_level_vector(b).tolist()
    la, lb = len(A), len(B)
    out = []
    for k in range(la + lb - 1):
        best = NEG_INF
        for i in range(max(0, k - lb + 1), min(k, la - 1) + 1):
            best = max(best, min(A[i], sat_sub(B[k - i], i)))
        out.append(best)
    return np.asarray(out, dtype=np.int64)


class MmsBackend(ABC):
    """A provider of MMS convolutions running in roughly ``n ** alpha`` time."""

    name: str
    alpha: Fraction

    @abstractmethod
    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """MMS convolution of two validated int64 level vectors."""

    def convolve_packed(self, buffer: np.ndarray, starts: np.ndarray) -> np.ndarray:
        """Fold consecutive vectors ``buffer[starts[j]:starts[j+1]]`` with MMS.

        The operation is associative, so any bracketing gives the same
        vector; this default splits at the index midpoint.
        """

        def fold(lo: int, hi: int) -> np.ndarray:
            if hi - lo == 1:
                return buffer[starts[lo] : starts[lo + 1]]
            mid = (lo + hi) // 2
            return self.convolve(fold(lo, mid), fold(mid, hi))

        count = len(starts) - 1
        if count < 1:
            raise ValueError("need at least one vector")
        return np.array(fold(0, count), dtype=np.int64)

    def convolve_many(self, vectors: Sequence[np.ndarray]) -> np.ndarray:
        vectors = [as_level_vector(v) for v in vectors]
        starts = np.zeros(len(vectors) + 1, dtype=np.int64)
        np.cumsum([v.size for v in vectors], out=starts[1:])
        return self.convolve_packed(np.concatenate(vectors), starts)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name!r} alpha={self.alpha}>"


@numba.njit(cache=True, nogil=True)
def _mms_into(a, b, out):
    la = a.shape[0]
    lb = b.shape[0]
    for k in range(la + lb - 1):
        out[k] = NEG_INF
    for i in range(la):
        ai = a[i]
        for j in range(lb):
            bj = b[j]
            if bj != NEG_INF and bj != POS_INF:
                bj -= i
            v = ai if ai < bj else bj
            if v > out[i + j]:
                out[i + j] = v


@numba.njit(cache=True, nogil=True)
def _mms_jit(a, b):
    out = np.empty(a.shape[0] + b.shape[0] - 1, dtype=np.int64)
    _mms_into(a, b, out)
    return out


@numba.njit(cache=True, nogil=True)
def _fold_jit(buffer, starts):
    # bottom-up pairing; valid because the convolution is associative
    count = starts.shape[0] - 1
    while count > 1:
        pairs = (count + 1) // 2
        new_starts = np.zeros(pairs + 1, dtype=np.int64)
        for q in range(pairs):
            size = starts[2 * q + 1] - starts[2 * q]
            if 2 * q + 1 < count:
                size += starts[2 * q + 2] - starts[2 * q + 1] - 1
            new_starts[q + 1] = new_starts[q] + size
        new_buffer = np.empty(new_starts[pairs], dtype=np.int64)
        for q in range(pairs):
            lo, mid = starts[2 * q], starts[2 * q + 1]
            dst = new_buffer[new_starts[q] : new_starts[q + 1]]
            if 2 * q + 1 < count:
                _mms_into(buffer[lo:mid], buffer[mid : starts[2 * q + 2]], dst)
            else:
                dst[:] = buffer[lo:mid]
        buffer = new_buffer
        starts = new_starts
        count = pairs
    return buffer[starts[0] : starts[1]].copy()


class NaiveBackend(MmsBackend):
    """The definitional quadratic loop, compiled with numba."""

    name = "naive"
    alpha = Fraction(2)

    def convolve(self, a, b):
        return _mms_jit(a, b)

    def convolve_packed(self, buffer, starts):
        if len(starts) < 2:
            raise ValueError("need at least one vector")
        return _fold_jit(buffer, starts)


class NumpyBackend(MmsBackend):
    """Quadratic numpy evaluation, looping over the shorter operand."""

    name = "numpy"
    alpha = Fraction(2)

    def convolve(self, a, b):
        la, lb = a.size, b.size
        out = np.full(la + lb - 1, NEG_INF, dtype=np.int64)
        if la <= lb:
            for i in range(la):
                seg = out[i : i + lb]
                np.maximum(seg, np.minimum(a[i], b - i), out=seg)
        else:
            skew = np.arange(la, dtype=np.int64)
            for j in range(lb):
                seg = out[j : j + la]
                np.maximum(seg, np.minimum(a, b[j] - skew), out=seg)
        out[out >= _SNAP] = POS_INF
        out[out <= -_SNAP] = NEG_INF
        return out


_REGISTRY: dict[str, MmsBackend] = {}


def register_backend(backend: MmsBackend) -> None:
    _REGISTRY[backend.name] = backend


def backend_names() -> list[str]:
    return sorted(_REGISTRY)


def get_backend(backend: str | MmsBackend) -> MmsBackend:
    if isinstance(backend, MmsBackend):
        return backend
    try:
        return _REGISTRY[backend]
    except KeyError:
        raise UnknownBackendError(
            f"unknown MMS backend {backend!r}; registered: {backend_names()}"
        ) from None


register_backend(NaiveBackend())
register_backend(NumpyBackend())

DEFAULT_BACKEND = "naive"


def mms_convolve(backend: str | MmsBackend, a, b) -> np.ndarray:
    """MMS convolution of ``a`` and ``b`` on the named backend."""
    impl = get_backend(backend)
    return impl.convolve(as_level_vector(a), as_level_vector(b))


def mms_windowed(
    window,
    offset: int,
    b,
    *,
    length: int | None = None,
    backend: str | MmsBackend = DEFAULT_BACKEND,
    checked: bool = True,
) -> np.ndarray:
    """MMS convolution of a vector that is ``NEG_INF`` outside one window.

    ``window`` holds ``A[offset : offset + len(window)]``; every other entry of
    ``A`` is ``NEG_INF``.  Work is proportional to ``len(window) * len(b)``.

    Without ``length`` the result is the slice of ``C`` starting at ``offset``
    and covering every index the window can reach; entries outside it are
    ``NEG_INF``.  With ``length`` (the full length of ``A``) the whole
    ``C`` of length ``length + len(b) - 1`` is returned.  ``checked=False``
    skips validating ``window`` and ``b`` (callers passing int64 level
    vectors they built themselves).
    """
    impl = get_backend(backend)
    if checked:
        b = as_level_vector(b)
    w = np.asarray(window, dtype=np.int64)
    if offset < 0 or (length is not None and offset + w.size > length):
        raise ValueError(
            f"window [{offset}, {offset + w.size}) out of range for length {length}"
        )
    if w.size == 0:
        return np.full(0 if length is None else length + b.size - 1, NEG_INF, dtype=np.int64)
    if checked:
        w = as_level_vector(w)
    # the skew uses absolute indices: B[k - i] - (offset + i_local)
    seg = impl.convolve(w, sat_sub_vector(b, offset) if offset else b)
    if length is None:
        return seg
    out = np.full(length + b.size - 1, NEG_INF, dtype=np.int64)
    out[offset : offset + seg.size] = seg
    return out

