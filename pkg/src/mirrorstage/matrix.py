"""ARGB lattice matrices and the per-cell operators the whole pipeline shares.

A frame is four 8-bit planes (alpha, red, green, blue) of identical size.
Every operator here is pure: inputs are never mutated and outputs are freshly
allocated, so matrices can be handed between threads without copying.

Arithmetic rule used throughout the package: compute in a wide type, clamp to
[0, 255], then round half-up. This keeps outputs bit-identical regardless of
platform or evaluation order.
"""

from __future__ import annotations

import numpy as np

# One channel: a (height, width) uint8 array.
Plane = np.ndarray

PLANE_NAMES = ("a", "r", "g", "b")


class DimensionMismatchError(ValueError):
    """Two matrices (or planes) that must share dimensions do not."""


def quantize(values: np.ndarray) -> np.ndarray:
    """Clamp to [0, 255] and round half-up to uint8."""
    return np.floor(np.clip(values, 0.0, 255.0) + 0.5).astype(np.uint8)


class ArgbMatrix:
    """A width x height lattice of (A, R, G, B) cells, 8 bits per plane.

    Backed by a read-only ``(4, height, width)`` uint8 array in A, R, G, B
    plane order. Construction copies; use the plane properties for views.
    """

    __slots__ = ("_planes",)

    def __init__(self, planes: np.ndarray):
        arr = np.asarray(planes)
        if arr.ndim != 3 or arr.shape[0] != 4:
            raise ValueError(f"expected (4, height, width) plane data, got shape {arr.shape}")
        if arr.shape[1] < 1 or arr.shape[2] < 1:
            raise ValueError("width and height must be positive")
        if arr.dtype == np.uint8:
            arr = arr.copy()
        else:
            if np.any((arr < 0) | (arr > 255)):
                raise ValueError("cell values must be in [0, 255]")
            arr = arr.astype(np.uint8)
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        self._planes = arr

    @classmethod
    def _adopt(cls, planes: np.ndarray) -> "ArgbMatrix":
        # Internal fast path: take ownership of a freshly computed uint8 array.
        m = object.__new__(cls)
        arr = np.ascontiguousarray(planes, dtype=np.uint8)
        arr.setflags(write=False)
        m._planes = arr
        return m

    @classmethod
    def zeros(cls, width: int, height: int) -> "ArgbMatrix":
        if width < 1 or height < 1:
            raise ValueError("width and height must be positive")
        return cls._adopt(np.zeros((4, height, width), dtype=np.uint8))

    @classmethod
    def filled(cls, width: int, height: int, cell: tuple[int, int, int, int]) -> "ArgbMatrix":
        """Constant matrix with every cell equal to ``cell`` (A, R, G, B)."""
        if width < 1 or height < 1:
            raise ValueError("width and height must be positive")
        planes = np.empty((4, height, width), dtype=np.uint8)
        for i, value in enumerate(cell):
            if not 0 <= int(value) <= 255:
                raise ValueError(f"cell value {value} out of [0, 255]")
            planes[i].fill(int(value))
        return cls._adopt(planes)

    @property
    def planes(self) -> np.ndarray:
        """Read-only (4, height, width) view, plane order A, R, G, B."""
        return self._planes

    @property
    def width(self) -> int:
        return self._planes.shape[2]

    @property
    def height(self) -> int:
        return self._planes.shape[1]

    @property
    def a(self) -> Plane:
        return self._planes[0]

    @property
    def r(self) -> Plane:
        return self._planes[1]

    @property
    def g(self) -> Plane:
        return self._planes[2]

    @property
    def b(self) -> Plane:
        return self._planes[3]

    def cell(self, x: int, y: int) -> tuple[int, int, int, int]:
        """The (A, R, G, B) values at cell (x, y)."""
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise ValueError(f"cell ({x}, {y}) outside {self.width}x{self.height} matrix")
        return tuple(int(self._planes[i, y, x]) for i in range(4))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArgbMatrix):
            return NotImplemented
        return self._planes.shape == other._planes.shape and bool(
            np.array_equal(self._planes, other._planes)
        )

    def __hash__(self) -> int:  # pragma: no cover - identity hashing only
        return id(self)

    def __repr__(self) -> str:
        return f"ArgbMatrix({self.width}x{self.height})"


def _check_same_dims(m1: ArgbMatrix, m2: ArgbMatrix) -> None:
    if (m1.width, m1.height) != (m2.width, m2.height):
        raise DimensionMismatchError(
            f"matrix dimensions differ: {m1.width}x{m1.height} vs {m2.width}x{m2.height}"
        )


def unpack(m: ArgbMatrix) -> tuple[Plane, Plane, Plane, Plane]:
    """Split a matrix into its four planes (writable copies, A, R, G, B)."""
    return (m.a.copy(), m.r.copy(), m.g.copy(), m.b.copy())


def pack(a: Plane, r: Plane, g: Plane, b: Plane) -> ArgbMatrix:
    """Recombine four equally sized planes into one matrix."""
    planes = []
    ref_shape = None
    for name, plane in zip(PLANE_NAMES, (a, r, g, b)):
        arr = np.asarray(plane)
        if arr.ndim != 2:
            raise ValueError(f"plane {name!r} must be 2-dimensional, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if np.any((arr < 0) | (arr > 255)):
                raise ValueError(f"plane {name!r} has cell values outside [0, 255]")
            arr = arr.astype(np.uint8)
        if ref_shape is None:
            ref_shape = arr.shape
        elif arr.shape != ref_shape:
            raise DimensionMismatchError(
                f"plane {name!r} has shape {arr.shape}, expected {ref_shape}"
            )
        planes.append(arr)
    return ArgbMatrix._adopt(np.stack(planes))


def solvent_split(m: ArgbMatrix) -> tuple[ArgbMatrix, ArgbMatrix, ArgbMatrix]:
    """Decompose into (A+R+G), (A+G) and (A+R) matrices; blue is dropped.

    Discarded planes are zero-filled so everything stays one matrix type.
    """
    a, r, g, _ = m.planes
    zero = np.zeros((m.height, m.width), dtype=np.uint8)
    arg = ArgbMatrix._adopt(np.stack([a, r, g, zero]))
    ag = ArgbMatrix._adopt(np.stack([a, zero, g, zero]))
    ar = ArgbMatrix._adopt(np.stack([a, r, zero, zero]))
    return arg, ag, ar


def subtract_sat(m1: ArgbMatrix, m2: ArgbMatrix) -> ArgbMatrix:
    """Per-cell max(0, m1 - m2) on all four planes."""
    _check_same_dims(m1, m2)
    diff = m1.planes.astype(np.int16) - m2.planes.astype(np.int16)
    return ArgbMatrix._adopt(np.maximum(diff, 0).astype(np.uint8))


def add_sat(m1: ArgbMatrix, m2: ArgbMatrix) -> ArgbMatrix:
    """Per-cell min(255, m1 + m2) on all four planes."""
    _check_same_dims(m1, m2)
    total = m1.planes.astype(np.uint16) + m2.planes.astype(np.uint16)
    return ArgbMatrix._adopt(np.minimum(total, 255).astype(np.uint8))


def average(m1: ArgbMatrix, m2: ArgbMatrix) -> ArgbMatrix:
    """Per-cell floor((m1 + m2) / 2) on all four planes."""
    _check_same_dims(m1, m2)
    total = m1.planes.astype(np.uint16) + m2.planes.astype(np.uint16)
    return ArgbMatrix._adopt((total // 2).astype(np.uint8))


def tint_progress(m: ArgbMatrix, percent: float) -> ArgbMatrix:
    """Raise the red plane to at least the progress ramp round(2.55 * percent).

    Monotone in ``percent``, identity at 0, fully red-saturated at 100.
    """
    if not 0.0 <= percent <= 100.0:
        raise ValueError(f"percent {percent} outside [0, 100]")
    # percent * 255 / 100 == 2.55 * percent, but stays exact at the .5 cases.
    floor_value = int(np.floor(min(max(percent * 255.0 / 100.0, 0.0), 255.0) + 0.5))
    a, r, g, b = m.planes
    r_new = np.maximum(r, np.uint8(floor_value))
    return ArgbMatrix._adopt(np.stack([a, r_new, g, b]))
