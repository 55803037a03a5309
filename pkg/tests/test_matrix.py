import numpy as np
import pytest

from mirrorstage import (
    ArgbMatrix,
    DimensionMismatchError,
    add_sat,
    average,
    pack,
    solvent_split,
    subtract_sat,
    tint_progress,
    unpack,
)

from conftest import random_matrix


def scalar_op_oracle(m1, m2, fn):
    """Per-cell scalar reference for the binary matrix operators."""
    out = np.empty_like(m1.planes)
    for p in range(4):
        for y in range(m1.height):
            for x in range(m1.width):
                out[p, y, x] = fn(int(m1.planes[p, y, x]), int(m2.planes[p, y, x]))
    return out


class TestUnpackPack:
    def test_single_cell_extraction(self):
        m = ArgbMatrix.filled(1, 1, (255, 10, 20, 30))
        a, r, g, b = unpack(m)
        assert a[0, 0] == 255 and r[0, 0] == 10 and g[0, 0] == 20 and b[0, 0] == 30

    def test_zero_matrix(self):
        a, r, g, b = unpack(ArgbMatrix.zeros(4, 4))
        for plane in (a, r, g, b):
            assert plane.shape == (4, 4)
            assert not plane.any()

    def test_round_trip(self, rng):
        m = random_matrix(rng, 8, 8)
        assert pack(*unpack(m)) == m

    def test_unpack_pack_identity(self, rng):
        planes = [rng.integers(0, 256, size=(6, 5), dtype=np.uint8) for _ in range(4)]
        out = unpack(pack(*planes))
        assert all(np.array_equal(a, b) for a, b in zip(out, planes))

    def test_pack_direct_construction(self):
        m = pack(
            np.array([[1]], dtype=np.uint8),
            np.array([[2]], dtype=np.uint8),
            np.array([[3]], dtype=np.uint8),
            np.array([[4]], dtype=np.uint8),
        )
        assert m.cell(0, 0) == (1, 2, 3, 4)

    def test_pack_dimension_mismatch_names_plane(self):
        p2 = np.zeros((2, 2), dtype=np.uint8)
        p3 = np.zeros((3, 3), dtype=np.uint8)
        with pytest.raises(DimensionMismatchError, match="'g'"):
            pack(p2, p2, p3, p2)

    def test_unpack_returns_copies(self, rng):
        m = random_matrix(rng, 4, 4)
        before = m.planes.copy()
        a, _, _, _ = unpack(m)
        a[:] = 0
        assert np.array_equal(m.planes, before)


class TestSolventSplit:
    def test_plane_selection(self):
        m = ArgbMatrix.filled(1, 1, (255, 100, 150, 200))
        arg, ag, ar = solvent_split(m)
        assert arg.cell(0, 0) == (255, 100, 150, 0)
        assert ag.cell(0, 0) == (255, 0, 150, 0)
        assert ar.cell(0, 0) == (255, 100, 0, 0)

    def test_zero_input(self):
        for out in solvent_split(ArgbMatrix.zeros(3, 3)):
            assert not out.planes.any()

    def test_full_scan_oracle(self, rng):
        m = random_matrix(rng, 16, 16)
        arg, ag, ar = solvent_split(m)
        for y in range(16):
            for x in range(16):
                a, r, g, b = m.cell(x, y)
                assert arg.cell(x, y) == (a, r, g, 0)
                assert ag.cell(x, y) == (a, 0, g, 0)
                assert ar.cell(x, y) == (a, r, 0, 0)

    def test_discarded_planes_stay_zero(self, rng):
        for _ in range(10):
            m = random_matrix(rng, 12, 9)
            arg, ag, ar = solvent_split(m)
            assert not arg.b.any()
            assert not ag.r.any() and not ag.b.any()
            assert not ar.g.any() and not ar.b.any()


class TestArithmetic:
    def test_subtract_saturates(self):
        m1 = ArgbMatrix.filled(1, 1, (10, 10, 10, 10))
        m2 = ArgbMatrix.filled(1, 1, (20, 20, 20, 20))
        assert subtract_sat(m1, m2).cell(0, 0) == (0, 0, 0, 0)

    def test_subtract_zero_identity(self, rng):
        m = random_matrix(rng, 5, 5)
        assert subtract_sat(m, ArgbMatrix.zeros(5, 5)) == m

    def test_add_saturates(self):
        m1 = ArgbMatrix.filled(1, 1, (200, 200, 200, 200))
        m2 = ArgbMatrix.filled(1, 1, (100, 100, 100, 100))
        assert add_sat(m1, m2).cell(0, 0) == (255, 255, 255, 255)

    def test_add_zero_identity(self, rng):
        m = random_matrix(rng, 5, 5)
        assert add_sat(m, ArgbMatrix.zeros(5, 5)) == m

    def test_average_idempotent(self, rng):
        m = random_matrix(rng, 5, 5)
        assert average(m, m) == m

    def test_average_arithmetic(self):
        m1 = ArgbMatrix.filled(1, 1, (0, 0, 0, 0))
        m2 = ArgbMatrix.filled(1, 1, (254, 254, 254, 254))
        assert average(m1, m2).cell(0, 0) == (127, 127, 127, 127)

    @pytest.mark.parametrize(
        "op,scalar",
        [
            (subtract_sat, lambda a, b: max(0, a - b)),
            (add_sat, lambda a, b: min(255, a + b)),
            (average, lambda a, b: (a + b) // 2),
        ],
    )
    def test_per_cell_oracle(self, rng, op, scalar):
        m1 = random_matrix(rng, 16, 16)
        m2 = random_matrix(rng, 16, 16)
        assert np.array_equal(op(m1, m2).planes, scalar_op_oracle(m1, m2, scalar))

    @pytest.mark.parametrize("op", [subtract_sat, add_sat, average])
    def test_dimension_mismatch(self, op):
        with pytest.raises(DimensionMismatchError):
            op(ArgbMatrix.zeros(2, 2), ArgbMatrix.zeros(3, 2))


class TestTintProgress:
    def test_zero_percent_identity(self, rng):
        m = random_matrix(rng, 6, 6)
        assert tint_progress(m, 0.0) == m

    def test_full_percent_saturates_red(self, rng):
        m = random_matrix(rng, 6, 6)
        out = tint_progress(m, 100.0)
        assert (out.r == 255).all()
        assert np.array_equal(out.a, m.a)
        assert np.array_equal(out.g, m.g)
        assert np.array_equal(out.b, m.b)

    def test_half_percent_formula(self):
        m = ArgbMatrix.filled(1, 1, (0, 100, 0, 0))
        # round(2.55 * 50) = 128 half-up, above the existing 100
        assert tint_progress(m, 50.0).cell(0, 0)[1] == 128

    def test_monotone_in_percent(self, rng):
        m = random_matrix(rng, 8, 8)
        previous = tint_progress(m, 0.0).r
        for percent in range(5, 101, 5):
            current = tint_progress(m, float(percent)).r
            assert (current >= previous).all()
            previous = current

    def test_percent_out_of_range(self):
        m = ArgbMatrix.zeros(2, 2)
        with pytest.raises(ValueError):
            tint_progress(m, -1.0)
        with pytest.raises(ValueError):
            tint_progress(m, 100.5)


class TestValueSemantics:
    def test_operations_leave_inputs_unmodified(self, rng):
        m1 = random_matrix(rng, 8, 8)
        m2 = random_matrix(rng, 8, 8)
        before1 = m1.planes.copy()
        before2 = m2.planes.copy()
        subtract_sat(m1, m2)
        add_sat(m1, m2)
        average(m1, m2)
        solvent_split(m1)
        unpack(m1)
        tint_progress(m1, 33.0)
        assert np.array_equal(m1.planes, before1)
        assert np.array_equal(m2.planes, before2)

    def test_backing_array_is_read_only(self, rng):
        m = random_matrix(rng, 4, 4)
        with pytest.raises(ValueError):
            m.planes[0, 0, 0] = 7
        with pytest.raises(ValueError):
            m.r[0, 0] = 7

    def test_construction_validates_range(self):
        with pytest.raises(ValueError):
            ArgbMatrix(np.full((4, 2, 2), 300, dtype=np.int32))
        with pytest.raises(ValueError):
            ArgbMatrix(np.full((3, 2, 2), 0, dtype=np.uint8))
