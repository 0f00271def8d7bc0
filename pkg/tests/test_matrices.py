"""Matrix arithmetic against a scalar-by-scalar oracle, plus serialization."""

import json

import pytest

from ahspringer.gf import FieldScalar, all_scalars
from ahspringer.matrices import FpMatrix, load_matrix
from ahspringer.rng import stream


def random_fp_matrix(p, e, n, st):
    rows = [
        [FieldScalar(p, e, tuple(st.below(p) for _ in range(e))) for _ in range(n)]
        for _ in range(n)
    ]
    return FpMatrix.from_rows(p, e, rows), rows


def naive_matmul(rows_a, rows_b, p, e):
    n = len(rows_a)
    zero = FieldScalar.zero(p, e)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                acc = acc + rows_a[i][k] * rows_b[k][j]
            row.append(acc)
        out.append(row)
    return out


@pytest.mark.parametrize("p,e", [(2, 1), (5, 1), (2, 2), (3, 2), (7, 2)])
def test_matmul_matches_scalar_oracle(p, e):
    st = stream(11, f"matmul/{p}/{e}")
    for trial in range(8):
        n = 2 + st.below(3)
        a, rows_a = random_fp_matrix(p, e, n, st)
        b, rows_b = random_fp_matrix(p, e, n, st)
        expected = FpMatrix.from_rows(p, e, naive_matmul(rows_a, rows_b, p, e))
        assert a @ b == expected


@pytest.mark.parametrize("p,e", [(3, 1), (3, 2)])
def test_add_sub_scale_match_entries(p, e):
    st = stream(12, f"addsub/{p}/{e}")
    a, rows_a = random_fp_matrix(p, e, 3, st)
    b, rows_b = random_fp_matrix(p, e, 3, st)
    s = FieldScalar(p, e, tuple(st.below(p) for _ in range(e)))
    for i in range(3):
        for j in range(3):
            assert (a + b).entry(i, j) == rows_a[i][j] + rows_b[i][j]
            assert (a - b).entry(i, j) == rows_a[i][j] - rows_b[i][j]
            assert (-a).entry(i, j) == -rows_a[i][j]
            assert a.scale(s).entry(i, j) == s * rows_a[i][j]
            assert a.transpose().entry(i, j) == rows_a[j][i]


def test_pow_and_identity():
    a = FpMatrix.from_rows(5, 1, [[1, 2], [3, 4]])
    assert a ** 0 == FpMatrix.identity(5, 1, 2)
    assert a ** 1 == a
    assert a ** 3 == a @ a @ a
    with pytest.raises(ValueError):
        a ** -1


def test_trace():
    a = FpMatrix.from_rows(5, 1, [[1, 2], [3, 4]])
    assert a.trace() == FieldScalar.from_int(5, 1, 0)  # 1 + 4 = 5
    b = FpMatrix.from_rows(3, 2, [[(1, 1), 0], [0, (1, 2)]])
    assert b.trace() == FieldScalar(3, 2, (2, 0))


@pytest.mark.parametrize("p", [2, 3])
def test_entrywise_frobenius_is_ring_homomorphism(p):
    st = stream(13, f"frob/{p}")
    a, _ = random_fp_matrix(p, 2, 3, st)
    b, _ = random_fp_matrix(p, 2, 3, st)
    assert (a @ b).frobenius_entries() == a.frobenius_entries() @ b.frobenius_entries()
    assert (a + b).frobenius_entries() == a.frobenius_entries() + b.frobenius_entries()
    for i in range(3):
        for j in range(3):
            assert a.frobenius_entries().entry(i, j) == a.entry(i, j) ** p


def test_shape_and_field_mismatch():
    a = FpMatrix.identity(3, 1, 2)
    with pytest.raises(ValueError):
        a + FpMatrix.identity(3, 1, 3)
    with pytest.raises(ValueError):
        a @ FpMatrix.identity(5, 1, 2)
    with pytest.raises(ValueError):
        a.scale(FieldScalar.one(5, 1))


def test_json_round_trip_e1(tmp_path):
    a = FpMatrix.from_rows(3, 1, [[0, 1, 2], [1, 0, 1], [2, 2, 0]])
    obj = a.to_json_obj()
    assert obj == {"p": 3, "e": 1, "n": 3, "entries": [[0, 1, 2], [1, 0, 1], [2, 2, 0]]}
    assert FpMatrix.from_json_obj(obj) == a
    path = tmp_path / "m.json"
    path.write_text(a.dumps())
    assert load_matrix(str(path)) == a


def test_json_round_trip_e2(tmp_path):
    a = FpMatrix.from_rows(3, 2, [[(1, 2), (0, 1)], [(2, 0), (1, 1)]])
    obj = json.loads(a.dumps())
    assert obj["entries"][0][0] == [1, 2]
    assert FpMatrix.from_json_obj(obj) == a


def test_json_malformed_inputs(tmp_path):
    with pytest.raises(ValueError):
        FpMatrix.from_json_obj({"p": 3, "e": 1, "n": 2})
    with pytest.raises(ValueError):
        FpMatrix.from_json_obj({"p": 3, "e": 1, "n": 2, "entries": [[0, 1]]})
    with pytest.raises(ValueError):
        FpMatrix.from_json_obj({"p": 3, "e": 1, "n": 2, "entries": [[0, [1, 1]], [0, 0]]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError, match="bad.json"):
        load_matrix(str(bad))


def test_entries_reduced_and_immutable():
    a = FpMatrix.from_rows(3, 1, [[4, -1], [0, 0]])
    assert a.entry(0, 0) == FieldScalar.from_int(3, 1, 1)
    assert a.entry(0, 1) == FieldScalar.from_int(3, 1, 2)
    with pytest.raises(ValueError):
        a.planes[0, 0, 0] = 2
    with pytest.raises(AttributeError):
        a.n = 5


def test_equality_covers_field_and_shape():
    a = FpMatrix.identity(3, 1, 2)
    assert a != FpMatrix.identity(5, 1, 2)
    assert a != FpMatrix.identity(3, 2, 2)
    assert a == FpMatrix.from_rows(3, 1, [[1, 0], [0, 1]])


def test_scalar_scaling_by_every_element():
    a = FpMatrix.from_rows(3, 2, [[(1, 1), (2, 0)], [(0, 2), (1, 0)]])
    for s in all_scalars(3, 2):
        scaled = a.scale(s)
        for i in range(2):
            for j in range(2):
                assert scaled.entry(i, j) == s * a.entry(i, j)


def test_constructor_validation():
    import numpy as np

    with pytest.raises(ValueError):
        FpMatrix(3, 1, np.zeros((2, 2, 2), dtype=np.int64))  # wrong plane count
    with pytest.raises(ValueError):
        FpMatrix(3, 1, np.zeros((1, 2, 3), dtype=np.int64))  # not square
    with pytest.raises(ValueError):
        FpMatrix.from_rows(3, 1, [[0, 1], [0]])  # ragged rows
    with pytest.raises(ValueError):
        FpMatrix.from_rows(3, 2, [[(1, 2, 3), 0], [0, 0]])  # bad coords
    with pytest.raises(ValueError):
        FpMatrix.from_rows(3, 1, [[FieldScalar.one(5, 1), 0], [0, 0]])


def test_repr_smoke():
    assert "p=3" in repr(FpMatrix.identity(3, 1, 2))
    assert "e=2" in repr(FpMatrix.identity(3, 2, 2))
