import json
import math

import pytest

import nrcn


def test_version():
    assert nrcn.__version__ == "0.1.0"


def test_digits_and_lucas():
    assert nrcn.to_base_p(305, 3) == [2, 2, 0, 2, 0, 1]
    assert nrcn.from_digits([2, 2, 0, 2, 0, 1], 3) == 305
    for n in range(40):
        for j in range(n + 1):
            assert nrcn.lucas_binom(n, j, 3) == math.comb(n, j) % 3
    assert nrcn.pascal_triangle_mod_p(3, 4) == [[1], [1, 1], [1, 2, 1], [1, 0, 0, 1]]


def test_errors():
    with pytest.raises(nrcn.InvalidPrimeError):
        nrcn.lucas_binom(4, 2, 4)
    with pytest.raises(nrcn.ResourceLimitError):
        nrcn.Field(2, 21)
    with pytest.raises(ValueError):
        nrcn.nucleus_dim(4, 4, 2)


def test_classes():
    assert nrcn.class_of(9, 3, 3) == (2, 1)
    assert nrcn.class_of(2, 5, 7) == (None, 0)
    assert nrcn.class_of(3, 1, 2) is None
    assert nrcn.phi(2, 9, 3) == 8
    assert nrcn.class_members(2, 9, 3, 9) == list(range(1, 9))
    assert nrcn.sigma(1, 305, 3) == 252
    assert nrcn.top_line(None, 306, 3) == 0


def test_nuclei():
    rows = nrcn.nuclei_table(305, 3)
    assert [(r["lower"], r["upper"], r["dim"]) for r in rows] == [
        (0, 243, -1),
        (243, 297, 179),
        (297, 306, 251),
    ]
    assert nrcn.nucleus_basis_indices(3, 4, 2) == [1, 2, 3]
    assert nrcn.timmermann_dim(305, 3) == 251
    assert nrcn.point_nucleus(16, 3) == (2, 8)
    assert nrcn.point_nucleus(5, 2) is None


def test_field_and_geometry():
    f4 = nrcn.Field(2, 2)
    assert f4.q == 4 and f4.modulus == [1, 1, 1]
    assert all(f4.mul(a, f4.inv(a)) == 1 for a in range(1, 4))
    dim, basis = nrcn.geometric_nucleus(f4, 4, 3)
    assert dim == 2
    assert basis == [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]


def test_verify_and_json():
    ok, records = nrcn.verify(2, 2, 4)
    assert ok
    assert any(r["n"] == 4 and r["k"] == 3 and r["dim_geometric"] == 2 for r in records)
    text = nrcn.nuclei_json(3, 305)
    doc = json.loads(text)
    assert doc["command"] == "nuclei"
    assert doc["result"]["endianness"] == "little"
    assert json.dumps(doc, separators=(",", ":"), ensure_ascii=False) == text
