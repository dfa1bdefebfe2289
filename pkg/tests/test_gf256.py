"""GF(256) arithmetic against independent oracles."""

import numpy as np
import pytest

from fecpart.gf256 import (
    EXP_TABLE,
    LOG_TABLE,
    MUL_TABLE,
    REDUCING_POLY,
    SingularMatrixError,
    gf_div,
    gf_inv,
    gf_mul,
    gf_pow,
    identity,
    mat_invert,
    mat_mul,
    mat_mul_vec,
    mul_bytes,
)


def mul_bitwise(a: int, b: int) -> int:
    """Carry-less polynomial multiply reduced mod 0x11D; independent of the tables."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        if a & 0x100:
            a ^= REDUCING_POLY
        b >>= 1
    return acc


def test_mul_absorbing_zero_and_identity():
    assert gf_mul(0, 77) == 0
    assert gf_mul(77, 0) == 0
    assert gf_mul(1, 77) == 77
    assert gf_mul(2, 128) == 29  # == mul_bitwise(2, 128)
    assert mul_bitwise(2, 128) == 29


def test_mul_matches_bitwise_oracle_exhaustively():
    for a in range(256):
        for b in range(256):
            assert gf_mul(a, b) == mul_bitwise(a, b), (a, b)


def test_mul_table_matches_scalar_mul():
    # the bulk table is what the codecs actually use
    flat = np.array([[gf_mul(a, b) for b in range(256)] for a in range(256)],
                    dtype=np.uint8)
    assert np.array_equal(MUL_TABLE, flat)


def test_mul_commutative_exhaustively():
    assert np.array_equal(MUL_TABLE, MUL_TABLE.T)


def test_inverse_by_exhaustive_search():
    assert gf_inv(1) == 1
    for a in range(1, 256):
        candidates = [b for b in range(1, 256) if gf_mul(a, b) == 1]
        assert candidates == [gf_inv(a)]


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        gf_inv(0)
    with pytest.raises(ZeroDivisionError):
        gf_div(3, 0)


def test_div_inverts_mul():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        a = int(rng.integers(0, 256))
        b = int(rng.integers(1, 256))
        assert gf_div(gf_mul(a, b), b) == a


def test_pow_small_cases():
    assert gf_pow(0, 0) == 1
    assert gf_pow(0, 5) == 0
    assert gf_pow(7, 0) == 1
    x = 1
    for e in range(1, 10):
        x = gf_mul(x, 3)
        assert gf_pow(3, e) == x


def test_multiplicative_group_order():
    # powers of the generator cover all 255 nonzero elements exactly once
    assert len(set(int(EXP_TABLE[i]) for i in range(255))) == 255
    assert int(EXP_TABLE[255]) == int(EXP_TABLE[0])


def test_associativity_and_distributivity_random_triples():
    rng = np.random.default_rng(7)
    n = 200_000
    a = rng.integers(0, 256, n)
    b = rng.integers(0, 256, n)
    c = rng.integers(0, 256, n)
    assert np.array_equal(MUL_TABLE[a, MUL_TABLE[b, c]], MUL_TABLE[MUL_TABLE[a, b], c])
    assert np.array_equal(MUL_TABLE[a, b ^ c], MUL_TABLE[a, b] ^ MUL_TABLE[a, c])


def test_mul_bytes_matches_scalar():
    rng = np.random.default_rng(3)
    data = rng.integers(0, 256, 512, dtype=np.uint8)
    for coef in (0, 1, 2, 77, 255):
        expected = np.array([gf_mul(coef, int(x)) for x in data], dtype=np.uint8)
        assert np.array_equal(mul_bytes(coef, data), expected)


def reference_mat_mul_vec(m, v):
    # naive triple-loop oracle
    out = []
    for i in range(m.shape[0]):
        acc = 0
        for j in range(m.shape[1]):
            acc ^= gf_mul(int(m[i, j]), int(v[j]))
        out.append(acc)
    return np.array(out, dtype=np.uint8)


def test_mat_mul_vec_identity_and_zero():
    v = np.array([9, 200, 31], dtype=np.uint8)
    assert np.array_equal(mat_mul_vec(identity(3), v), v)
    assert np.array_equal(mat_mul_vec(np.zeros((3, 3), np.uint8), v), np.zeros(3, np.uint8))


def test_mat_mul_vec_matches_scalar_loop():
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = rng.integers(0, 256, (4, 3), dtype=np.uint8)
        v = rng.integers(0, 256, 3, dtype=np.uint8)
        assert np.array_equal(mat_mul_vec(m, v), reference_mat_mul_vec(m, v))


def test_mat_mul_vec_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul_vec(np.zeros((3, 4), np.uint8), np.zeros(3, np.uint8))


def test_mat_invert_identity():
    assert np.array_equal(mat_invert(identity(5)), identity(5))


def test_mat_invert_multiply_back():
    rng = np.random.default_rng(13)
    for _ in range(30):
        m = rng.integers(0, 256, (3, 3), dtype=np.uint8)
        try:
            inv = mat_invert(m)
        except SingularMatrixError:
            continue
        assert np.array_equal(mat_mul(m, inv), identity(3))
        assert np.array_equal(mat_mul(inv, m), identity(3))


def test_mat_invert_duplicated_row_is_singular():
    m = np.array([[1, 2, 3], [4, 5, 6], [1, 2, 3]], dtype=np.uint8)
    with pytest.raises(SingularMatrixError):
        mat_invert(m)


def test_mat_invert_involution_up_to_16():
    rng = np.random.default_rng(17)
    for size in range(1, 17):
        made = 0
        while made < 5:
            m = rng.integers(0, 256, (size, size), dtype=np.uint8)
            try:
                inv = mat_invert(m)
            except SingularMatrixError:
                continue
            made += 1
            assert np.array_equal(mat_invert(inv), m)


def test_mat_invert_rejects_non_square():
    with pytest.raises(ValueError):
        mat_invert(np.zeros((2, 3), np.uint8))
