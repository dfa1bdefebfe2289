"""Arithmetic and dense linear algebra over GF(2^8).

Field elements are plain ints in 0..255 (or uint8 numpy arrays for bulk
work); matrices are 2-D uint8 numpy arrays.  Multiplication uses log/antilog
tables built once at import for the reduction polynomial x^8+x^4+x^3+x^2+1
(0x11D), plus a full 256x256 product table so that multiplying a whole
packet by a coefficient is a single table gather.

Everything here is pure and operates on immutable tables, so concurrent use
is safe.
"""

from __future__ import annotations

import numpy as np

REDUCING_POLY = 0x11D


class SingularMatrixError(ValueError):
    """Raised when asked to invert a rank-deficient matrix."""


def _build_tables():
    exp = np.zeros(510, dtype=np.uint8)
    log = np.zeros(256, dtype=np.int64)
    x = 1
    for i in range(255):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & 0x100:
            x ^= REDUCING_POLY
    # doubled antilog table avoids a mod 255 in the scalar hot path
    exp[255:510] = exp[0:255]

    mul = np.zeros((256, 256), dtype=np.uint8)
    nz = np.arange(1, 256)
    mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % 255]

    inv = np.zeros(256, dtype=np.uint8)
    inv[1:] = exp[255 - log[nz]]
    return exp, log, mul, inv


EXP_TABLE, LOG_TABLE, MUL_TABLE, INV_TABLE = _build_tables()
EXP_TABLE.setflags(write=False)
LOG_TABLE.setflags(write=False)
MUL_TABLE.setflags(write=False)
INV_TABLE.setflags(write=False)


def gf_mul(a: int, b: int) -> int:
    """Product of two field elements."""
    if a == 0 or b == 0:
        return 0
    return int(EXP_TABLE[LOG_TABLE[a] + LOG_TABLE[b]])


def gf_inv(a: int) -> int:
    """Multiplicative inverse; zero has none."""
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse in GF(256)")
    return int(INV_TABLE[a])


def gf_div(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero in GF(256)")
    if a == 0:
        return 0
    return int(EXP_TABLE[(LOG_TABLE[a] - LOG_TABLE[b]) % 255])


def gf_pow(a: int, e: int) -> int:
    """a**e with the convention 0**0 = 1."""
    if e == 0:
        return 1
    if a == 0:
        return 0
    return int(EXP_TABLE[(LOG_TABLE[a] * e) % 255])


def mul_bytes(coef: int, data: np.ndarray) -> np.ndarray:
    """Multiply every byte of `data` by the scalar `coef`."""
    return MUL_TABLE[coef][data]


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def mat_mul_vec(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product over GF(256)."""
    m = np.asarray(m, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    if m.ndim != 2 or v.ndim != 1 or m.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {m.shape} x {v.shape}")
    if v.shape[0] == 0:
        return np.zeros(m.shape[0], dtype=np.uint8)
    prods = MUL_TABLE[m, v[None, :]]
    return np.bitwise_xor.reduce(prods, axis=1)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix-matrix product over GF(256)."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    prods = MUL_TABLE[a[:, :, None], b[None, :, :]]
    return np.bitwise_xor.reduce(prods, axis=1)


def mat_invert(m: np.ndarray) -> np.ndarray:
    """Invert a square matrix by Gauss-Jordan elimination.

    Pivots on the first nonzero element of each column (exact arithmetic,
    so any nonzero pivot is as good as any other) and only touches rows
    whose factor is nonzero, which makes elimination cheap on the
    identity-heavy matrices the erasure decoder produces.

    Raises SingularMatrixError if the matrix has no inverse.
    """
    m = np.asarray(m, dtype=np.uint8)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix is not square: {m.shape}")
    n = m.shape[0]
    aug = np.concatenate([m, identity(n)], axis=1)
    for col in range(n):
        below = np.nonzero(aug[col:, col])[0]
        if below.size == 0:
            raise SingularMatrixError(f"matrix is singular at column {col}")
        piv = col + int(below[0])
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        pivot = aug[col, col]
        if pivot != 1:
            aug[col] = MUL_TABLE[INV_TABLE[pivot]][aug[col]]
        factors = aug[:, col].copy()
        factors[col] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            aug[rows] ^= MUL_TABLE[factors[rows, None], aug[col][None, :]]
    return np.ascontiguousarray(aug[:, n:])
