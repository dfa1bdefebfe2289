"""Systematic MDS erasure codec at packet granularity.

A C(n, k) code turns k equal-size source packets into n packets (the k
sources verbatim plus p = n - k parity packets); any k received packets
reconstruct the sources.  The generator is a Vandermonde matrix on points
0..n-1 normalized so its top k x k block is the identity, the standard
construction for packet FEC, which makes every k x k row-submatrix
invertible.

Per byte position, encoding costs exactly p*k symbol multiply-accumulates
and erasure decoding e*k (e = number of lost source packets).  The
module-level `mac_counter` tallies those operations so tests and benchmarks
can verify the arithmetic cost rather than trust the O() claim.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf256 import MUL_TABLE, gf_pow, mat_invert, mat_mul

MAX_CODE_LENGTH = 255  # one codeword symbol per nonzero field element


class UnrecoverableBlockError(Exception):
    """Too few packets survived to reconstruct a block.

    `lost_source_indices` lists the source positions (block-relative, or
    parent-relative for partitioned blocks) whose data is gone.
    """

    def __init__(self, lost_source_indices, received: int, needed: int):
        self.lost_source_indices = tuple(sorted(lost_source_indices))
        self.received = received  # packets that survived, across the whole block
        self.needed = needed  # source packets the block carries
        lost = self.lost_source_indices
        super().__init__(
            f"unrecoverable block: {len(lost)} of {needed} source packets lost "
            f"(indices {list(lost)})"
        )


class MulAccCounter:
    """Running count of symbol multiply-accumulates per byte position.

    Each coefficient-times-packet vector operation counts as one MAC per
    byte.  Diagnostic aid only: not synchronized, so reset/read it from a
    single thread.
    """

    __slots__ = ("per_byte",)

    def __init__(self):
        self.per_byte = 0

    def reset(self):
        self.per_byte = 0


mac_counter = MulAccCounter()


@dataclass(frozen=True)
class CodeSpec:
    """An (n, k) systematic MDS code: k sources, p = n - k parity packets."""

    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got n={self.n} k={self.k}")
        if self.n > MAX_CODE_LENGTH:
            raise ValueError(
                f"n={self.n} exceeds the GF(256) limit of {MAX_CODE_LENGTH}"
            )

    @property
    def p(self) -> int:
        return self.n - self.k


@dataclass(frozen=True)
class GeneratorMatrix:
    """n x k systematic generator; rows 0..k-1 are the identity."""

    spec: CodeSpec
    matrix: np.ndarray

    @property
    def parity_rows(self) -> np.ndarray:
        return self.matrix[self.spec.k:]


@dataclass(frozen=True)
class PacketBlock:
    """A block of packets, some of which may be erased (None).

    Holds either k slots (a source block) or n slots (a coded block).
    All present packets must be packet_size bytes.
    """

    spec: CodeSpec
    packet_size: int
    packets: tuple

    def __post_init__(self):
        if len(self.packets) not in (self.spec.k, self.spec.n):
            raise ValueError(
                f"block must have k={self.spec.k} or n={self.spec.n} slots, "
                f"got {len(self.packets)}"
            )
        for pkt in self.packets:
            if pkt is not None and len(pkt) != self.packet_size:
                raise ValueError(
                    f"packet size mismatch: expected {self.packet_size}, "
                    f"got {len(pkt)}"
                )

    @classmethod
    def source(cls, spec: CodeSpec, payloads) -> "PacketBlock":
        payloads = [bytes(p) for p in payloads]
        if len(payloads) != spec.k:
            raise ValueError(f"expected {spec.k} source packets, got {len(payloads)}")
        if not payloads[0]:
            raise ValueError("packets must be non-empty")
        return cls(spec, len(payloads[0]), tuple(payloads))

    def erase(self, indices) -> "PacketBlock":
        """Copy of this block with the given slots erased."""
        gone = set(indices)
        packets = tuple(
            None if i in gone else pkt for i, pkt in enumerate(self.packets)
        )
        return PacketBlock(self.spec, self.packet_size, packets)

    @property
    def present_indices(self) -> list:
        return [i for i, pkt in enumerate(self.packets) if pkt is not None]

    @property
    def missing_indices(self) -> list:
        return [i for i, pkt in enumerate(self.packets) if pkt is None]


def build_generator(spec: CodeSpec) -> GeneratorMatrix:
    """Deterministic systematic MDS generator for `spec`.

    Vandermonde on evaluation points 0..n-1 (any k distinct points give an
    invertible square block), right-multiplied by the inverse of its top
    k x k block so the prefix becomes the identity.
    """
    n, k = spec.n, spec.k
    vand = np.empty((n, k), dtype=np.uint8)
    for i in range(n):
        for j in range(k):
            vand[i, j] = gf_pow(i, j)
    top_inv = mat_invert(vand[:k, :k])
    matrix = mat_mul(vand, top_inv)
    matrix.setflags(write=False)
    return GeneratorMatrix(spec, matrix)


def _as_arrays(packets) -> list:
    # zero-copy uint8 views over the payload bytes
    return [np.frombuffer(p, dtype=np.uint8) for p in packets]


def encode(gen: GeneratorMatrix, source: PacketBlock) -> PacketBlock:
    """Encode k source packets into n packets (sources + parity).

    The k source packets pass through byte-identical; each parity packet is
    the GF(256) dot product of its generator row with the source packets,
    done per byte position (p*k MACs per byte in total).
    """
    spec = gen.spec
    if len(source.packets) != spec.k or None in source.packets:
        raise ValueError(f"encode needs exactly {spec.k} present source packets")
    src = _as_arrays(source.packets)
    parity_rows = gen.parity_rows
    out = []
    for row in parity_rows:
        acc = np.zeros(source.packet_size, dtype=np.uint8)
        for j in range(spec.k):
            acc ^= MUL_TABLE[row[j]][src[j]]
            mac_counter.per_byte += 1
        out.append(acc.tobytes())
    return PacketBlock(spec, source.packet_size, source.packets + tuple(out))


def select_rows(gen: GeneratorMatrix, present) -> list:
    """The k generator rows the decoder uses for a given survivor set.

    All surviving source rows first, then surviving parity rows in
    ascending index until k rows are selected.
    """
    k = gen.spec.k
    src_rows = [i for i in present if i < k]
    par_rows = [i for i in present if i >= k]
    rows = src_rows + par_rows[: k - len(src_rows)]
    if len(rows) != k:
        raise ValueError("fewer than k packets present")
    return rows


def decoding_matrix(gen: GeneratorMatrix, erased_sources) -> np.ndarray:
    """The e x e matrix the decoder inverts for a given source-erasure set.

    With the decoder's row selection, the surviving source rows are
    identity rows, so the k x k system reduces exactly to this block: the
    first e parity rows (this helper assumes the parity packets survived,
    the decoder's worst case) restricted to the erased source columns.
    This is the matrix whose inversion cost the benchmark isolates.
    """
    k = gen.spec.k
    missing = sorted(erased_sources)
    e = len(missing)
    if e == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    if e > gen.spec.p:
        raise ValueError(f"{e} erased sources exceed {gen.spec.p} parity packets")
    parity_rows = [k + j for j in range(e)]
    return np.ascontiguousarray(gen.matrix[np.ix_(parity_rows, missing)])


def decode(gen: GeneratorMatrix, received: PacketBlock) -> list:
    """Recover the k source packets from any >= k received packets.

    If every source packet survived they are returned as-is with no matrix
    work.  Otherwise the decoder selects k rows (surviving sources first,
    then parity in ascending index) and solves for the missing sources
    only: because the source rows are identity rows, the k x k submatrix
    inversion reduces to inverting the e x e block returned by
    `decoding_matrix`, and reconstruction costs e*k MACs per byte.
    """
    spec = gen.spec
    if len(received.packets) != spec.n:
        raise ValueError(f"decode needs a coded block with {spec.n} slots")
    packets = received.packets
    present = received.present_indices
    missing_src = [i for i in range(spec.k) if packets[i] is None]
    if len(present) < spec.k:
        raise UnrecoverableBlockError(missing_src, len(present), spec.k)
    if not missing_src:
        return [packets[i] for i in range(spec.k)]

    surviving_src = [i for i in range(spec.k) if packets[i] is not None]
    rows = select_rows(gen, present)
    parity_rows = rows[len(surviving_src):]  # e of them, ascending

    e = len(missing_src)
    b_inv = mat_invert(gen.matrix[np.ix_(parity_rows, missing_src)])

    # rhs_i = y_i - sum over surviving sources of G[row_i, s] * x_s
    src_arrays = {s: np.frombuffer(packets[s], dtype=np.uint8) for s in surviving_src}
    rhs = []
    for row in parity_rows:
        acc = np.frombuffer(packets[row], dtype=np.uint8).copy()
        coefs = gen.matrix[row]
        for s in surviving_src:
            acc ^= MUL_TABLE[coefs[s]][src_arrays[s]]
            mac_counter.per_byte += 1
        rhs.append(acc)

    recovered = {}
    for m in range(e):
        acc = np.zeros(received.packet_size, dtype=np.uint8)
        for j in range(e):
            acc ^= MUL_TABLE[b_inv[m, j]][rhs[j]]
            mac_counter.per_byte += 1
        recovered[missing_src[m]] = acc.tobytes()

    return [
        packets[i] if packets[i] is not None else recovered[i]
        for i in range(spec.k)
    ]
