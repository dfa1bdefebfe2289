#!/usr/bin/env python3
"""Encode a block of packets, lose some of them, get the data back.

A C(n, k) systematic MDS code sends the k source packets untouched plus
p = n - k parity packets; ANY k of the n packets reconstruct the sources.
"""

import numpy as np

from fecpart import CodeSpec, PacketBlock, UnrecoverableBlockError, build_generator, decode, encode

spec = CodeSpec(n=12, k=8)
print(f"code: n={spec.n} packets on the wire, k={spec.k} sources, "
      f"p={spec.p} parity -> tolerates any {spec.p} losses")

rng = np.random.default_rng(42)
payloads = [rng.integers(0, 256, 1500, dtype=np.uint8).tobytes() for _ in range(spec.k)]

gen = build_generator(spec)
coded = encode(gen, PacketBlock.source(spec, payloads))

print(f"first {spec.k} coded packets identical to the sources:",
      all(coded.packets[i] == payloads[i] for i in range(spec.k)))

# drop as many packets as the code can absorb, including sources
lost = [0, 3, 7, 9]
received = coded.erase(lost)
print(f"erased packets {lost} ({len(received.present_indices)} survive)")

recovered = decode(gen, received)
print("recovered == original:", recovered == payloads)

# one loss too many and the decoder refuses (it never fabricates data)
try:
    decode(gen, coded.erase([0, 1, 2, 3, 4]))
except UnrecoverableBlockError as err:
    print(f"five losses: {err}")
