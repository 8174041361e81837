"""Pure-numpy fallback for the band convolution kernel.

Same contract as the compiled _bandkernel module: given coefficient
stacks a (wa, r, r) and b (wb, r, r) of uint8 residues, return the
(wa+wb-1, r, r) uint8 stack of the product matrix mod `modulus`, where
slice t of the result is sum over u+w==t of a[u] @ b[w].
"""

import numpy as np

BACKEND = "python"


def convolve_mod(a, b, modulus):
    wa, wb = a.shape[0], b.shape[0]
    out = np.zeros((wa + wb - 1, a.shape[1], b.shape[2]), dtype=np.int64)
    a64 = a.astype(np.int64)
    b64 = b.astype(np.int64)
    # loop over the thinner operand; each step is one batched matmul
    if wb <= wa:
        for t in range(wb):
            out[t : t + wa] += a64 @ b64[t]
    else:
        for t in range(wa):
            out[t : t + wb] += a64[t] @ b64
    return (out % modulus).astype(np.uint8)
