# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled band convolution kernel.

Multiplies matrices of Laurent polynomials mod m held as dense coefficient
stacks: a[t, i, j] is the coefficient of v^(val_a + t) in entry (i, j).
The inner loops skip zero coefficients of the right operand, which for
Burau suffix lifts is the sparse side.
"""

import numpy as np

BACKEND = "compiled"


def convolve_mod(const unsigned char[:, :, ::1] a,
                 const unsigned char[:, :, ::1] b,
                 int modulus):
    cdef Py_ssize_t wa = a.shape[0], wb = b.shape[0]
    cdef Py_ssize_t r = a.shape[1], rc = b.shape[2]
    cdef Py_ssize_t ta, tb, i, j, k
    cdef long long c
    out_arr = np.zeros((wa + wb - 1, r, rc), dtype=np.int64)
    cdef long long[:, :, ::1] out = out_arr
    with nogil:
        for tb in range(wb):
            for k in range(r):
                for j in range(rc):
                    c = b[tb, k, j]
                    if c == 0:
                        continue
                    for ta in range(wa):
                        for i in range(r):
                            out[ta + tb, i, j] += c * a[ta, i, k]
    return (out_arr % modulus).astype(np.uint8)
