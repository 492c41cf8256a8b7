"""Scalar-reduction routines specialized per accumulator count m.

Generated by scripts/gen_reductions.py -- do not edit by hand; rerun that
script to regenerate.  Routines with m <= 64 compile with the parallel
backend; larger m compile single-worker (see cimotifs.reduce for the
measured compile-cost rationale).
"""

import numpy as np
from numba import njit, prange


# m = 2 (parallel)
def reduce_scalars_2(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
    out = np.empty(2, np.float32)
    out[0] = a1
    out[1] = a2
    return out

reduce_scalars_2 = njit(parallel=True, cache=True)(reduce_scalars_2)

# m = 3 (parallel)
def reduce_scalars_3(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
    out = np.empty(3, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    return out

reduce_scalars_3 = njit(parallel=True, cache=True)(reduce_scalars_3)

# m = 4 (parallel)
def reduce_scalars_4(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
    out = np.empty(4, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    return out

reduce_scalars_4 = njit(parallel=True, cache=True)(reduce_scalars_4)

# m = 8 (parallel)
def reduce_scalars_8(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    a5 = np.float32(0.0)
    a6 = np.float32(0.0)
    a7 = np.float32(0.0)
    a8 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
        a5 += x[4, i] * y[4, j]
        a6 += x[5, i] * y[5, j]
        a7 += x[6, i] * y[6, j]
        a8 += x[7, i] * y[7, j]
    out = np.empty(8, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    out[4] = a5
    out[5] = a6
    out[6] = a7
    out[7] = a8
    return out

reduce_scalars_8 = njit(parallel=True, cache=True)(reduce_scalars_8)

# m = 16 (parallel)
def reduce_scalars_16(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    a5 = np.float32(0.0)
    a6 = np.float32(0.0)
    a7 = np.float32(0.0)
    a8 = np.float32(0.0)
    a9 = np.float32(0.0)
    a10 = np.float32(0.0)
    a11 = np.float32(0.0)
    a12 = np.float32(0.0)
    a13 = np.float32(0.0)
    a14 = np.float32(0.0)
    a15 = np.float32(0.0)
    a16 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
        a5 += x[4, i] * y[4, j]
        a6 += x[5, i] * y[5, j]
        a7 += x[6, i] * y[6, j]
        a8 += x[7, i] * y[7, j]
        a9 += x[8, i] * y[8, j]
        a10 += x[9, i] * y[9, j]
        a11 += x[10, i] * y[10, j]
        a12 += x[11, i] * y[11, j]
        a13 += x[12, i] * y[12, j]
        a14 += x[13, i] * y[13, j]
        a15 += x[14, i] * y[14, j]
        a16 += x[15, i] * y[15, j]
    out = np.empty(16, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    out[4] = a5
    out[5] = a6
    out[6] = a7
    out[7] = a8
    out[8] = a9
    out[9] = a10
    out[10] = a11
    out[11] = a12
    out[12] = a13
    out[13] = a14
    out[14] = a15
    out[15] = a16
    return out

reduce_scalars_16 = njit(parallel=True, cache=True)(reduce_scalars_16)

# m = 32 (parallel)
def reduce_scalars_32(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    a5 = np.float32(0.0)
    a6 = np.float32(0.0)
    a7 = np.float32(0.0)
    a8 = np.float32(0.0)
    a9 = np.float32(0.0)
    a10 = np.float32(0.0)
    a11 = np.float32(0.0)
    a12 = np.float32(0.0)
    a13 = np.float32(0.0)
    a14 = np.float32(0.0)
    a15 = np.float32(0.0)
    a16 = np.float32(0.0)
    a17 = np.float32(0.0)
    a18 = np.float32(0.0)
    a19 = np.float32(0.0)
    a20 = np.float32(0.0)
    a21 = np.float32(0.0)
    a22 = np.float32(0.0)
    a23 = np.float32(0.0)
    a24 = np.float32(0.0)
    a25 = np.float32(0.0)
    a26 = np.float32(0.0)
    a27 = np.float32(0.0)
    a28 = np.float32(0.0)
    a29 = np.float32(0.0)
    a30 = np.float32(0.0)
    a31 = np.float32(0.0)
    a32 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
        a5 += x[4, i] * y[4, j]
        a6 += x[5, i] * y[5, j]
        a7 += x[6, i] * y[6, j]
        a8 += x[7, i] * y[7, j]
        a9 += x[8, i] * y[8, j]
        a10 += x[9, i] * y[9, j]
        a11 += x[10, i] * y[10, j]
        a12 += x[11, i] * y[11, j]
        a13 += x[12, i] * y[12, j]
        a14 += x[13, i] * y[13, j]
        a15 += x[14, i] * y[14, j]
        a16 += x[15, i] * y[15, j]
        a17 += x[16, i] * y[16, j]
        a18 += x[17, i] * y[17, j]
        a19 += x[18, i] * y[18, j]
        a20 += x[19, i] * y[19, j]
        a21 += x[20, i] * y[20, j]
        a22 += x[21, i] * y[21, j]
        a23 += x[22, i] * y[22, j]
        a24 += x[23, i] * y[23, j]
        a25 += x[24, i] * y[24, j]
        a26 += x[25, i] * y[25, j]
        a27 += x[26, i] * y[26, j]
        a28 += x[27, i] * y[27, j]
        a29 += x[28, i] * y[28, j]
        a30 += x[29, i] * y[29, j]
        a31 += x[30, i] * y[30, j]
        a32 += x[31, i] * y[31, j]
    out = np.empty(32, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    out[4] = a5
    out[5] = a6
    out[6] = a7
    out[7] = a8
    out[8] = a9
    out[9] = a10
    out[10] = a11
    out[11] = a12
    out[12] = a13
    out[13] = a14
    out[14] = a15
    out[15] = a16
    out[16] = a17
    out[17] = a18
    out[18] = a19
    out[19] = a20
    out[20] = a21
    out[21] = a22
    out[22] = a23
    out[23] = a24
    out[24] = a25
    out[25] = a26
    out[26] = a27
    out[27] = a28
    out[28] = a29
    out[29] = a30
    out[30] = a31
    out[31] = a32
    return out

reduce_scalars_32 = njit(parallel=True, cache=True)(reduce_scalars_32)

# m = 64 (parallel)
def reduce_scalars_64(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    a5 = np.float32(0.0)
    a6 = np.float32(0.0)
    a7 = np.float32(0.0)
    a8 = np.float32(0.0)
    a9 = np.float32(0.0)
    a10 = np.float32(0.0)
    a11 = np.float32(0.0)
    a12 = np.float32(0.0)
    a13 = np.float32(0.0)
    a14 = np.float32(0.0)
    a15 = np.float32(0.0)
    a16 = np.float32(0.0)
    a17 = np.float32(0.0)
    a18 = np.float32(0.0)
    a19 = np.float32(0.0)
    a20 = np.float32(0.0)
    a21 = np.float32(0.0)
    a22 = np.float32(0.0)
    a23 = np.float32(0.0)
    a24 = np.float32(0.0)
    a25 = np.float32(0.0)
    a26 = np.float32(0.0)
    a27 = np.float32(0.0)
    a28 = np.float32(0.0)
    a29 = np.float32(0.0)
    a30 = np.float32(0.0)
    a31 = np.float32(0.0)
    a32 = np.float32(0.0)
    a33 = np.float32(0.0)
    a34 = np.float32(0.0)
    a35 = np.float32(0.0)
    a36 = np.float32(0.0)
    a37 = np.float32(0.0)
    a38 = np.float32(0.0)
    a39 = np.float32(0.0)
    a40 = np.float32(0.0)
    a41 = np.float32(0.0)
    a42 = np.float32(0.0)
    a43 = np.float32(0.0)
    a44 = np.float32(0.0)
    a45 = np.float32(0.0)
    a46 = np.float32(0.0)
    a47 = np.float32(0.0)
    a48 = np.float32(0.0)
    a49 = np.float32(0.0)
    a50 = np.float32(0.0)
    a51 = np.float32(0.0)
    a52 = np.float32(0.0)
    a53 = np.float32(0.0)
    a54 = np.float32(0.0)
    a55 = np.float32(0.0)
    a56 = np.float32(0.0)
    a57 = np.float32(0.0)
    a58 = np.float32(0.0)
    a59 = np.float32(0.0)
    a60 = np.float32(0.0)
    a61 = np.float32(0.0)
    a62 = np.float32(0.0)
    a63 = np.float32(0.0)
    a64 = np.float32(0.0)
    for t in prange(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
        a5 += x[4, i] * y[4, j]
        a6 += x[5, i] * y[5, j]
        a7 += x[6, i] * y[6, j]
        a8 += x[7, i] * y[7, j]
        a9 += x[8, i] * y[8, j]
        a10 += x[9, i] * y[9, j]
        a11 += x[10, i] * y[10, j]
        a12 += x[11, i] * y[11, j]
        a13 += x[12, i] * y[12, j]
        a14 += x[13, i] * y[13, j]
        a15 += x[14, i] * y[14, j]
        a16 += x[15, i] * y[15, j]
        a17 += x[16, i] * y[16, j]
        a18 += x[17, i] * y[17, j]
        a19 += x[18, i] * y[18, j]
        a20 += x[19, i] * y[19, j]
        a21 += x[20, i] * y[20, j]
        a22 += x[21, i] * y[21, j]
        a23 += x[22, i] * y[22, j]
        a24 += x[23, i] * y[23, j]
        a25 += x[24, i] * y[24, j]
        a26 += x[25, i] * y[25, j]
        a27 += x[26, i] * y[26, j]
        a28 += x[27, i] * y[27, j]
        a29 += x[28, i] * y[28, j]
        a30 += x[29, i] * y[29, j]
        a31 += x[30, i] * y[30, j]
        a32 += x[31, i] * y[31, j]
        a33 += x[32, i] * y[32, j]
        a34 += x[33, i] * y[33, j]
        a35 += x[34, i] * y[34, j]
        a36 += x[35, i] * y[35, j]
        a37 += x[36, i] * y[36, j]
        a38 += x[37, i] * y[37, j]
        a39 += x[38, i] * y[38, j]
        a40 += x[39, i] * y[39, j]
        a41 += x[40, i] * y[40, j]
        a42 += x[41, i] * y[41, j]
        a43 += x[42, i] * y[42, j]
        a44 += x[43, i] * y[43, j]
        a45 += x[44, i] * y[44, j]
        a46 += x[45, i] * y[45, j]
        a47 += x[46, i] * y[46, j]
        a48 += x[47, i] * y[47, j]
        a49 += x[48, i] * y[48, j]
        a50 += x[49, i] * y[49, j]
        a51 += x[50, i] * y[50, j]
        a52 += x[51, i] * y[51, j]
        a53 += x[52, i] * y[52, j]
        a54 += x[53, i] * y[53, j]
        a55 += x[54, i] * y[54, j]
        a56 += x[55, i] * y[55, j]
        a57 += x[56, i] * y[56, j]
        a58 += x[57, i] * y[57, j]
        a59 += x[58, i] * y[58, j]
        a60 += x[59, i] * y[59, j]
        a61 += x[60, i] * y[60, j]
        a62 += x[61, i] * y[61, j]
        a63 += x[62, i] * y[62, j]
        a64 += x[63, i] * y[63, j]
    out = np.empty(64, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    out[4] = a5
    out[5] = a6
    out[6] = a7
    out[7] = a8
    out[8] = a9
    out[9] = a10
    out[10] = a11
    out[11] = a12
    out[12] = a13
    out[13] = a14
    out[14] = a15
    out[15] = a16
    out[16] = a17
    out[17] = a18
    out[18] = a19
    out[19] = a20
    out[20] = a21
    out[21] = a22
    out[22] = a23
    out[23] = a24
    out[24] = a25
    out[25] = a26
    out[26] = a27
    out[27] = a28
    out[28] = a29
    out[29] = a30
    out[30] = a31
    out[31] = a32
    out[32] = a33
    out[33] = a34
    out[34] = a35
    out[35] = a36
    out[36] = a37
    out[37] = a38
    out[38] = a39
    out[39] = a40
    out[40] = a41
    out[41] = a42
    out[42] = a43
    out[43] = a44
    out[44] = a45
    out[45] = a46
    out[46] = a47
    out[47] = a48
    out[48] = a49
    out[49] = a50
    out[50] = a51
    out[51] = a52
    out[52] = a53
    out[53] = a54
    out[54] = a55
    out[55] = a56
    out[56] = a57
    out[57] = a58
    out[58] = a59
    out[59] = a60
    out[60] = a61
    out[61] = a62
    out[62] = a63
    out[63] = a64
    return out

reduce_scalars_64 = njit(parallel=True, cache=True)(reduce_scalars_64)

# m = 128 (single-worker)
def reduce_scalars_128(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    a5 = np.float32(0.0)
    a6 = np.float32(0.0)
    a7 = np.float32(0.0)
    a8 = np.float32(0.0)
    a9 = np.float32(0.0)
    a10 = np.float32(0.0)
    a11 = np.float32(0.0)
    a12 = np.float32(0.0)
    a13 = np.float32(0.0)
    a14 = np.float32(0.0)
    a15 = np.float32(0.0)
    a16 = np.float32(0.0)
    a17 = np.float32(0.0)
    a18 = np.float32(0.0)
    a19 = np.float32(0.0)
    a20 = np.float32(0.0)
    a21 = np.float32(0.0)
    a22 = np.float32(0.0)
    a23 = np.float32(0.0)
    a24 = np.float32(0.0)
    a25 = np.float32(0.0)
    a26 = np.float32(0.0)
    a27 = np.float32(0.0)
    a28 = np.float32(0.0)
    a29 = np.float32(0.0)
    a30 = np.float32(0.0)
    a31 = np.float32(0.0)
    a32 = np.float32(0.0)
    a33 = np.float32(0.0)
    a34 = np.float32(0.0)
    a35 = np.float32(0.0)
    a36 = np.float32(0.0)
    a37 = np.float32(0.0)
    a38 = np.float32(0.0)
    a39 = np.float32(0.0)
    a40 = np.float32(0.0)
    a41 = np.float32(0.0)
    a42 = np.float32(0.0)
    a43 = np.float32(0.0)
    a44 = np.float32(0.0)
    a45 = np.float32(0.0)
    a46 = np.float32(0.0)
    a47 = np.float32(0.0)
    a48 = np.float32(0.0)
    a49 = np.float32(0.0)
    a50 = np.float32(0.0)
    a51 = np.float32(0.0)
    a52 = np.float32(0.0)
    a53 = np.float32(0.0)
    a54 = np.float32(0.0)
    a55 = np.float32(0.0)
    a56 = np.float32(0.0)
    a57 = np.float32(0.0)
    a58 = np.float32(0.0)
    a59 = np.float32(0.0)
    a60 = np.float32(0.0)
    a61 = np.float32(0.0)
    a62 = np.float32(0.0)
    a63 = np.float32(0.0)
    a64 = np.float32(0.0)
    a65 = np.float32(0.0)
    a66 = np.float32(0.0)
    a67 = np.float32(0.0)
    a68 = np.float32(0.0)
    a69 = np.float32(0.0)
    a70 = np.float32(0.0)
    a71 = np.float32(0.0)
    a72 = np.float32(0.0)
    a73 = np.float32(0.0)
    a74 = np.float32(0.0)
    a75 = np.float32(0.0)
    a76 = np.float32(0.0)
    a77 = np.float32(0.0)
    a78 = np.float32(0.0)
    a79 = np.float32(0.0)
    a80 = np.float32(0.0)
    a81 = np.float32(0.0)
    a82 = np.float32(0.0)
    a83 = np.float32(0.0)
    a84 = np.float32(0.0)
    a85 = np.float32(0.0)
    a86 = np.float32(0.0)
    a87 = np.float32(0.0)
    a88 = np.float32(0.0)
    a89 = np.float32(0.0)
    a90 = np.float32(0.0)
    a91 = np.float32(0.0)
    a92 = np.float32(0.0)
    a93 = np.float32(0.0)
    a94 = np.float32(0.0)
    a95 = np.float32(0.0)
    a96 = np.float32(0.0)
    a97 = np.float32(0.0)
    a98 = np.float32(0.0)
    a99 = np.float32(0.0)
    a100 = np.float32(0.0)
    a101 = np.float32(0.0)
    a102 = np.float32(0.0)
    a103 = np.float32(0.0)
    a104 = np.float32(0.0)
    a105 = np.float32(0.0)
    a106 = np.float32(0.0)
    a107 = np.float32(0.0)
    a108 = np.float32(0.0)
    a109 = np.float32(0.0)
    a110 = np.float32(0.0)
    a111 = np.float32(0.0)
    a112 = np.float32(0.0)
    a113 = np.float32(0.0)
    a114 = np.float32(0.0)
    a115 = np.float32(0.0)
    a116 = np.float32(0.0)
    a117 = np.float32(0.0)
    a118 = np.float32(0.0)
    a119 = np.float32(0.0)
    a120 = np.float32(0.0)
    a121 = np.float32(0.0)
    a122 = np.float32(0.0)
    a123 = np.float32(0.0)
    a124 = np.float32(0.0)
    a125 = np.float32(0.0)
    a126 = np.float32(0.0)
    a127 = np.float32(0.0)
    a128 = np.float32(0.0)
    for t in range(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
        a5 += x[4, i] * y[4, j]
        a6 += x[5, i] * y[5, j]
        a7 += x[6, i] * y[6, j]
        a8 += x[7, i] * y[7, j]
        a9 += x[8, i] * y[8, j]
        a10 += x[9, i] * y[9, j]
        a11 += x[10, i] * y[10, j]
        a12 += x[11, i] * y[11, j]
        a13 += x[12, i] * y[12, j]
        a14 += x[13, i] * y[13, j]
        a15 += x[14, i] * y[14, j]
        a16 += x[15, i] * y[15, j]
        a17 += x[16, i] * y[16, j]
        a18 += x[17, i] * y[17, j]
        a19 += x[18, i] * y[18, j]
        a20 += x[19, i] * y[19, j]
        a21 += x[20, i] * y[20, j]
        a22 += x[21, i] * y[21, j]
        a23 += x[22, i] * y[22, j]
        a24 += x[23, i] * y[23, j]
        a25 += x[24, i] * y[24, j]
        a26 += x[25, i] * y[25, j]
        a27 += x[26, i] * y[26, j]
        a28 += x[27, i] * y[27, j]
        a29 += x[28, i] * y[28, j]
        a30 += x[29, i] * y[29, j]
        a31 += x[30, i] * y[30, j]
        a32 += x[31, i] * y[31, j]
        a33 += x[32, i] * y[32, j]
        a34 += x[33, i] * y[33, j]
        a35 += x[34, i] * y[34, j]
        a36 += x[35, i] * y[35, j]
        a37 += x[36, i] * y[36, j]
        a38 += x[37, i] * y[37, j]
        a39 += x[38, i] * y[38, j]
        a40 += x[39, i] * y[39, j]
        a41 += x[40, i] * y[40, j]
        a42 += x[41, i] * y[41, j]
        a43 += x[42, i] * y[42, j]
        a44 += x[43, i] * y[43, j]
        a45 += x[44, i] * y[44, j]
        a46 += x[45, i] * y[45, j]
        a47 += x[46, i] * y[46, j]
        a48 += x[47, i] * y[47, j]
        a49 += x[48, i] * y[48, j]
        a50 += x[49, i] * y[49, j]
        a51 += x[50, i] * y[50, j]
        a52 += x[51, i] * y[51, j]
        a53 += x[52, i] * y[52, j]
        a54 += x[53, i] * y[53, j]
        a55 += x[54, i] * y[54, j]
        a56 += x[55, i] * y[55, j]
        a57 += x[56, i] * y[56, j]
        a58 += x[57, i] * y[57, j]
        a59 += x[58, i] * y[58, j]
        a60 += x[59, i] * y[59, j]
        a61 += x[60, i] * y[60, j]
        a62 += x[61, i] * y[61, j]
        a63 += x[62, i] * y[62, j]
        a64 += x[63, i] * y[63, j]
        a65 += x[64, i] * y[64, j]
        a66 += x[65, i] * y[65, j]
        a67 += x[66, i] * y[66, j]
        a68 += x[67, i] * y[67, j]
        a69 += x[68, i] * y[68, j]
        a70 += x[69, i] * y[69, j]
        a71 += x[70, i] * y[70, j]
        a72 += x[71, i] * y[71, j]
        a73 += x[72, i] * y[72, j]
        a74 += x[73, i] * y[73, j]
        a75 += x[74, i] * y[74, j]
        a76 += x[75, i] * y[75, j]
        a77 += x[76, i] * y[76, j]
        a78 += x[77, i] * y[77, j]
        a79 += x[78, i] * y[78, j]
        a80 += x[79, i] * y[79, j]
        a81 += x[80, i] * y[80, j]
        a82 += x[81, i] * y[81, j]
        a83 += x[82, i] * y[82, j]
        a84 += x[83, i] * y[83, j]
        a85 += x[84, i] * y[84, j]
        a86 += x[85, i] * y[85, j]
        a87 += x[86, i] * y[86, j]
        a88 += x[87, i] * y[87, j]
        a89 += x[88, i] * y[88, j]
        a90 += x[89, i] * y[89, j]
        a91 += x[90, i] * y[90, j]
        a92 += x[91, i] * y[91, j]
        a93 += x[92, i] * y[92, j]
        a94 += x[93, i] * y[93, j]
        a95 += x[94, i] * y[94, j]
        a96 += x[95, i] * y[95, j]
        a97 += x[96, i] * y[96, j]
        a98 += x[97, i] * y[97, j]
        a99 += x[98, i] * y[98, j]
        a100 += x[99, i] * y[99, j]
        a101 += x[100, i] * y[100, j]
        a102 += x[101, i] * y[101, j]
        a103 += x[102, i] * y[102, j]
        a104 += x[103, i] * y[103, j]
        a105 += x[104, i] * y[104, j]
        a106 += x[105, i] * y[105, j]
        a107 += x[106, i] * y[106, j]
        a108 += x[107, i] * y[107, j]
        a109 += x[108, i] * y[108, j]
        a110 += x[109, i] * y[109, j]
        a111 += x[110, i] * y[110, j]
        a112 += x[111, i] * y[111, j]
        a113 += x[112, i] * y[112, j]
        a114 += x[113, i] * y[113, j]
        a115 += x[114, i] * y[114, j]
        a116 += x[115, i] * y[115, j]
        a117 += x[116, i] * y[116, j]
        a118 += x[117, i] * y[117, j]
        a119 += x[118, i] * y[118, j]
        a120 += x[119, i] * y[119, j]
        a121 += x[120, i] * y[120, j]
        a122 += x[121, i] * y[121, j]
        a123 += x[122, i] * y[122, j]
        a124 += x[123, i] * y[123, j]
        a125 += x[124, i] * y[124, j]
        a126 += x[125, i] * y[125, j]
        a127 += x[126, i] * y[126, j]
        a128 += x[127, i] * y[127, j]
    out = np.empty(128, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    out[4] = a5
    out[5] = a6
    out[6] = a7
    out[7] = a8
    out[8] = a9
    out[9] = a10
    out[10] = a11
    out[11] = a12
    out[12] = a13
    out[13] = a14
    out[14] = a15
    out[15] = a16
    out[16] = a17
    out[17] = a18
    out[18] = a19
    out[19] = a20
    out[20] = a21
    out[21] = a22
    out[22] = a23
    out[23] = a24
    out[24] = a25
    out[25] = a26
    out[26] = a27
    out[27] = a28
    out[28] = a29
    out[29] = a30
    out[30] = a31
    out[31] = a32
    out[32] = a33
    out[33] = a34
    out[34] = a35
    out[35] = a36
    out[36] = a37
    out[37] = a38
    out[38] = a39
    out[39] = a40
    out[40] = a41
    out[41] = a42
    out[42] = a43
    out[43] = a44
    out[44] = a45
    out[45] = a46
    out[46] = a47
    out[47] = a48
    out[48] = a49
    out[49] = a50
    out[50] = a51
    out[51] = a52
    out[52] = a53
    out[53] = a54
    out[54] = a55
    out[55] = a56
    out[56] = a57
    out[57] = a58
    out[58] = a59
    out[59] = a60
    out[60] = a61
    out[61] = a62
    out[62] = a63
    out[63] = a64
    out[64] = a65
    out[65] = a66
    out[66] = a67
    out[67] = a68
    out[68] = a69
    out[69] = a70
    out[70] = a71
    out[71] = a72
    out[72] = a73
    out[73] = a74
    out[74] = a75
    out[75] = a76
    out[76] = a77
    out[77] = a78
    out[78] = a79
    out[79] = a80
    out[80] = a81
    out[81] = a82
    out[82] = a83
    out[83] = a84
    out[84] = a85
    out[85] = a86
    out[86] = a87
    out[87] = a88
    out[88] = a89
    out[89] = a90
    out[90] = a91
    out[91] = a92
    out[92] = a93
    out[93] = a94
    out[94] = a95
    out[95] = a96
    out[96] = a97
    out[97] = a98
    out[98] = a99
    out[99] = a100
    out[100] = a101
    out[101] = a102
    out[102] = a103
    out[103] = a104
    out[104] = a105
    out[105] = a106
    out[106] = a107
    out[107] = a108
    out[108] = a109
    out[109] = a110
    out[110] = a111
    out[111] = a112
    out[112] = a113
    out[113] = a114
    out[114] = a115
    out[115] = a116
    out[116] = a117
    out[117] = a118
    out[118] = a119
    out[119] = a120
    out[120] = a121
    out[121] = a122
    out[122] = a123
    out[123] = a124
    out[124] = a125
    out[125] = a126
    out[126] = a127
    out[127] = a128
    return out

reduce_scalars_128 = njit(parallel=False, cache=True)(reduce_scalars_128)

# m = 256 (single-worker)
def reduce_scalars_256(x, y):
    n = x.shape[1]
    nn = np.int64(n) * np.int64(n)
    a1 = np.float32(0.0)
    a2 = np.float32(0.0)
    a3 = np.float32(0.0)
    a4 = np.float32(0.0)
    a5 = np.float32(0.0)
    a6 = np.float32(0.0)
    a7 = np.float32(0.0)
    a8 = np.float32(0.0)
    a9 = np.float32(0.0)
    a10 = np.float32(0.0)
    a11 = np.float32(0.0)
    a12 = np.float32(0.0)
    a13 = np.float32(0.0)
    a14 = np.float32(0.0)
    a15 = np.float32(0.0)
    a16 = np.float32(0.0)
    a17 = np.float32(0.0)
    a18 = np.float32(0.0)
    a19 = np.float32(0.0)
    a20 = np.float32(0.0)
    a21 = np.float32(0.0)
    a22 = np.float32(0.0)
    a23 = np.float32(0.0)
    a24 = np.float32(0.0)
    a25 = np.float32(0.0)
    a26 = np.float32(0.0)
    a27 = np.float32(0.0)
    a28 = np.float32(0.0)
    a29 = np.float32(0.0)
    a30 = np.float32(0.0)
    a31 = np.float32(0.0)
    a32 = np.float32(0.0)
    a33 = np.float32(0.0)
    a34 = np.float32(0.0)
    a35 = np.float32(0.0)
    a36 = np.float32(0.0)
    a37 = np.float32(0.0)
    a38 = np.float32(0.0)
    a39 = np.float32(0.0)
    a40 = np.float32(0.0)
    a41 = np.float32(0.0)
    a42 = np.float32(0.0)
    a43 = np.float32(0.0)
    a44 = np.float32(0.0)
    a45 = np.float32(0.0)
    a46 = np.float32(0.0)
    a47 = np.float32(0.0)
    a48 = np.float32(0.0)
    a49 = np.float32(0.0)
    a50 = np.float32(0.0)
    a51 = np.float32(0.0)
    a52 = np.float32(0.0)
    a53 = np.float32(0.0)
    a54 = np.float32(0.0)
    a55 = np.float32(0.0)
    a56 = np.float32(0.0)
    a57 = np.float32(0.0)
    a58 = np.float32(0.0)
    a59 = np.float32(0.0)
    a60 = np.float32(0.0)
    a61 = np.float32(0.0)
    a62 = np.float32(0.0)
    a63 = np.float32(0.0)
    a64 = np.float32(0.0)
    a65 = np.float32(0.0)
    a66 = np.float32(0.0)
    a67 = np.float32(0.0)
    a68 = np.float32(0.0)
    a69 = np.float32(0.0)
    a70 = np.float32(0.0)
    a71 = np.float32(0.0)
    a72 = np.float32(0.0)
    a73 = np.float32(0.0)
    a74 = np.float32(0.0)
    a75 = np.float32(0.0)
    a76 = np.float32(0.0)
    a77 = np.float32(0.0)
    a78 = np.float32(0.0)
    a79 = np.float32(0.0)
    a80 = np.float32(0.0)
    a81 = np.float32(0.0)
    a82 = np.float32(0.0)
    a83 = np.float32(0.0)
    a84 = np.float32(0.0)
    a85 = np.float32(0.0)
    a86 = np.float32(0.0)
    a87 = np.float32(0.0)
    a88 = np.float32(0.0)
    a89 = np.float32(0.0)
    a90 = np.float32(0.0)
    a91 = np.float32(0.0)
    a92 = np.float32(0.0)
    a93 = np.float32(0.0)
    a94 = np.float32(0.0)
    a95 = np.float32(0.0)
    a96 = np.float32(0.0)
    a97 = np.float32(0.0)
    a98 = np.float32(0.0)
    a99 = np.float32(0.0)
    a100 = np.float32(0.0)
    a101 = np.float32(0.0)
    a102 = np.float32(0.0)
    a103 = np.float32(0.0)
    a104 = np.float32(0.0)
    a105 = np.float32(0.0)
    a106 = np.float32(0.0)
    a107 = np.float32(0.0)
    a108 = np.float32(0.0)
    a109 = np.float32(0.0)
    a110 = np.float32(0.0)
    a111 = np.float32(0.0)
    a112 = np.float32(0.0)
    a113 = np.float32(0.0)
    a114 = np.float32(0.0)
    a115 = np.float32(0.0)
    a116 = np.float32(0.0)
    a117 = np.float32(0.0)
    a118 = np.float32(0.0)
    a119 = np.float32(0.0)
    a120 = np.float32(0.0)
    a121 = np.float32(0.0)
    a122 = np.float32(0.0)
    a123 = np.float32(0.0)
    a124 = np.float32(0.0)
    a125 = np.float32(0.0)
    a126 = np.float32(0.0)
    a127 = np.float32(0.0)
    a128 = np.float32(0.0)
    a129 = np.float32(0.0)
    a130 = np.float32(0.0)
    a131 = np.float32(0.0)
    a132 = np.float32(0.0)
    a133 = np.float32(0.0)
    a134 = np.float32(0.0)
    a135 = np.float32(0.0)
    a136 = np.float32(0.0)
    a137 = np.float32(0.0)
    a138 = np.float32(0.0)
    a139 = np.float32(0.0)
    a140 = np.float32(0.0)
    a141 = np.float32(0.0)
    a142 = np.float32(0.0)
    a143 = np.float32(0.0)
    a144 = np.float32(0.0)
    a145 = np.float32(0.0)
    a146 = np.float32(0.0)
    a147 = np.float32(0.0)
    a148 = np.float32(0.0)
    a149 = np.float32(0.0)
    a150 = np.float32(0.0)
    a151 = np.float32(0.0)
    a152 = np.float32(0.0)
    a153 = np.float32(0.0)
    a154 = np.float32(0.0)
    a155 = np.float32(0.0)
    a156 = np.float32(0.0)
    a157 = np.float32(0.0)
    a158 = np.float32(0.0)
    a159 = np.float32(0.0)
    a160 = np.float32(0.0)
    a161 = np.float32(0.0)
    a162 = np.float32(0.0)
    a163 = np.float32(0.0)
    a164 = np.float32(0.0)
    a165 = np.float32(0.0)
    a166 = np.float32(0.0)
    a167 = np.float32(0.0)
    a168 = np.float32(0.0)
    a169 = np.float32(0.0)
    a170 = np.float32(0.0)
    a171 = np.float32(0.0)
    a172 = np.float32(0.0)
    a173 = np.float32(0.0)
    a174 = np.float32(0.0)
    a175 = np.float32(0.0)
    a176 = np.float32(0.0)
    a177 = np.float32(0.0)
    a178 = np.float32(0.0)
    a179 = np.float32(0.0)
    a180 = np.float32(0.0)
    a181 = np.float32(0.0)
    a182 = np.float32(0.0)
    a183 = np.float32(0.0)
    a184 = np.float32(0.0)
    a185 = np.float32(0.0)
    a186 = np.float32(0.0)
    a187 = np.float32(0.0)
    a188 = np.float32(0.0)
    a189 = np.float32(0.0)
    a190 = np.float32(0.0)
    a191 = np.float32(0.0)
    a192 = np.float32(0.0)
    a193 = np.float32(0.0)
    a194 = np.float32(0.0)
    a195 = np.float32(0.0)
    a196 = np.float32(0.0)
    a197 = np.float32(0.0)
    a198 = np.float32(0.0)
    a199 = np.float32(0.0)
    a200 = np.float32(0.0)
    a201 = np.float32(0.0)
    a202 = np.float32(0.0)
    a203 = np.float32(0.0)
    a204 = np.float32(0.0)
    a205 = np.float32(0.0)
    a206 = np.float32(0.0)
    a207 = np.float32(0.0)
    a208 = np.float32(0.0)
    a209 = np.float32(0.0)
    a210 = np.float32(0.0)
    a211 = np.float32(0.0)
    a212 = np.float32(0.0)
    a213 = np.float32(0.0)
    a214 = np.float32(0.0)
    a215 = np.float32(0.0)
    a216 = np.float32(0.0)
    a217 = np.float32(0.0)
    a218 = np.float32(0.0)
    a219 = np.float32(0.0)
    a220 = np.float32(0.0)
    a221 = np.float32(0.0)
    a222 = np.float32(0.0)
    a223 = np.float32(0.0)
    a224 = np.float32(0.0)
    a225 = np.float32(0.0)
    a226 = np.float32(0.0)
    a227 = np.float32(0.0)
    a228 = np.float32(0.0)
    a229 = np.float32(0.0)
    a230 = np.float32(0.0)
    a231 = np.float32(0.0)
    a232 = np.float32(0.0)
    a233 = np.float32(0.0)
    a234 = np.float32(0.0)
    a235 = np.float32(0.0)
    a236 = np.float32(0.0)
    a237 = np.float32(0.0)
    a238 = np.float32(0.0)
    a239 = np.float32(0.0)
    a240 = np.float32(0.0)
    a241 = np.float32(0.0)
    a242 = np.float32(0.0)
    a243 = np.float32(0.0)
    a244 = np.float32(0.0)
    a245 = np.float32(0.0)
    a246 = np.float32(0.0)
    a247 = np.float32(0.0)
    a248 = np.float32(0.0)
    a249 = np.float32(0.0)
    a250 = np.float32(0.0)
    a251 = np.float32(0.0)
    a252 = np.float32(0.0)
    a253 = np.float32(0.0)
    a254 = np.float32(0.0)
    a255 = np.float32(0.0)
    a256 = np.float32(0.0)
    for t in range(nn):
        i = t // n
        j = t % n
        a1 += x[0, i] * y[0, j]
        a2 += x[1, i] * y[1, j]
        a3 += x[2, i] * y[2, j]
        a4 += x[3, i] * y[3, j]
        a5 += x[4, i] * y[4, j]
        a6 += x[5, i] * y[5, j]
        a7 += x[6, i] * y[6, j]
        a8 += x[7, i] * y[7, j]
        a9 += x[8, i] * y[8, j]
        a10 += x[9, i] * y[9, j]
        a11 += x[10, i] * y[10, j]
        a12 += x[11, i] * y[11, j]
        a13 += x[12, i] * y[12, j]
        a14 += x[13, i] * y[13, j]
        a15 += x[14, i] * y[14, j]
        a16 += x[15, i] * y[15, j]
        a17 += x[16, i] * y[16, j]
        a18 += x[17, i] * y[17, j]
        a19 += x[18, i] * y[18, j]
        a20 += x[19, i] * y[19, j]
        a21 += x[20, i] * y[20, j]
        a22 += x[21, i] * y[21, j]
        a23 += x[22, i] * y[22, j]
        a24 += x[23, i] * y[23, j]
        a25 += x[24, i] * y[24, j]
        a26 += x[25, i] * y[25, j]
        a27 += x[26, i] * y[26, j]
        a28 += x[27, i] * y[27, j]
        a29 += x[28, i] * y[28, j]
        a30 += x[29, i] * y[29, j]
        a31 += x[30, i] * y[30, j]
        a32 += x[31, i] * y[31, j]
        a33 += x[32, i] * y[32, j]
        a34 += x[33, i] * y[33, j]
        a35 += x[34, i] * y[34, j]
        a36 += x[35, i] * y[35, j]
        a37 += x[36, i] * y[36, j]
        a38 += x[37, i] * y[37, j]
        a39 += x[38, i] * y[38, j]
        a40 += x[39, i] * y[39, j]
        a41 += x[40, i] * y[40, j]
        a42 += x[41, i] * y[41, j]
        a43 += x[42, i] * y[42, j]
        a44 += x[43, i] * y[43, j]
        a45 += x[44, i] * y[44, j]
        a46 += x[45, i] * y[45, j]
        a47 += x[46, i] * y[46, j]
        a48 += x[47, i] * y[47, j]
        a49 += x[48, i] * y[48, j]
        a50 += x[49, i] * y[49, j]
        a51 += x[50, i] * y[50, j]
        a52 += x[51, i] * y[51, j]
        a53 += x[52, i] * y[52, j]
        a54 += x[53, i] * y[53, j]
        a55 += x[54, i] * y[54, j]
        a56 += x[55, i] * y[55, j]
        a57 += x[56, i] * y[56, j]
        a58 += x[57, i] * y[57, j]
        a59 += x[58, i] * y[58, j]
        a60 += x[59, i] * y[59, j]
        a61 += x[60, i] * y[60, j]
        a62 += x[61, i] * y[61, j]
        a63 += x[62, i] * y[62, j]
        a64 += x[63, i] * y[63, j]
        a65 += x[64, i] * y[64, j]
        a66 += x[65, i] * y[65, j]
        a67 += x[66, i] * y[66, j]
        a68 += x[67, i] * y[67, j]
        a69 += x[68, i] * y[68, j]
        a70 += x[69, i] * y[69, j]
        a71 += x[70, i] * y[70, j]
        a72 += x[71, i] * y[71, j]
        a73 += x[72, i] * y[72, j]
        a74 += x[73, i] * y[73, j]
        a75 += x[74, i] * y[74, j]
        a76 += x[75, i] * y[75, j]
        a77 += x[76, i] * y[76, j]
        a78 += x[77, i] * y[77, j]
        a79 += x[78, i] * y[78, j]
        a80 += x[79, i] * y[79, j]
        a81 += x[80, i] * y[80, j]
        a82 += x[81, i] * y[81, j]
        a83 += x[82, i] * y[82, j]
        a84 += x[83, i] * y[83, j]
        a85 += x[84, i] * y[84, j]
        a86 += x[85, i] * y[85, j]
        a87 += x[86, i] * y[86, j]
        a88 += x[87, i] * y[87, j]
        a89 += x[88, i] * y[88, j]
        a90 += x[89, i] * y[89, j]
        a91 += x[90, i] * y[90, j]
        a92 += x[91, i] * y[91, j]
        a93 += x[92, i] * y[92, j]
        a94 += x[93, i] * y[93, j]
        a95 += x[94, i] * y[94, j]
        a96 += x[95, i] * y[95, j]
        a97 += x[96, i] * y[96, j]
        a98 += x[97, i] * y[97, j]
        a99 += x[98, i] * y[98, j]
        a100 += x[99, i] * y[99, j]
        a101 += x[100, i] * y[100, j]
        a102 += x[101, i] * y[101, j]
        a103 += x[102, i] * y[102, j]
        a104 += x[103, i] * y[103, j]
        a105 += x[104, i] * y[104, j]
        a106 += x[105, i] * y[105, j]
        a107 += x[106, i] * y[106, j]
        a108 += x[107, i] * y[107, j]
        a109 += x[108, i] * y[108, j]
        a110 += x[109, i] * y[109, j]
        a111 += x[110, i] * y[110, j]
        a112 += x[111, i] * y[111, j]
        a113 += x[112, i] * y[112, j]
        a114 += x[113, i] * y[113, j]
        a115 += x[114, i] * y[114, j]
        a116 += x[115, i] * y[115, j]
        a117 += x[116, i] * y[116, j]
        a118 += x[117, i] * y[117, j]
        a119 += x[118, i] * y[118, j]
        a120 += x[119, i] * y[119, j]
        a121 += x[120, i] * y[120, j]
        a122 += x[121, i] * y[121, j]
        a123 += x[122, i] * y[122, j]
        a124 += x[123, i] * y[123, j]
        a125 += x[124, i] * y[124, j]
        a126 += x[125, i] * y[125, j]
        a127 += x[126, i] * y[126, j]
        a128 += x[127, i] * y[127, j]
        a129 += x[128, i] * y[128, j]
        a130 += x[129, i] * y[129, j]
        a131 += x[130, i] * y[130, j]
        a132 += x[131, i] * y[131, j]
        a133 += x[132, i] * y[132, j]
        a134 += x[133, i] * y[133, j]
        a135 += x[134, i] * y[134, j]
        a136 += x[135, i] * y[135, j]
        a137 += x[136, i] * y[136, j]
        a138 += x[137, i] * y[137, j]
        a139 += x[138, i] * y[138, j]
        a140 += x[139, i] * y[139, j]
        a141 += x[140, i] * y[140, j]
        a142 += x[141, i] * y[141, j]
        a143 += x[142, i] * y[142, j]
        a144 += x[143, i] * y[143, j]
        a145 += x[144, i] * y[144, j]
        a146 += x[145, i] * y[145, j]
        a147 += x[146, i] * y[146, j]
        a148 += x[147, i] * y[147, j]
        a149 += x[148, i] * y[148, j]
        a150 += x[149, i] * y[149, j]
        a151 += x[150, i] * y[150, j]
        a152 += x[151, i] * y[151, j]
        a153 += x[152, i] * y[152, j]
        a154 += x[153, i] * y[153, j]
        a155 += x[154, i] * y[154, j]
        a156 += x[155, i] * y[155, j]
        a157 += x[156, i] * y[156, j]
        a158 += x[157, i] * y[157, j]
        a159 += x[158, i] * y[158, j]
        a160 += x[159, i] * y[159, j]
        a161 += x[160, i] * y[160, j]
        a162 += x[161, i] * y[161, j]
        a163 += x[162, i] * y[162, j]
        a164 += x[163, i] * y[163, j]
        a165 += x[164, i] * y[164, j]
        a166 += x[165, i] * y[165, j]
        a167 += x[166, i] * y[166, j]
        a168 += x[167, i] * y[167, j]
        a169 += x[168, i] * y[168, j]
        a170 += x[169, i] * y[169, j]
        a171 += x[170, i] * y[170, j]
        a172 += x[171, i] * y[171, j]
        a173 += x[172, i] * y[172, j]
        a174 += x[173, i] * y[173, j]
        a175 += x[174, i] * y[174, j]
        a176 += x[175, i] * y[175, j]
        a177 += x[176, i] * y[176, j]
        a178 += x[177, i] * y[177, j]
        a179 += x[178, i] * y[178, j]
        a180 += x[179, i] * y[179, j]
        a181 += x[180, i] * y[180, j]
        a182 += x[181, i] * y[181, j]
        a183 += x[182, i] * y[182, j]
        a184 += x[183, i] * y[183, j]
        a185 += x[184, i] * y[184, j]
        a186 += x[185, i] * y[185, j]
        a187 += x[186, i] * y[186, j]
        a188 += x[187, i] * y[187, j]
        a189 += x[188, i] * y[188, j]
        a190 += x[189, i] * y[189, j]
        a191 += x[190, i] * y[190, j]
        a192 += x[191, i] * y[191, j]
        a193 += x[192, i] * y[192, j]
        a194 += x[193, i] * y[193, j]
        a195 += x[194, i] * y[194, j]
        a196 += x[195, i] * y[195, j]
        a197 += x[196, i] * y[196, j]
        a198 += x[197, i] * y[197, j]
        a199 += x[198, i] * y[198, j]
        a200 += x[199, i] * y[199, j]
        a201 += x[200, i] * y[200, j]
        a202 += x[201, i] * y[201, j]
        a203 += x[202, i] * y[202, j]
        a204 += x[203, i] * y[203, j]
        a205 += x[204, i] * y[204, j]
        a206 += x[205, i] * y[205, j]
        a207 += x[206, i] * y[206, j]
        a208 += x[207, i] * y[207, j]
        a209 += x[208, i] * y[208, j]
        a210 += x[209, i] * y[209, j]
        a211 += x[210, i] * y[210, j]
        a212 += x[211, i] * y[211, j]
        a213 += x[212, i] * y[212, j]
        a214 += x[213, i] * y[213, j]
        a215 += x[214, i] * y[214, j]
        a216 += x[215, i] * y[215, j]
        a217 += x[216, i] * y[216, j]
        a218 += x[217, i] * y[217, j]
        a219 += x[218, i] * y[218, j]
        a220 += x[219, i] * y[219, j]
        a221 += x[220, i] * y[220, j]
        a222 += x[221, i] * y[221, j]
        a223 += x[222, i] * y[222, j]
        a224 += x[223, i] * y[223, j]
        a225 += x[224, i] * y[224, j]
        a226 += x[225, i] * y[225, j]
        a227 += x[226, i] * y[226, j]
        a228 += x[227, i] * y[227, j]
        a229 += x[228, i] * y[228, j]
        a230 += x[229, i] * y[229, j]
        a231 += x[230, i] * y[230, j]
        a232 += x[231, i] * y[231, j]
        a233 += x[232, i] * y[232, j]
        a234 += x[233, i] * y[233, j]
        a235 += x[234, i] * y[234, j]
        a236 += x[235, i] * y[235, j]
        a237 += x[236, i] * y[236, j]
        a238 += x[237, i] * y[237, j]
        a239 += x[238, i] * y[238, j]
        a240 += x[239, i] * y[239, j]
        a241 += x[240, i] * y[240, j]
        a242 += x[241, i] * y[241, j]
        a243 += x[242, i] * y[242, j]
        a244 += x[243, i] * y[243, j]
        a245 += x[244, i] * y[244, j]
        a246 += x[245, i] * y[245, j]
        a247 += x[246, i] * y[246, j]
        a248 += x[247, i] * y[247, j]
        a249 += x[248, i] * y[248, j]
        a250 += x[249, i] * y[249, j]
        a251 += x[250, i] * y[250, j]
        a252 += x[251, i] * y[251, j]
        a253 += x[252, i] * y[252, j]
        a254 += x[253, i] * y[253, j]
        a255 += x[254, i] * y[254, j]
        a256 += x[255, i] * y[255, j]
    out = np.empty(256, np.float32)
    out[0] = a1
    out[1] = a2
    out[2] = a3
    out[3] = a4
    out[4] = a5
    out[5] = a6
    out[6] = a7
    out[7] = a8
    out[8] = a9
    out[9] = a10
    out[10] = a11
    out[11] = a12
    out[12] = a13
    out[13] = a14
    out[14] = a15
    out[15] = a16
    out[16] = a17
    out[17] = a18
    out[18] = a19
    out[19] = a20
    out[20] = a21
    out[21] = a22
    out[22] = a23
    out[23] = a24
    out[24] = a25
    out[25] = a26
    out[26] = a27
    out[27] = a28
    out[28] = a29
    out[29] = a30
    out[30] = a31
    out[31] = a32
    out[32] = a33
    out[33] = a34
    out[34] = a35
    out[35] = a36
    out[36] = a37
    out[37] = a38
    out[38] = a39
    out[39] = a40
    out[40] = a41
    out[41] = a42
    out[42] = a43
    out[43] = a44
    out[44] = a45
    out[45] = a46
    out[46] = a47
    out[47] = a48
    out[48] = a49
    out[49] = a50
    out[50] = a51
    out[51] = a52
    out[52] = a53
    out[53] = a54
    out[54] = a55
    out[55] = a56
    out[56] = a57
    out[57] = a58
    out[58] = a59
    out[59] = a60
    out[60] = a61
    out[61] = a62
    out[62] = a63
    out[63] = a64
    out[64] = a65
    out[65] = a66
    out[66] = a67
    out[67] = a68
    out[68] = a69
    out[69] = a70
    out[70] = a71
    out[71] = a72
    out[72] = a73
    out[73] = a74
    out[74] = a75
    out[75] = a76
    out[76] = a77
    out[77] = a78
    out[78] = a79
    out[79] = a80
    out[80] = a81
    out[81] = a82
    out[82] = a83
    out[83] = a84
    out[84] = a85
    out[85] = a86
    out[86] = a87
    out[87] = a88
    out[88] = a89
    out[89] = a90
    out[90] = a91
    out[91] = a92
    out[92] = a93
    out[93] = a94
    out[94] = a95
    out[95] = a96
    out[96] = a97
    out[97] = a98
    out[98] = a99
    out[99] = a100
    out[100] = a101
    out[101] = a102
    out[102] = a103
    out[103] = a104
    out[104] = a105
    out[105] = a106
    out[106] = a107
    out[107] = a108
    out[108] = a109
    out[109] = a110
    out[110] = a111
    out[111] = a112
    out[112] = a113
    out[113] = a114
    out[114] = a115
    out[115] = a116
    out[116] = a117
    out[117] = a118
    out[118] = a119
    out[119] = a120
    out[120] = a121
    out[121] = a122
    out[122] = a123
    out[123] = a124
    out[124] = a125
    out[125] = a126
    out[126] = a127
    out[127] = a128
    out[128] = a129
    out[129] = a130
    out[130] = a131
    out[131] = a132
    out[132] = a133
    out[133] = a134
    out[134] = a135
    out[135] = a136
    out[136] = a137
    out[137] = a138
    out[138] = a139
    out[139] = a140
    out[140] = a141
    out[141] = a142
    out[142] = a143
    out[143] = a144
    out[144] = a145
    out[145] = a146
    out[146] = a147
    out[147] = a148
    out[148] = a149
    out[149] = a150
    out[150] = a151
    out[151] = a152
    out[152] = a153
    out[153] = a154
    out[154] = a155
    out[155] = a156
    out[156] = a157
    out[157] = a158
    out[158] = a159
    out[159] = a160
    out[160] = a161
    out[161] = a162
    out[162] = a163
    out[163] = a164
    out[164] = a165
    out[165] = a166
    out[166] = a167
    out[167] = a168
    out[168] = a169
    out[169] = a170
    out[170] = a171
    out[171] = a172
    out[172] = a173
    out[173] = a174
    out[174] = a175
    out[175] = a176
    out[176] = a177
    out[177] = a178
    out[178] = a179
    out[179] = a180
    out[180] = a181
    out[181] = a182
    out[182] = a183
    out[183] = a184
    out[184] = a185
    out[185] = a186
    out[186] = a187
    out[187] = a188
    out[188] = a189
    out[189] = a190
    out[190] = a191
    out[191] = a192
    out[192] = a193
    out[193] = a194
    out[194] = a195
    out[195] = a196
    out[196] = a197
    out[197] = a198
    out[198] = a199
    out[199] = a200
    out[200] = a201
    out[201] = a202
    out[202] = a203
    out[203] = a204
    out[204] = a205
    out[205] = a206
    out[206] = a207
    out[207] = a208
    out[208] = a209
    out[209] = a210
    out[210] = a211
    out[211] = a212
    out[212] = a213
    out[213] = a214
    out[214] = a215
    out[215] = a216
    out[216] = a217
    out[217] = a218
    out[218] = a219
    out[219] = a220
    out[220] = a221
    out[221] = a222
    out[222] = a223
    out[223] = a224
    out[224] = a225
    out[225] = a226
    out[226] = a227
    out[227] = a228
    out[228] = a229
    out[229] = a230
    out[230] = a231
    out[231] = a232
    out[232] = a233
    out[233] = a234
    out[234] = a235
    out[235] = a236
    out[236] = a237
    out[237] = a238
    out[238] = a239
    out[239] = a240
    out[240] = a241
    out[241] = a242
    out[242] = a243
    out[243] = a244
    out[244] = a245
    out[245] = a246
    out[246] = a247
    out[247] = a248
    out[248] = a249
    out[249] = a250
    out[250] = a251
    out[251] = a252
    out[252] = a253
    out[253] = a254
    out[254] = a255
    out[255] = a256
    return out

reduce_scalars_256 = njit(parallel=False, cache=True)(reduce_scalars_256)

REGISTRY = {2: reduce_scalars_2, 3: reduce_scalars_3, 4: reduce_scalars_4, 8: reduce_scalars_8, 16: reduce_scalars_16, 32: reduce_scalars_32, 64: reduce_scalars_64, 128: reduce_scalars_128, 256: reduce_scalars_256}
