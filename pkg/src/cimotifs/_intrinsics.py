"""Typed LLVM intrinsics the compiled kernels need but numba does not expose.

Two gaps matter here: population count (numba has no public popcount on CPU
targets) and atomic read-modify-write on array elements (numba's atomics are
CUDA-only).  Both are tiny codegen shims: ``llvm.ctpop`` for the former and
``atomicrmw add`` / ``atomicrmw fadd`` for the latter.  The atomic helpers
return the *updated* value, i.e. they are increment-and-fetch operations.

Monotonic ordering is sufficient: every use site is a commutative accumulation
(counter bump or floating add) with no cross-element ordering requirement.
"""

from __future__ import annotations

from llvmlite import ir
from numba import types
from numba.core import cgutils
from numba.extending import intrinsic

__all__ = ["popcount64", "atomic_add_i64", "atomic_add_f32"]


@intrinsic
def popcount64(typingctx, x):
    """Number of set bits in a 64-bit word."""
    if x not in (types.uint64, types.int64):
        return None
    sig = types.int64(types.uint64)

    def codegen(context, builder, signature, args):
        (val,) = args
        fn = builder.module.declare_intrinsic("llvm.ctpop", [ir.IntType(64)])
        return builder.call(fn, [val])

    return sig, codegen


@intrinsic
def atomic_add_i64(typingctx, arr, idx, val):
    """Atomic ``arr[idx] += val`` on an int64 array; returns the new value."""
    if not (isinstance(arr, types.Array) and arr.dtype == types.int64):
        return None
    sig = types.int64(arr, types.intp, types.int64)

    def codegen(context, builder, signature, args):
        arr_v, idx_v, val_v = args
        aryty = signature.args[0]
        ary = context.make_array(aryty)(context, builder, arr_v)
        ptr = cgutils.get_item_pointer(
            context, builder, aryty, ary, (idx_v,), wraparound=False
        )
        old = builder.atomic_rmw("add", ptr, val_v, "monotonic")
        return builder.add(old, val_v)

    return sig, codegen


@intrinsic
def atomic_add_f32(typingctx, arr, idx, val):
    """Atomic ``arr[idx] += val`` on a float32 array; returns the new value."""
    if not (isinstance(arr, types.Array) and arr.dtype == types.float32):
        return None
    sig = types.float32(arr, types.intp, types.float32)

    def codegen(context, builder, signature, args):
        arr_v, idx_v, val_v = args
        aryty = signature.args[0]
        ary = context.make_array(aryty)(context, builder, arr_v)
        ptr = cgutils.get_item_pointer(
            context, builder, aryty, ary, (idx_v,), wraparound=False
        )
        old = builder.atomic_rmw("fadd", ptr, val_v, "monotonic")
        return builder.fadd(old, val_v)

    return sig, codegen
