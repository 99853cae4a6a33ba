# cython: language_level=3
"""Cython twin of ``_kernel_py``: term-dictionary add/mul/scale.

Coefficients stay exact Python Fractions; the speedup comes from
compiled loop and dict plumbing, not from approximating arithmetic.
"""

BACKEND = "cython"


def add_terms(dict a, dict b):
    """Sum of two term dicts, zero coefficients dropped."""
    cdef dict out = dict(a)
    cdef tuple key
    for key, coeff in b.items():
        acc = out.get(key)
        if acc is None:
            out[key] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[key] = acc
            else:
                del out[key]
    return out


def mul_terms(dict a, dict b):
    """Product of two term dicts, zero coefficients dropped."""
    cdef dict out = {}
    cdef tuple ka, kb, key
    cdef Py_ssize_t i1, j1
    if len(a) > len(b):
        a, b = b, a
    for ka, c1 in a.items():
        i1 = ka[0]
        j1 = ka[1]
        for kb, c2 in b.items():
            key = (i1 + kb[0], j1 + kb[1])
            acc = out.get(key)
            if acc is None:
                out[key] = c1 * c2
            else:
                acc = acc + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    return out


def scale_terms(dict a, c):
    """Term dict multiplied by a nonzero scalar."""
    cdef dict out = {}
    cdef tuple key
    for key, coeff in a.items():
        out[key] = coeff * c
    return out
