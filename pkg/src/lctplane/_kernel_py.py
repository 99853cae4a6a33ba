"""Pure-Python term-dictionary kernels.

Reference implementation of the hot inner loops of sparse bivariate
polynomial arithmetic.  A Cython-compiled twin lives in ``_kernel_c.pyx``
and is preferred at import time when available (see ``_kernels``).

Terms are plain dicts mapping ``(i, j)`` exponent pairs to nonzero
``Fraction`` coefficients.
"""

BACKEND = "python"


def add_terms(a, b):
    """Sum of two term dicts, zero coefficients dropped."""
    out = dict(a)
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


def mul_terms(a, b):
    """Product of two term dicts, zero coefficients dropped."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
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


def scale_terms(a, c):
    """Term dict multiplied by a nonzero scalar."""
    return {key: coeff * c for key, coeff in a.items()}
