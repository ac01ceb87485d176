"""Pure-Python arithmetic kernels.

These are the hot inner loops of every exact computation in the package:
integer polynomial multiplication followed by synthetic division by a monic
modulus.  The compiled twin in ``_ckernel.pyx`` implements the same contract;
``ffhyper.kernel`` picks whichever is importable.

All functions take and return plain lists of Python ints, so results are
always exact regardless of magnitude.
"""

BACKEND = "python"


def polymul(a, b):
    """Schoolbook product of two integer coefficient vectors."""
    la, lb = len(a), len(b)
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def poly_reduce(vec, n, phi_idx, phi_val):
    """Reduce ``vec`` modulo the monic modulus x^n + sum(phi_val[t]*x^phi_idx[t]).

    Synthetic division; the quotient is discarded.  Returns a list of length n.
    """
    v = list(vec)
    if len(v) < n:
        v.extend([0] * (n - len(v)))
        return v
    nz = len(phi_idx)
    for k in range(len(v) - 1, n - 1, -1):
        c = v[k]
        if c:
            v[k] = 0
            base = k - n
            for t in range(nz):
                v[base + phi_idx[t]] -= c * phi_val[t]
    del v[n:]
    return v


def polymul_reduce(a, b, n, phi_idx, phi_val):
    """(a*b) mod the monic modulus described by (n, phi_idx, phi_val)."""
    return poly_reduce(polymul(a, b), n, phi_idx, phi_val)
