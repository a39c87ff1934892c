"""Pure-Python kernel for dense integer Laurent-polynomial arithmetic.

A polynomial is a pair ``(off, coeffs)``: ``coeffs[k]`` is the integer
coefficient of ``v**(off + k)``. Canonical form has no zero entries at
either end; the zero polynomial is ``(0, ())``.

The compiled kernel (heckewb._ring_cy) implements the same three
functions with the same contracts.
"""

__all__ = ["add", "mul", "neg"]


def _canon(off, coeffs):
    i = 0
    j = len(coeffs)
    while i < j and coeffs[i] == 0:
        i += 1
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    if i == j:
        return 0, ()
    return off + i, tuple(coeffs[i:j])


def add(aoff, ac, boff, bc):
    if not ac:
        return boff, bc
    if not bc:
        return aoff, ac
    off = min(aoff, boff)
    end = max(aoff + len(ac), boff + len(bc))
    out = [0] * (end - off)
    base = aoff - off
    for k, c in enumerate(ac):
        out[base + k] += c
    base = boff - off
    for k, c in enumerate(bc):
        out[base + k] += c
    return _canon(off, out)


def mul(aoff, ac, boff, bc):
    if not ac or not bc:
        return 0, ()
    if len(ac) == 1:
        a = ac[0]
        return _canon(aoff + boff, [a * b for b in bc])
    if len(bc) == 1:
        b = bc[0]
        return _canon(aoff + boff, [a * b for a in ac])
    out = [0] * (len(ac) + len(bc) - 1)
    for i, a in enumerate(ac):
        if a:
            for j, b in enumerate(bc):
                out[i + j] += a * b
    return _canon(aoff + boff, out)


def neg(off, coeffs):
    return off, tuple(-c for c in coeffs)
