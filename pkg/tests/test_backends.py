"""The compiled and pure Laurent kernels must agree exactly, including
on inputs that force the compiled kernel off its int64 fast path."""

import random

import pytest

import heckewb._ring_py as pure
from heckewb.ring import BACKEND

compiled = pytest.importorskip(
    "heckewb._ring_cy", reason="compiled kernel not built")


def _rand_poly(rng, span=8, mag=50):
    lo = rng.randrange(-span, span)
    n = rng.randrange(1, span)
    return lo, tuple(rng.randrange(-mag, mag + 1) for _ in range(n))


def test_backend_is_reported():
    assert BACKEND in ("compiled", "pure")


def test_kernels_agree_on_random_small_inputs():
    rng = random.Random(7)
    for _ in range(400):
        a = _rand_poly(rng)
        b = _rand_poly(rng)
        assert compiled.add(*a, *b) == pure.add(*a, *b)
        assert compiled.mul(*a, *b) == pure.mul(*a, *b)
        assert compiled.neg(*a) == pure.neg(*a)


def test_kernels_agree_on_huge_coefficients():
    # far beyond the int64 guards: the compiled kernel must fall back
    # and still be exact
    big = 10 ** 30
    a = (-2, (big, -big, 3))
    b = (1, (2 * big, 7))
    assert compiled.mul(*a, *b) == pure.mul(*a, *b)
    assert compiled.add(*a, *b) == pure.add(*a, *b)
    off, coeffs = compiled.mul(*a, *b)
    assert any(abs(c) > 10 ** 55 for c in coeffs)


def test_kernels_agree_near_the_guard_boundary():
    for c in ((1 << 26) - 1, 1 << 26, (1 << 26) + 1,
              (1 << 61) - 1, 1 << 61, (1 << 61) + 1):
        for sign in (1, -1):
            a = (0, (sign * c, 1))
            b = (0, (3, -5))
            assert compiled.mul(*a, *b) == pure.mul(*a, *b)
            assert compiled.add(*a, *b) == pure.add(*a, *b)


def test_kernels_agree_on_long_polynomials():
    rng = random.Random(11)
    a = (-600, tuple(rng.randrange(-5, 6) for _ in range(1500)))
    b = (2, tuple(rng.randrange(-5, 6) for _ in range(1200)))
    assert compiled.mul(*a, *b) == pure.mul(*a, *b)
    assert compiled.add(*a, *b) == pure.add(*a, *b)


def test_canonicalization_matches():
    a = (0, (0, 1, 0))
    # non-canonical input is tolerated identically by both kernels
    assert compiled.add(0, (1, -1), 0, (-1, 1)) \
        == pure.add(0, (1, -1), 0, (-1, 1)) == (0, ())
    assert compiled.mul(3, (), 0, (1,)) == pure.mul(3, (), 0, (1,))


def test_pure_env_flag_selects_fallback():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c",
         "from heckewb.ring import BACKEND; print(BACKEND)"],
        capture_output=True, text=True,
        env={"PATH": "/usr/bin:/bin", "HECKEWB_PURE": "1"})
    assert out.stdout.strip() == "pure"
