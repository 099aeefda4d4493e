# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled product kernel.

Series are multiplied by ``prod (1 - q^k)^e`` modulo several primes just
below ``2**62`` and lifted back to exact integers by CRT.  A float pass over
``prod (1 - q^k)^(-|e|)``, which dominates every coefficient in absolute
value, decides how many primes the lift needs.
"""
from libc.math cimport ceil, isfinite, log2
from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

from . import _kernel_py

cdef list _MODULI = []
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime64(n):
    # deterministic for n < 3.3e24 with these bases
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for q in _MR_BASES:
        x = pow(q, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def moduli(int t):
    """The ``t`` largest primes below ``2**62``."""
    cand = _MODULI[len(_MODULI) - 1] if _MODULI else 2**62
    while len(_MODULI) < t:
        cand -= 1
        while not _is_prime64(cand):
            cand -= 1
        _MODULI.append(cand)
    return _MODULI[:t]


cdef void _mul_mod(uint64_t* c, Py_ssize_t N, Py_ssize_t k, uint64_t P) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(N, k - 1, -1):
        if c[i] >= c[i - k]:
            c[i] = c[i] - c[i - k]
        else:
            c[i] = c[i] + (P - c[i - k])


cdef void _div_mod(uint64_t* c, Py_ssize_t N, Py_ssize_t k, uint64_t P) noexcept nogil:
    cdef Py_ssize_t i
    cdef uint64_t s
    for i in range(k, N + 1):
        s = c[i] + c[i - k]
        c[i] = s - P if s >= P else s


cdef void _div_real(double* c, Py_ssize_t N, Py_ssize_t k) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(k, N + 1):
        c[i] += c[i - k]


cdef double _bound_sum(Py_ssize_t N, Py_ssize_t nf, Py_ssize_t* ks, long* es):
    cdef double* b = <double*> malloc((N + 1) * sizeof(double))
    cdef Py_ssize_t i, f
    cdef long rep
    cdef double total = 0.0
    if b == NULL:
        raise MemoryError()
    b[0] = 1.0
    for i in range(1, N + 1):
        b[i] = 0.0
    with nogil:
        for f in range(nf):
            for rep in range(es[f] if es[f] > 0 else -es[f]):
                _div_real(b, N, ks[f])
        for i in range(N + 1):
            total += b[i]
    free(b)
    return total


def _garner(residues, mods):
    inverses = []
    M = 1
    for P in mods:
        inverses.append(pow(M % P, -1, P))
        M *= P
    half = M // 2
    out = []
    for rs in zip(*residues):
        x = rs[0]
        M = mods[0]
        for i in range(1, len(mods)):
            P = mods[i]
            y = (rs[i] - x) % P * inverses[i] % P
            x += M * y
            M *= P
        out.append(x - M if x > half else x)
    return out


def apply_factors(coeffs, factors):
    """Multiply a truncated series by ``prod (1 - q^k)^e`` over ``(k, e)``.

    Same contract as the pure-Python kernel; results are exact integers.
    """
    c = [int(x) for x in coeffs]
    cdef Py_ssize_t N = len(c) - 1
    fs = []
    for k, e in factors:
        if k < 1:
            raise ValueError(f"factor exponent k must be >= 1, got {k}")
        if k <= N and e:
            fs.append((k, e))
    if N < 0:
        return c
    largest = max(abs(x) for x in c)
    if largest == 0 or not fs:
        return c

    cdef Py_ssize_t nf = len(fs)
    cdef Py_ssize_t* ks = <Py_ssize_t*> malloc(nf * sizeof(Py_ssize_t))
    cdef long* es = <long*> malloc(nf * sizeof(long))
    cdef uint64_t* work = <uint64_t*> malloc((N + 1) * sizeof(uint64_t))
    cdef Py_ssize_t i, f
    cdef long rep
    cdef uint64_t P
    try:
        if ks == NULL or es == NULL or work == NULL:
            raise MemoryError()
        for f in range(nf):
            ks[f] = fs[f][0]
            es[f] = fs[f][1]
        total = _bound_sum(N, nf, ks, es)
        if not isfinite(total):
            return _kernel_py.apply_factors(c, fs)
        # |result| <= largest * total; 8 spare bits absorb float rounding
        bits = largest.bit_length() + int(ceil(log2(total))) + 8
        mods = moduli(bits // 61 + 1)
        residues = []
        for P in mods:
            for i in range(N + 1):
                work[i] = c[i] % P
            with nogil:
                for f in range(nf):
                    if es[f] > 0:
                        for rep in range(es[f]):
                            _mul_mod(work, N, ks[f], P)
                    else:
                        for rep in range(-es[f]):
                            _div_mod(work, N, ks[f], P)
            residues.append([work[i] for i in range(N + 1)])
        return _garner(residues, mods)
    finally:
        free(ks)
        free(es)
        free(work)
