# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot twin of ``_pure``.

Semantics are identical function by function (the cross-backend test
drives both on the same inputs); permutations stay ``bytes`` at the
boundary and become C arrays inside. Non-hot helpers are re-exported from
the pure module rather than duplicated. Strand counts are limited to 255
by the byte representation, far beyond any feasible workload here.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize

from . import _pure

KIND_ARTIN = 0
KIND_BKL = 1

DEF MAXN = 256

# Non-hot functions share the pure implementation.
bkl_atom_index = _pure.bkl_atom_index
bkl_atom_pair = _pure.bkl_atom_pair
is_permutation = _pure.is_permutation
is_simple = _pure.is_simple
join = _pure.join
simple_to_atoms = _pure.simple_to_atoms
delta_len = _pure.delta_len
atom_count = _pure.atom_count
atom_perm = _pure.atom_perm


cdef inline bytes _to_bytes(unsigned char* buf, Py_ssize_t n):
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* po = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        po[i] = buf[i]
    return out


cdef inline void _fill_delta(int kind, unsigned char* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    if kind == 0:
        for i in range(n):
            buf[i] = <unsigned char> (n - 1 - i)
    else:
        for i in range(n):
            buf[i] = <unsigned char> ((i + 1) % n)


cdef inline void _fill_invert(const unsigned char* p, unsigned char* out, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        out[p[i]] = <unsigned char> i


cdef inline void _labels(const unsigned char* p, unsigned char* labels, Py_ssize_t n):
    # Minimum of each cycle; ascending scan reaches every cycle at its min.
    cdef unsigned char seen[MAXN]
    cdef Py_ssize_t i, j
    for i in range(n):
        seen[i] = 0
    for i in range(n):
        if seen[i]:
            continue
        j = i
        while not seen[j]:
            seen[j] = 1
            labels[j] = <unsigned char> i
            j = p[j]


cdef inline int _is_identity(const unsigned char* p, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if p[i] != i:
            return 0
    return 1


def identity_perm(n):
    return bytes(range(n))


def delta_perm(kind, n):
    cdef unsigned char buf[MAXN]
    cdef Py_ssize_t nn = n
    _fill_delta(kind, buf, nn)
    return _to_bytes(buf, nn)


def compose(p, q):
    """Product ``p * q``: apply ``p`` first, then ``q``."""
    cdef const unsigned char* pp = p
    cdef const unsigned char* pq = q
    cdef Py_ssize_t n = len(p)
    cdef unsigned char buf[MAXN]
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = pq[pp[i]]
    return _to_bytes(buf, n)


def invert(p):
    cdef const unsigned char* pp = p
    cdef Py_ssize_t n = len(p)
    cdef unsigned char buf[MAXN]
    _fill_invert(pp, buf, n)
    return _to_bytes(buf, n)


def simple_len(kind, p):
    cdef const unsigned char* pp = p
    cdef Py_ssize_t n = len(p)
    cdef Py_ssize_t i, j
    cdef int count = 0
    cdef unsigned char labels[MAXN]
    cdef unsigned char seen[MAXN]
    if kind == 0:
        for i in range(n):
            for j in range(i + 1, n):
                if pp[i] > pp[j]:
                    count += 1
        return count
    for i in range(n):
        seen[i] = 0
    _labels(pp, labels, n)
    for i in range(n):
        seen[labels[i]] = 1
    count = 0
    for i in range(n):
        if seen[i]:
            count += 1
    return n - count


def tau_simple(kind, p, k):
    """Conjugate by the k-th power of the fundamental element."""
    cdef const unsigned char* pp = p
    cdef Py_ssize_t n = len(p)
    cdef unsigned char buf[MAXN]
    cdef Py_ssize_t i
    cdef long kk = k
    if kind == 0:
        if kk % 2 == 0:
            return p
        for i in range(n):
            buf[i] = <unsigned char> (n - 1 - pp[n - 1 - i])
        return _to_bytes(buf, n)
    kk %= n
    if kk < 0:
        kk += n
    if kk == 0:
        return p
    for i in range(n):
        buf[(i + kk) % n] = <unsigned char> ((pp[i] + kk) % n)
    return _to_bytes(buf, n)


def left_divides(kind, s, t):
    cdef const unsigned char* ps = s
    cdef const unsigned char* pt = t
    cdef Py_ssize_t n = len(s)
    cdef unsigned char ls[MAXN]
    cdef unsigned char lt[MAXN]
    cdef unsigned char si[MAXN]
    cdef Py_ssize_t i, j
    cdef int inv_s = 0, inv_t = 0, inv_q = 0
    cdef unsigned char q[MAXN]
    if kind == 1:
        _labels(ps, ls, n)
        _labels(pt, lt, n)
        for i in range(n):
            if lt[i] != lt[ls[i]]:
                return False
        return True
    _fill_invert(ps, si, n)
    for i in range(n):
        q[i] = pt[si[i]]
    # Additive crossing counts characterize weak-order divisibility.
    for i in range(n):
        for j in range(i + 1, n):
            if ps[i] > ps[j]:
                inv_s += 1
            if pt[i] > pt[j]:
                inv_t += 1
            if q[i] > q[j]:
                inv_q += 1
    return inv_s + inv_q == inv_t


cdef void _meet_labels(const unsigned char* a, const unsigned char* b,
                       unsigned char* out, Py_ssize_t n):
    # Common refinement: slots sharing both labels form the new blocks,
    # keyed by the packed label pair; the first occurrence names the block.
    cdef unsigned char la[MAXN]
    cdef unsigned char lb[MAXN]
    cdef Py_ssize_t i
    cdef int key
    _labels(a, la, n)
    _labels(b, lb, n)
    cdef int pair_first[MAXN * MAXN]
    for i in range(n * n):
        pair_first[i] = -1
    for i in range(n):
        key = la[i] * n + lb[i]
        if pair_first[key] < 0:
            pair_first[key] = <int> i
        out[i] = <unsigned char> pair_first[key]


cdef void _labels_to_perm(const unsigned char* labels, unsigned char* out, Py_ssize_t n):
    cdef int last[MAXN]
    cdef int first[MAXN]
    cdef Py_ssize_t i
    cdef int lab
    for i in range(n):
        last[i] = -1
        first[i] = -1
        out[i] = <unsigned char> i
    for i in range(n):
        lab = labels[i]
        if last[lab] >= 0:
            out[last[lab]] = <unsigned char> i
        else:
            first[lab] = <int> i
        last[lab] = <int> i
    for i in range(n):
        if last[i] >= 0:
            out[last[i]] = <unsigned char> first[i]


cdef int _meet_into(int kind, const unsigned char* s, const unsigned char* t,
                    unsigned char* out, Py_ssize_t n):
    """Meet into ``out``; returns 1 if the meet is the identity."""
    cdef unsigned char u[MAXN]
    cdef unsigned char v[MAXN]
    cdef unsigned char mi[MAXN]
    cdef unsigned char labels[MAXN]
    cdef Py_ssize_t i
    cdef int moved, pi, pj, ident
    if kind == 1:
        _meet_labels(s, t, labels, n)
        _labels_to_perm(labels, out, n)
        return _is_identity(out, n)
    for i in range(n):
        u[i] = s[i]
        v[i] = t[i]
        out[i] = <unsigned char> i
        mi[i] = <unsigned char> i
    # Greedy common-descent peel; any peel order reaches the gcd.
    moved = 1
    ident = 1
    while moved:
        moved = 0
        for i in range(n - 1):
            if u[i] > u[i + 1] and v[i] > v[i + 1]:
                u[i], u[i + 1] = u[i + 1], u[i]
                v[i], v[i + 1] = v[i + 1], v[i]
                pi = mi[i]
                pj = mi[i + 1]
                out[pi] = <unsigned char> (i + 1)
                out[pj] = <unsigned char> i
                mi[i] = <unsigned char> pj
                mi[i + 1] = <unsigned char> pi
                moved = 1
                ident = 0
    return ident


def meet(kind, s, t):
    cdef const unsigned char* ps = s
    cdef const unsigned char* pt = t
    cdef Py_ssize_t n = len(s)
    cdef unsigned char buf[MAXN]
    _meet_into(kind, ps, pt, buf, n)
    return _to_bytes(buf, n)


def right_complement(kind, s):
    """The simple ``c`` with ``s * c = delta``."""
    cdef const unsigned char* ps = s
    cdef Py_ssize_t n = len(s)
    cdef unsigned char si[MAXN]
    cdef unsigned char dlt[MAXN]
    cdef unsigned char buf[MAXN]
    cdef Py_ssize_t i
    _fill_invert(ps, si, n)
    _fill_delta(kind, dlt, n)
    for i in range(n):
        buf[i] = dlt[si[i]]
    return _to_bytes(buf, n)


def left_complement(kind, s):
    """The simple ``c`` with ``c * s = delta``."""
    cdef const unsigned char* ps = s
    cdef Py_ssize_t n = len(s)
    cdef unsigned char si[MAXN]
    cdef unsigned char dlt[MAXN]
    cdef unsigned char buf[MAXN]
    cdef Py_ssize_t i
    _fill_invert(ps, si, n)
    _fill_delta(kind, dlt, n)
    for i in range(n):
        buf[i] = si[dlt[i]]
    return _to_bytes(buf, n)


def quotient_left(s, t):
    """The permutation ``q`` with ``s * q = t`` (divisibility not checked)."""
    cdef const unsigned char* ps = s
    cdef const unsigned char* pt = t
    cdef Py_ssize_t n = len(s)
    cdef unsigned char si[MAXN]
    cdef unsigned char buf[MAXN]
    cdef Py_ssize_t i
    _fill_invert(ps, si, n)
    for i in range(n):
        buf[i] = pt[si[i]]
    return _to_bytes(buf, n)


cdef int _slide_into(int kind, const unsigned char* s, const unsigned char* p,
                     unsigned char* s2, unsigned char* p2, Py_ssize_t n):
    """Left-weight the pair into (s2, p2); returns 1 when something moved."""
    cdef unsigned char si[MAXN]
    cdef unsigned char rc[MAXN]
    cdef unsigned char b[MAXN]
    cdef unsigned char bi[MAXN]
    cdef unsigned char dlt[MAXN]
    cdef Py_ssize_t i
    cdef int moved, scanning, pi, pj
    if kind == 1:
        _fill_invert(s, si, n)
        _fill_delta(kind, dlt, n)
        for i in range(n):
            rc[i] = dlt[si[i]]
        if _meet_into(1, rc, p, b, n):
            return 0
        _fill_invert(b, bi, n)
        for i in range(n):
            s2[i] = b[s[i]]
            p2[i] = p[bi[i]]
        return 1
    for i in range(n):
        s2[i] = s[i]
        p2[i] = p[i]
    _fill_invert(s, si, n)
    moved = 0
    scanning = 1
    while scanning:
        scanning = 0
        for i in range(n - 1):
            if p2[i] > p2[i + 1] and si[i] < si[i + 1]:
                p2[i], p2[i + 1] = p2[i + 1], p2[i]
                pi = si[i]
                pj = si[i + 1]
                s2[pi] = <unsigned char> (i + 1)
                s2[pj] = <unsigned char> i
                si[i] = <unsigned char> pj
                si[i + 1] = <unsigned char> pi
                moved = 1
                scanning = 1
    return moved


def make_left_weighted(kind, s, p):
    """Slide as much of ``p`` as possible into ``s``; the product is kept."""
    cdef const unsigned char* ps = s
    cdef const unsigned char* pp = p
    cdef Py_ssize_t n = len(s)
    cdef unsigned char s2[MAXN]
    cdef unsigned char p2[MAXN]
    if not _slide_into(kind, ps, pp, s2, p2, n):
        return s, p
    return _to_bytes(s2, n), _to_bytes(p2, n)


def is_left_weighted(kind, s, p):
    cdef const unsigned char* ps = s
    cdef const unsigned char* pp = p
    cdef Py_ssize_t n = len(s)
    cdef unsigned char si[MAXN]
    cdef unsigned char rc[MAXN]
    cdef unsigned char dlt[MAXN]
    cdef unsigned char b[MAXN]
    cdef Py_ssize_t i
    _fill_invert(ps, si, n)
    _fill_delta(kind, dlt, n)
    for i in range(n):
        rc[i] = dlt[si[i]]
    return _meet_into(kind, rc, pp, b, n) == 1


cdef Py_ssize_t _normalize_list(int kind, Py_ssize_t n, list fs,
                                Py_ssize_t scan_from, Py_ssize_t virgin):
    """Shared insertion loop; see the pure twin for the invariants."""
    cdef unsigned char s2[MAXN]
    cdef unsigned char p2[MAXN]
    cdef unsigned char dlt[MAXN]
    cdef Py_ssize_t i = scan_from if scan_from > 0 else 0
    cdef Py_ssize_t lead
    cdef bytes s, p
    while i < len(fs) - 1:
        s = fs[i]
        p = fs[i + 1]
        if not _slide_into(kind, <const unsigned char*> s, <const unsigned char*> p,
                           s2, p2, n):
            if i + 1 >= virgin:
                break
            i += 1
            continue
        fs[i] = _to_bytes(s2, n)
        if _is_identity(p2, n):
            fs.pop(i + 1)
            virgin = virgin - 1 if virgin - 1 > i + 1 else i + 1
        else:
            fs[i + 1] = _to_bytes(p2, n)
            virgin = virgin if virgin > i + 2 else i + 2
        if i > 0:
            i -= 1
    _fill_delta(kind, dlt, n)
    lead = 0
    while lead < len(fs) and memcmp_perm(
        <const unsigned char*> (<bytes> fs[lead]), dlt, n
    ):
        lead += 1
    del fs[:lead]
    while fs and _is_identity(<const unsigned char*> (<bytes> fs[len(fs) - 1]), n):
        fs.pop()
    return lead


cdef inline int memcmp_perm(const unsigned char* a, const unsigned char* b, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if a[i] != b[i]:
            return 0
    return 1


def normalize_factors(kind, n, factors):
    """Normalize an arbitrary sequence of simple factors."""
    cdef list fs = []
    cdef bytes f
    cdef Py_ssize_t nn = n
    for f in factors:
        if not _is_identity(<const unsigned char*> f, nn):
            fs.append(f)
    cdef Py_ssize_t k = _normalize_list(kind, nn, fs, 0, len(fs))
    return k, tuple(fs)


def word_to_nf(kind, n, letters):
    """Normal form of a word given as (atom index, sign) pairs."""
    cdef list raw = []
    cdef long shift = 0
    cdef long a, sign
    for a, sign in letters:
        p = atom_perm(kind, n, a)
        if sign > 0:
            raw.append((0, p))
        else:
            raw.append((-1, left_complement(kind, p)))
    cdef list conv = [None] * len(raw)
    cdef Py_ssize_t i
    for i in range(len(raw) - 1, -1, -1):
        d, p = raw[i]
        conv[i] = tau_simple(kind, p, shift)
        shift += d
    dk, fs = normalize_factors(kind, n, conv)
    return shift + dk, fs


def multiply_nf(kind, n, k1, f1, k2, f2):
    """Product of two normal forms; only the seam needs renormalizing."""
    cdef Py_ssize_t nn = n
    if not f1:
        return k1 + k2, tuple(f2)
    if not f2:
        return k1 + k2, tuple(tau_simple(kind, x, k2) for x in f1)
    cdef list fs = [tau_simple(kind, x, k2) for x in f1]
    cdef Py_ssize_t seam = len(fs)
    fs.extend(f2)
    cdef Py_ssize_t dk = _normalize_list(kind, nn, fs, seam - 1, seam)
    return k1 + k2 + dk, tuple(fs)


def invert_nf(kind, n, k, f):
    """Inverse of a normal form via twisted left complements."""
    cdef Py_ssize_t r = len(f)
    cdef list out = []
    cdef Py_ssize_t j
    for j in range(r, 0, -1):
        out.append(tau_simple(kind, left_complement(kind, f[j - 1]), -(j - 1) - k))
    dk, fs = normalize_factors(kind, n, out)
    return -k - r + dk, fs


def nf_lengths(kind, n, k, f):
    """Greedy and rational atom lengths of a normal form."""
    cdef long ld = delta_len(kind, n)
    cdef long kk = k
    cdef long total = 0, head = 0
    cdef Py_ssize_t i, cut
    cdef list lens = [simple_len(kind, x) for x in f]
    for i in range(len(lens)):
        total += <long> lens[i]
    cdef long greedy = (kk if kk >= 0 else -kk) * ld + total
    if kk >= 0:
        return greedy, greedy
    cut = min(len(lens), -kk)
    for i in range(cut):
        head += <long> lens[i]
    return greedy, greedy - 2 * head
