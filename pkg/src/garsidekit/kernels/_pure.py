"""Pure-Python kernels for Garside normal-form arithmetic in braid groups.

This module is the reference backend. A compiled twin (``_speed``) exports
the same functions with identical semantics; ``garsidekit.kernels`` picks
one at import time.

Representation
--------------

Everything here works on plain ``bytes`` and small integers, so values are
immutable, hashable and cheap to move around:

- A *simple element* is a permutation of ``range(n)`` stored as ``bytes`` of
  length ``n`` in one-line notation: ``p[i]`` is the final position of the
  strand that starts in slot ``i``.
- Words multiply left to right, so ``perm(u * v)[i] == perm(v)[perm(u)[i]]``.
- A *normal form* is a pair ``(k, factors)``: an integer power of the
  fundamental element followed by a tuple of left-weighted simple factors,
  none of which is the identity or the fundamental element.

Two structure kinds are supported, selected by the ``kind`` argument:

- ``KIND_ARTIN`` (0): every permutation is simple; the fundamental element
  is the reversal ``n-1-i``; atom ``i`` (``0 <= i <= n-2``) is the adjacent
  transposition of slots ``i`` and ``i+1``.
- ``KIND_BKL`` (1): simples are the permutations whose cycles each walk
  their support upward (max wraps to min) and whose supports are pairwise
  non-crossing, i.e. exactly the non-crossing partitions of ``range(n)``.
  The fundamental element is the full cycle ``i -> i+1 (mod n)``; the atom
  with flat index ``t*(t-1)//2 + s`` is the transposition of slots ``s < t``.

Left divisibility is inversion-set containment (Artin) and partition
refinement (BKL); both facts are exercised against the raw definition by
the test suite.
"""

from __future__ import annotations

from typing import Iterable, Sequence

KIND_ARTIN = 0
KIND_BKL = 1


# ---------------------------------------------------------------------------
# Permutation plumbing


def identity_perm(n: int) -> bytes:
    return bytes(range(n))


def delta_perm(kind: int, n: int) -> bytes:
    if kind == KIND_ARTIN:
        return bytes(n - 1 - i for i in range(n))
    return bytes((i + 1) % n for i in range(n))


def atom_count(kind: int, n: int) -> int:
    return n - 1 if kind == KIND_ARTIN else n * (n - 1) // 2


def bkl_atom_index(t: int, s: int) -> int:
    """Flat index of the band atom joining slots ``s < t`` (0-based)."""
    return t * (t - 1) // 2 + s


def bkl_atom_pair(a: int) -> tuple[int, int]:
    """Inverse of :func:`bkl_atom_index`."""
    t = 1
    while (t + 1) * t // 2 <= a:
        t += 1
    return t, a - t * (t - 1) // 2


def atom_perm(kind: int, n: int, a: int) -> bytes:
    p = bytearray(range(n))
    if kind == KIND_ARTIN:
        p[a], p[a + 1] = p[a + 1], p[a]
    else:
        t, s = bkl_atom_pair(a)
        p[t], p[s] = p[s], p[t]
    return bytes(p)


def compose(p: bytes, q: bytes) -> bytes:
    """Product ``p * q``: apply ``p`` first, then ``q``."""
    return bytes(q[x] for x in p)


def invert(p: bytes) -> bytes:
    out = bytearray(len(p))
    for i, x in enumerate(p):
        out[x] = i
    return bytes(out)


def _cycle_labels(p: bytes) -> bytearray:
    """Label each slot with the minimum of its cycle.

    Scanning slots in ascending order guarantees the first unvisited slot
    of a cycle is its minimum.
    """
    n = len(p)
    labels = bytearray(n)
    seen = bytearray(n)
    for i in range(n):
        if seen[i]:
            continue
        j = i
        while not seen[j]:
            seen[j] = 1
            labels[j] = i
            j = p[j]
    return labels


def simple_len(kind: int, p: bytes) -> int:
    n = len(p)
    if kind == KIND_ARTIN:
        count = 0
        for i in range(n):
            pi = p[i]
            for j in range(i + 1, n):
                if pi > p[j]:
                    count += 1
        return count
    labels = _cycle_labels(p)
    blocks = len({labels[i] for i in range(n)})
    return n - blocks


def tau_simple(kind: int, p: bytes, k: int) -> bytes:
    """Conjugate by the k-th power of the fundamental element."""
    n = len(p)
    if kind == KIND_ARTIN:
        if k % 2 == 0:
            return p
        return bytes(n - 1 - p[n - 1 - i] for i in range(n))
    k %= n
    if k == 0:
        return p
    out = bytearray(n)
    for i in range(n):
        out[(i + k) % n] = (p[i] + k) % n
    return bytes(out)


def is_permutation(p: bytes, n: int) -> bool:
    if len(p) != n:
        return False
    seen = bytearray(n)
    for x in p:
        if x >= n or seen[x]:
            return False
        seen[x] = 1
    return True


def is_simple(kind: int, p: bytes) -> bool:
    n = len(p)
    if not is_permutation(p, n):
        return False
    if kind == KIND_ARTIN:
        return True
    # Each cycle must walk upward through its support, and supports must be
    # laid out without crossings (checked by marking endpoints of the arcs
    # b -> next(b), processing blocks by ascending minimum).
    seen = bytearray(n)
    marked = bytearray(n)
    for i in range(n):
        if seen[i]:
            continue
        seen[i] = 1
        prev = i
        j = p[i]
        while j != i:
            if j < prev:
                return False
            seen[j] = 1
            if marked[prev + 1 : j].count(1):
                return False
            marked[prev] = marked[j] = 1
            prev = j
            j = p[j]
    return True


# ---------------------------------------------------------------------------
# Lattice operations on simples


def left_divides(kind: int, s: bytes, t: bytes) -> bool:
    if kind == KIND_BKL:
        ls = _cycle_labels(s)
        lt = _cycle_labels(t)
        return all(lt[i] == lt[ls[i]] for i in range(len(s)))
    # s divides t iff the quotient permutation accounts for exactly the
    # missing crossings.
    q = compose(invert(s), t)
    return simple_len(KIND_ARTIN, s) + simple_len(KIND_ARTIN, q) == simple_len(
        KIND_ARTIN, t
    )


def _labels_to_perm(labels: Sequence[int], n: int) -> bytes:
    """Permutation with one upward cycle per label class."""
    out = bytearray(range(n))
    last: dict[int, int] = {}
    first: dict[int, int] = {}
    for i in range(n):
        lab = labels[i]
        if lab in last:
            out[last[lab]] = i
        else:
            first[lab] = i
        last[lab] = i
    for lab, i in last.items():
        out[i] = first[lab]
    return bytes(out)


def meet(kind: int, s: bytes, t: bytes) -> bytes:
    n = len(s)
    if kind == KIND_BKL:
        # Common refinement of the two partitions; the intersection of
        # non-crossing partitions is non-crossing.
        ls = _cycle_labels(s)
        lt = _cycle_labels(t)
        reps: dict[tuple[int, int], int] = {}
        labels = bytearray(n)
        for i in range(n):
            key = (ls[i], lt[i])
            labels[i] = reps.setdefault(key, i)
        return _labels_to_perm(labels, n)
    # Greedily peel atoms dividing both arguments; any peel order yields
    # the same gcd.
    u = bytearray(s)
    v = bytearray(t)
    m = bytearray(range(n))
    mi = bytearray(range(n))
    moved = True
    while moved:
        moved = False
        for i in range(n - 1):
            if u[i] > u[i + 1] and v[i] > v[i + 1]:
                u[i], u[i + 1] = u[i + 1], u[i]
                v[i], v[i + 1] = v[i + 1], v[i]
                pi, pj = mi[i], mi[i + 1]
                m[pi], m[pj] = i + 1, i
                mi[i], mi[i + 1] = pj, pi
                moved = True
    return bytes(m)


def _blocks_cross(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    a_in = any(b[0] < x < b[-1] for x in a)
    b_in = any(a[0] < x < a[-1] for x in b)
    return a_in and b_in


def join(kind: int, s: bytes, t: bytes) -> bytes:
    n = len(s)
    if kind == KIND_BKL:
        # Fuse the two partitions, then merge crossing blocks until the
        # result is non-crossing: the least non-crossing coarsening.
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for labels in (_cycle_labels(s), _cycle_labels(t)):
            for i in range(n):
                ri, rj = find(i), find(labels[i])
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

        blocks: dict[int, list[int]] = {}
        for i in range(n):
            blocks.setdefault(find(i), []).append(i)
        merged = [tuple(b) for b in blocks.values()]
        changed = True
        while changed:
            changed = False
            for x in range(len(merged)):
                for y in range(x + 1, len(merged)):
                    if _blocks_cross(merged[x], merged[y]):
                        fused = tuple(sorted(merged[x] + merged[y]))
                        merged = (
                            merged[:x] + [fused] + merged[x + 1 : y] + merged[y + 1 :]
                        )
                        changed = True
                        break
                if changed:
                    break
        labels2 = bytearray(n)
        for block in merged:
            for i in block:
                labels2[i] = block[0]
        return _labels_to_perm(labels2, n)
    # The right-complement map is an anti-isomorphism onto the mirror
    # lattice, where the mirror meet is computed through inverses.
    ds = right_complement(kind, s)
    dt = right_complement(kind, t)
    mirror = invert(meet(kind, invert(ds), invert(dt)))
    return left_complement(kind, mirror)


def right_complement(kind: int, s: bytes) -> bytes:
    """The simple ``c`` with ``s * c = delta``."""
    return compose(invert(s), delta_perm(kind, len(s)))


def left_complement(kind: int, s: bytes) -> bytes:
    """The simple ``c`` with ``c * s = delta``."""
    return compose(delta_perm(kind, len(s)), invert(s))


def quotient_left(s: bytes, t: bytes) -> bytes:
    """The permutation ``q`` with ``s * q = t`` (divisibility not checked)."""
    return compose(invert(s), t)


# ---------------------------------------------------------------------------
# Left-weighted factor sequences


def make_left_weighted(kind: int, s: bytes, p: bytes) -> tuple[bytes, bytes]:
    """Slide as much of ``p`` as possible into ``s``; the product is kept."""
    n = len(s)
    if kind == KIND_BKL:
        b = meet(kind, right_complement(kind, s), p)
        if b == identity_perm(n):
            return s, p
        return compose(s, b), compose(invert(b), p)
    # Transfer every atom that starts p and can extend s.
    sm = bytearray(s)
    si = bytearray(invert(s))
    pm = bytearray(p)
    moved = False
    scanning = True
    while scanning:
        scanning = False
        for i in range(n - 1):
            if pm[i] > pm[i + 1] and si[i] < si[i + 1]:
                pm[i], pm[i + 1] = pm[i + 1], pm[i]
                pi, pj = si[i], si[i + 1]
                sm[pi], sm[pj] = i + 1, i
                si[i], si[i + 1] = pj, pi
                moved = True
                scanning = True
    if not moved:
        return s, p
    return bytes(sm), bytes(pm)


def is_left_weighted(kind: int, s: bytes, p: bytes) -> bool:
    return meet(kind, right_complement(kind, s), p) == identity_perm(len(s))


def _normalize(kind: int, n: int, fs: list[bytes], scan_from: int, virgin: int) -> int:
    """Left-weight ``fs`` in place; return the count of stripped deltas.

    Pairs strictly left of ``scan_from`` must already be left-weighted and
    ``fs[virgin:]`` must be an untouched left-weighted suffix, so scanning
    may stop once it reaches a stable pair inside that suffix. Identity
    factors are dropped as they surface; deltas migrate to the front and
    are stripped off.
    """
    idp = identity_perm(n)
    i = max(scan_from, 0)
    while i < len(fs) - 1:
        s, p = fs[i], fs[i + 1]
        s2, p2 = make_left_weighted(kind, s, p)
        if s2 is s or s2 == s:
            if i + 1 >= virgin:
                break
            i += 1
            continue
        fs[i] = s2
        if p2 == idp:
            fs.pop(i + 1)
            virgin = max(virgin - 1, i + 1)
        else:
            fs[i + 1] = p2
            virgin = max(virgin, i + 2)
        i = max(i - 1, 0)
    dp = delta_perm(kind, n)
    lead = 0
    while lead < len(fs) and fs[lead] == dp:
        lead += 1
    del fs[:lead]
    while fs and fs[-1] == idp:
        fs.pop()
    return lead


def normalize_factors(
    kind: int, n: int, factors: Iterable[bytes]
) -> tuple[int, tuple[bytes, ...]]:
    """Normalize an arbitrary sequence of simple factors.

    Returns the power of delta that migrated to the front together with
    the left-weighted remainder.
    """
    idp = identity_perm(n)
    fs = [f for f in factors if f != idp]
    k = _normalize(kind, n, fs, 0, len(fs))
    return k, tuple(fs)


def word_to_nf(
    kind: int, n: int, letters: Iterable[tuple[int, int]]
) -> tuple[int, tuple[bytes, ...]]:
    """Normal form of a word given as (atom index, sign) pairs.

    A negative letter ``a^-1`` is rewritten as ``delta^-1 * c`` with
    ``c * a = delta``; the delta powers are then swept to the front, which
    twists each factor by the power of delta passing through it.
    """
    raw: list[tuple[int, bytes]] = []
    for a, sign in letters:
        p = atom_perm(kind, n, a)
        if sign > 0:
            raw.append((0, p))
        else:
            raw.append((-1, left_complement(kind, p)))
    shift = 0
    conv: list[bytes] = [b""] * len(raw)
    for i in range(len(raw) - 1, -1, -1):
        d, p = raw[i]
        conv[i] = tau_simple(kind, p, shift)
        shift += d
    dk, fs = normalize_factors(kind, n, conv)
    return shift + dk, fs


def multiply_nf(
    kind: int,
    n: int,
    k1: int,
    f1: Sequence[bytes],
    k2: int,
    f2: Sequence[bytes],
) -> tuple[int, tuple[bytes, ...]]:
    """Product of two normal forms.

    The right-hand delta power commutes through the left factors, twisting
    them; twisting preserves left-weightedness, so only the seam needs
    renormalizing.
    """
    if not f1:
        return k1 + k2, tuple(f2)
    if not f2:
        return k1 + k2, tuple(tau_simple(kind, x, k2) for x in f1)
    fs = [tau_simple(kind, x, k2) for x in f1]
    seam = len(fs)
    fs.extend(f2)
    dk = _normalize(kind, n, fs, seam - 1, seam)
    return k1 + k2 + dk, tuple(fs)


def invert_nf(
    kind: int, n: int, k: int, f: Sequence[bytes]
) -> tuple[int, tuple[bytes, ...]]:
    """Inverse of a normal form.

    Each reversed factor contributes ``delta^-1 * left_complement``, and
    sweeping the deltas frontward twists the complements.
    """
    r = len(f)
    out = [
        tau_simple(kind, left_complement(kind, f[j - 1]), -(j - 1) - k)
        for j in range(r, 0, -1)
    ]
    dk, fs = normalize_factors(kind, n, out)
    return -k - r + dk, fs


def delta_len(kind: int, n: int) -> int:
    return n * (n - 1) // 2 if kind == KIND_ARTIN else n - 1


def nf_lengths(kind: int, n: int, k: int, f: Sequence[bytes]) -> tuple[int, int]:
    """Greedy and rational atom lengths of a normal form.

    The rational length drops two copies of the leading factor lengths
    that cancel against negative delta powers.
    """
    ld = delta_len(kind, n)
    lens = [simple_len(kind, x) for x in f]
    greedy = abs(k) * ld + sum(lens)
    if k >= 0:
        return greedy, greedy
    rational = greedy - 2 * sum(lens[: min(len(f), -k)])
    return greedy, rational


def simple_to_atoms(kind: int, p: bytes) -> tuple[int, ...]:
    """A positive atom word for a simple, of length ``simple_len``."""
    n = len(p)
    if kind == KIND_ARTIN:
        q = bytearray(p)
        word: list[int] = []
        i = 0
        while i < n - 1:
            if q[i] > q[i + 1]:
                word.append(i)
                q[i], q[i + 1] = q[i + 1], q[i]
                i = max(i - 1, 0)
            else:
                i += 1
        return tuple(word)
    labels = _cycle_labels(p)
    members: dict[int, list[int]] = {}
    for i in range(n):
        members.setdefault(labels[i], []).append(i)
    word2: list[int] = []
    for lab in sorted(members):
        block = members[lab]
        for j in range(len(block) - 1, 0, -1):
            word2.append(bkl_atom_index(block[j], block[j - 1]))
    return tuple(word2)
