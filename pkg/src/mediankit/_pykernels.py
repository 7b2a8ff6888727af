"""Pure numpy implementations of the exhaustive kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same witness ordering (lexicographically first), so the two backends
are interchangeable.  Tables are ``int32`` arrays of shape ``(n, n, n)``.
"""
from itertools import combinations

import numpy as np

BACKEND = "python"


def _first(mask):
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return None
    return tuple(int(v) for v in idx[0])


def assoc_witness(T):
    """First (x, y, z, t, u) with m(m(x,y,z),t,u) != m(x,m(y,t,u),m(z,t,u))."""
    n = T.shape[0]
    t = np.arange(n)[:, None]
    u = np.arange(n)[None, :]
    M = T[:, t, u]  # M[v, t, u] = m(v, t, u)
    for x in range(n):
        # lhs[y, z, t, u] = m(m(x,y,z), t, u)
        lhs = M[T[x]]
        # rhs[y, z, t, u] = m(x, m(y,t,u), m(z,t,u))
        rhs = T[x][M[:, None, :, :], M[None, :, :, :]]
        w = _first(lhs != rhs)
        if w is not None:
            return (x,) + w
    return None


def derived_witness(T):
    """Check the two derived identities; return ``(name, witness)`` or None.

    ``absorption``:      m(x, y, m(x,y,z)) = m(x,y,z)
    ``reconstruction``:  m(x,y,z) = m(m(w,x,t), m(w,z,t), m(w,y,t)), w = m(x,y,z)
    """
    n = T.shape[0]
    i = np.arange(n)
    X, Y = i[:, None, None], i[None, :, None]
    lhs = T[X, Y, T]
    w = _first(lhs != T)
    if w is not None:
        return ("absorption", w)
    t = i
    for x in range(n):
        W = T[x]  # W[y, z]
        a = T[W[:, :, None], x, t[None, None, :]]
        b = T[W[:, :, None], i[None, :, None], t[None, None, :]]
        c = T[W[:, :, None], i[:, None, None], t[None, None, :]]
        rhs = T[a, b, c]
        w = _first(rhs != W[:, :, None])
        if w is not None:
            return ("reconstruction", (x,) + w)
    return None


def hom_witness(TA, TB, f):
    """First (x, y, z) with f(m(x,y,z)) != m(f x, f y, f z)."""
    f = np.asarray(f)
    lhs = f[TA]
    rhs = TB[f[:, None, None], f[None, :, None], f[None, None, :]]
    return _first(lhs != rhs)


def brute_homs(TA, TB):
    """All median homomorphisms A -> B by exhaustive search over |B|^|A| maps.

    Maps are produced in lexicographic order of their image tuples.
    """
    na, nb = TA.shape[0], TB.shape[0]
    total = nb ** na
    chunk = max(1, (1 << 20) // max(1, na ** 3))
    radix = nb ** np.arange(na - 1, -1, -1, dtype=np.int64)
    found = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        F = (codes[:, None] // radix[None, :]) % nb  # (k, na)
        lhs = F[:, TA]  # (k, na, na, na)
        rhs = TB[F[:, :, None, None], F[:, None, :, None], F[:, None, None, :]]
        ok = (lhs == rhs).reshape(len(F), -1).all(axis=1)
        found.append(F[ok])
    out = np.concatenate(found) if found else np.empty((0, na), dtype=np.int64)
    return out.astype(np.int32)


def prime_convex_masks(T):
    """Bitmasks of all subsets C with both C and its complement convex."""
    n = T.shape[0]
    X, Y, _ = np.indices(T.shape)
    X, Y, M = X.ravel(), Y.ravel(), T.ravel()
    bits = 1 << np.arange(n, dtype=np.int64)
    batch = max(1, (1 << 22) // len(M))
    out = []
    for start in range(0, 1 << n, batch):
        masks = np.arange(start, min(1 << n, start + batch), dtype=np.int64)
        In = (masks[:, None] & bits[None, :]) != 0
        Out = ~In
        leak_in = (In[:, X] & In[:, Y] & Out[:, M]).any(axis=1)
        leak_out = (Out[:, X] & Out[:, Y] & In[:, M]).any(axis=1)
        out.extend(int(v) for v in masks[~leak_in & ~leak_out])
    return out


def a2_subalgebra_witness(T):
    """First 4-subset closed under m whose induced algebra is a star.

    Returns ``(subset, centre)`` or None.  A closed 4-element subset is
    isomorphic to the star algebra exactly when the medians of its four
    distinct triples all equal one element of the subset.
    """
    n = T.shape[0]
    if n < 4:
        return None
    S = np.array(list(combinations(range(n), 4)), dtype=np.int64)
    p, q, r, s = S.T
    meds = np.stack([T[p, q, r], T[p, q, s], T[p, r, s], T[q, r, s]], axis=1)
    same = (meds == meds[:, :1]).all(axis=1)
    member = (meds[:, :1] == S).any(axis=1)
    hit = np.flatnonzero(same & member)
    if len(hit) == 0:
        return None
    k = hit[0]
    return tuple(int(v) for v in S[k]), int(meds[k, 0])
