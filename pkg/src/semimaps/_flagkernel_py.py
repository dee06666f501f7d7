"""Pure-Python flag propagation, used when the compiled kernel is unavailable."""


def propagate(a, b, base, target):
    """Extend ``base -> target`` to a map from flags of ``a`` to flags of ``b``.

    ``a`` and ``b`` are triples of involution tables (lists of ints).  The
    map must commute with the three involutions; returns the image list or
    ``None`` on the first conflict.
    """
    a0, a1, a2 = a
    b0, b1, b2 = b
    n = len(a0)
    if len(b0) != n:
        return None
    phi = [-1] * n
    phi[base] = target
    stack = [base]
    count = 1
    while stack:
        x = stack.pop()
        y = phi[x]
        for s, t in ((a0, b0), (a1, b1), (a2, b2)):
            xs = s[x]
            ys = t[y]
            cur = phi[xs]
            if cur < 0:
                phi[xs] = ys
                stack.append(xs)
                count += 1
            elif cur != ys:
                return None
    if count != n:
        return None
    return phi


def search(a, b, base, candidates):
    """All successful propagations from ``base`` to each candidate flag, in order."""
    a = tuple(list(s) for s in a)
    b = tuple(list(s) for s in b)
    out = []
    for t in candidates:
        phi = propagate(a, b, base, int(t))
        if phi is not None:
            out.append(phi)
    return out
