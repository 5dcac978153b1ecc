"""Dense univariate polynomials over GF(q).

Polynomials are tuples of int-encoded field elements, low degree first,
with no trailing zeros; () is the zero polynomial.  All functions take
the field as the first argument and are pure.
"""

from __future__ import annotations

from .finitefield import GFq

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)


def normalize(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(f: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def add(gf: GFq, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    if gf.k == 1:
        p = gf.p
        for i, c in enumerate(g):
            out[i] = (out[i] + c) % p
    else:
        for i, c in enumerate(g):
            out[i] = gf.add(out[i], c)
    return normalize(out)


def neg(gf: GFq, f: Poly) -> Poly:
    if gf.k == 1:
        p = gf.p
        return tuple((-c) % p for c in f)
    return tuple(gf.neg(c) for c in f)


def sub(gf: GFq, f: Poly, g: Poly) -> Poly:
    return add(gf, f, neg(gf, g))


def mul(gf: GFq, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    if gf.k == 1:
        p = gf.p
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return normalize([c % p for c in out])
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = gf.add(out[i + j], gf.mul(a, b))
    return normalize(out)


def scale(gf: GFq, c: int, f: Poly) -> Poly:
    if c == 0:
        return ZERO
    if gf.k == 1:
        p = gf.p
        return normalize([c * a % p for a in f])
    return normalize([gf.mul(c, a) for a in f])


def divmod_poly(gf: GFq, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    inv_lead = gf.inv(g[-1])
    if gf.k == 1:
        p = gf.p
        for i in range(len(f) - len(g), -1, -1):
            c = r[i + len(g) - 1] * inv_lead % p
            q[i] = c
            if c:
                for j, gj in enumerate(g):
                    r[i + j] = (r[i + j] - c * gj) % p
        return normalize(q), normalize(r)
    for i in range(len(f) - len(g), -1, -1):
        c = gf.mul(r[i + len(g) - 1], inv_lead)
        q[i] = c
        if c:
            for j, gj in enumerate(g):
                r[i + j] = gf.sub(r[i + j], gf.mul(c, gj))
    return normalize(q), normalize(r)


def divides(gf: GFq, g: Poly, f: Poly) -> bool:
    return divmod_poly(gf, f, g)[1] == ZERO


def monic(gf: GFq, f: Poly) -> Poly:
    if not f or f[-1] == 1:
        return f
    return scale(gf, gf.inv(f[-1]), f)


def gcd(gf: GFq, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, divmod_poly(gf, f, g)[1]
    return monic(gf, f)


def derivative(gf: GFq, f: Poly) -> Poly:
    out = []
    for i in range(1, len(f)):
        c = f[i]
        m = i % gf.p
        acc = 0
        for _ in range(m):
            acc = gf.add(acc, c)
        out.append(acc)
    return normalize(out)


def pow_poly(gf: GFq, f: Poly, e: int) -> Poly:
    r: Poly = ONE
    while e:
        if e & 1:
            r = mul(gf, r, f)
        f = mul(gf, f, f)
        e >>= 1
    return r


def sqrt_poly(gf: GFq, h: Poly) -> Poly | None:
    """Exact square root of h in GF(q)[t], or None.

    Top-down coefficient matching: works because char != 2, so 2*s_m is
    invertible.  The root returned has a leading coefficient equal to the
    field's canonical square root of h's leading coefficient.
    """
    if not h:
        return ZERO
    if deg(h) % 2 != 0 or not gf.is_square(h[-1]):
        return None
    m = deg(h) // 2
    s = [0] * (m + 1)
    s[m] = gf.sqrt(h[-1])
    if gf.k == 1:
        p = gf.p
        two_lead_inv = pow(2 * s[m], p - 2, p)
        for k in range(m - 1, -1, -1):
            acc = 0
            for i in range(k + 1, m):
                acc += s[i] * s[m + k - i]
            want = h[m + k] if m + k < len(h) else 0
            s[k] = (want - acc) * two_lead_inv % p
    else:
        two_lead_inv = gf.inv(gf.add(s[m], s[m]))
        for k in range(m - 1, -1, -1):
            # coefficient of t^(m+k) in s^2 is 2 s_m s_k + known inner pairs
            acc = 0
            for i in range(k + 1, m):
                acc = gf.add(acc, gf.mul(s[i], s[m + k - i]))
            want = h[m + k] if m + k < len(h) else 0
            s[k] = gf.mul(gf.sub(want, acc), two_lead_inv)
    cand = normalize(s)
    return cand if mul(gf, cand, cand) == normalize(h) else None


def is_irreducible(gf: GFq, f: Poly) -> bool:
    """Trial division by all lower-degree monic polynomials; desk scale only."""
    d = deg(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    for dd in range(1, d // 2 + 1):
        for enc in range(gf.q ** dd):
            low, e = [], enc
            for _ in range(dd):
                e, r = divmod(e, gf.q)
                low.append(r)
            g = tuple(low) + (1,)
            if divides(gf, g, f):
                return False
    return True


def from_encoding(enc: int, gf: GFq) -> Poly:
    """Decode the canonical integer encoding sum c_i q^i into a polynomial."""
    out = []
    while enc:
        enc, r = divmod(enc, gf.q)
        out.append(r)
    return tuple(out)


def to_encoding(f: Poly, gf: GFq) -> int:
    enc = 0
    for c in reversed(f):
        enc = enc * gf.q + c
    return enc


def all_of_degree_at_most(gf: GFq, bound: int):
    """Every polynomial of degree <= bound, in increasing encoding order."""
    for enc in range(gf.q ** (bound + 1)):
        yield from_encoding(enc, gf)


def poly_str(f: Poly, var: str = "t") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{var}" if c == 1 else f"{c}{var}")
        else:
            parts.append(f"{var}^{i}" if c == 1 else f"{c}{var}^{i}")
    return "+".join(parts)
