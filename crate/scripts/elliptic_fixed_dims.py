#!/usr/bin/env python3
"""Fixed 3-torsion of E: w^2 + w = t^3 under subgroups of its Q8 of automorphisms.

E is supersingular over F_2 with #E(F_4) = 9, so E[3] = E(F_4). Its automorphisms
fixing infinity are (x, y) -> (u^2 x + s^2, y + u^2 s x + t) with u^3 = 1,
s^4 + s = 0 and t^2 + t = s^6, all defined over F_16. The 2-Sylow is the u = 1
part. Each automorphism fixing infinity is a group homomorphism, so the fixed
points of H in E[3] form a subgroup of order 3^d with d = dim E[3]^H.

Writes the table as JSON (to stdout, or to the path given as argv[1]).
"""
import itertools
import json
import math
import sys

MOD = 0b10011  # x^4 + x + 1


def mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b10000:
            a ^= MOD
    return r


def power(a, k):
    r = 1
    for _ in range(k):
        r = mul(r, a)
    return r


F16 = range(16)
F4 = [a for a in F16 if power(a, 4) == a]
INF = None


def on_curve(x, y):
    return mul(y, y) ^ y == power(x, 3)


def points(field):
    return [INF] + [(x, y) for x in field for y in field if on_curve(x, y)]


def automorphisms():
    out = []
    for u, s, t in itertools.product(F16, F16, F16):
        if power(u, 3) != 1 or power(s, 4) ^ s or mul(t, t) ^ t != power(s, 6):
            continue
        u2 = mul(u, u)
        out.append(((u, s, t), lambda P, u2=u2, s=s, t=t: INF if P is INF
                    else (mul(u2, P[0]) ^ mul(s, s), P[1] ^ mul(mul(u2, s), P[0]) ^ t)))
    return out


def main():
    e3 = points(F4)
    assert len(e3) == 9, len(e3)
    autos = automorphisms()
    assert len(autos) == 24, len(autos)
    for _, f in autos:
        assert all(P is INF or on_curve(*f(P)) for P in points(F16))
    q8 = [f for (u, _, _), f in autos if u == 1]
    assert len(q8) == 8
    e16 = points(F16)

    def order(f):
        k, g = 1, f
        while any(g(P) != P for P in e16):
            k += 1
            g = (lambda g, f: lambda P: f(g(P)))(g, f)
        return k

    orders = sorted(order(f) for f in q8)
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4], orders  # one involution: Q8
    center = [f for f in q8 if order(f) <= 2]
    subgroups = {"1": [lambda P: P], "Z": center, "Q8": q8}
    table = {}
    for label, h in subgroups.items():
        fixed = [P for P in e3 if all(f(P) == P for f in h)]
        table[label] = round(math.log(len(fixed), 3))
    doc = {"curve": "w^2 + w = t^3", "genus": 1, "ell": 3, "dims": table}
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
