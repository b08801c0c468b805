#!/usr/bin/env python3
# Copyright 2026 The ffclass Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent hit list for q = 2, deg m = 4, deg S = 7, n = 5, compared with `ffclass search`.

Polynomials over F_2 are Python ints (bit i = coefficient of x^i). A pair (m, S) is a hit iff no
place P of degree <= 4 other than m has P^7 / S^deg(P) mod m in the image of u -> u^5, found by
enumerating all 15 units. Degree-5 cyclic means each unramified place is split or inert, and the
conductor contributes the single degree-4 place, so this is exactly "one place of degree 4 and
none of smaller degree".

usage: split_bruteforce.py PATH_TO_FFCLASS
"""
import json
import subprocess
import sys


def deg(a):
    return a.bit_length() - 1


def mulmod(a, b, m):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg(m) & 1:
            a ^= m
    return r


def polymod(a, m):
    while a and deg(a) >= deg(m):
        a ^= m << (deg(a) - deg(m))
    return a


def power(a, k, m):
    r = 1
    for _ in range(k):
        r = mulmod(r, a, m)
    return r


def irreducible(f):
    return all(polymod(f, g) != 0 for g in range(2, 1 << (deg(f) // 2 + 1)))


def irreducibles(d):
    return [f for f in range(1 << d, 1 << (d + 1)) if irreducible(f)]


def fmt(f):
    terms = []
    for i in range(deg(f), -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def hits():
    places = [p for d in range(1, 5) for p in irreducibles(d)]
    out = []
    for m in irreducibles(4):
        units = range(1, 16)
        fifth = {power(u, 5, m) for u in units}
        inverse = {u: next(v for v in units if mulmod(u, v, m) == 1) for u in units}
        for s in irreducibles(7):
            s_red = polymod(s, m)
            z_inf = inverse[s_red]
            zs = [z_inf]
            for p in places:
                if p == m:
                    continue
                num = power(polymod(p, m), 7, m)
                den = power(s_red, deg(p), m)
                zs.append(mulmod(num, inverse[den], m))
            if not any(z in fifth for z in zs):
                out.append((fmt(m), fmt(s)))
    return out


def main():
    expected = hits()
    proc = subprocess.run(
        [sys.argv[1], "search", "--q", "2", "--modulus-degree", "4", "--split-degree", "7", "--degree", "5",
         "--format", "json"],
        capture_output=True, text=True, check=True)
    got = [(h["modulus"], h["split"]) for h in json.loads(proc.stdout)["hits"]]
    print(f"oracle hits: {len(expected)}, tool hits: {len(got)}")
    for m, s in expected:
        print(f"  {m}  {s}")
    if sorted(expected) != sorted(got):
        print("MISMATCH")
        sys.exit(1)
    if ("x^4+x+1", "x^7+x^4+1") not in expected or ("x^4+x+1", "x^7+x^3+1") not in expected:
        print("reference configurations missing")
        sys.exit(1)
    print("hit lists agree")


if __name__ == "__main__":
    main()
