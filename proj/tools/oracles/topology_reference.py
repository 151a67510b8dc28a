#!/usr/bin/env python3
# Copyright 2026 The wmnroute Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent model of the seeded generator; prints values frozen in tests."""

import math
import sys

M = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.s = seed & M

    def next(self):
        self.s = (self.s + 0x9E3779B97F4A7C15) & M
        z = self.s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
        return z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M


class Xoshiro256:
    def __init__(self, seed):
        mix = SplitMix64(seed)
        self.s = [mix.next() for _ in range(4)]

    def next(self):
        s = self.s
        result = (rotl((s[1] * 5) & M, 7) * 9) & M
        t = (s[1] << 17) & M
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result

    def unit(self):
        return (self.next() >> 11) * 2.0**-53

    def uniform(self, lo, hi):
        v = lo + (hi - lo) * self.unit()
        return v if v < hi else math.nextafter(hi, lo)


def generate(n, area, radius, seed, rate=(1.0, 10.0), delay=2.0):
    rng = Xoshiro256(seed)
    pos = []
    for _ in range(n):
        x = rng.unit() * area
        y = rng.unit() * area
        pos.append((x, y))
    links = []
    r2 = radius * radius
    for i in range(n):
        for j in range(i + 1, n):
            dx = pos[i][0] - pos[j][0]
            dy = pos[i][1] - pos[j][1]
            if dx * dx + dy * dy > r2:
                continue
            links.append((i, j, rng.uniform(*rate), delay))
    return pos, links


def main():
    rng = Xoshiro256(0)
    print("xoshiro(0):", [rng.next() for _ in range(3)])
    print("splitmix(0):", [SplitMix64(0).next()])
    pos, links = generate(50, 1000.0, 200.0, 7)
    print("n50 r200 seed7 links:", len(links))
    print("node0:", repr(pos[0][0]), repr(pos[0][1]))
    print("first link:", links[0][0], links[0][1], repr(links[0][2]))
    print("last link:", links[-1][0], links[-1][1], repr(links[-1][2]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
