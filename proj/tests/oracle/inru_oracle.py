#!/usr/bin/env python3
"""Straight-line reference model of the cipher, written independently of the
C++ sources. Used once to produce the frozen vectors under tests/data/.

Run: python3 tests/oracle/inru_oracle.py
"""

SQUARE_TEXT = """
5 c 1 0 2 e 9 8 f d 3 b 7 a 4 6
f 4 3 a 8 d 6 2 5 e 1 7 b 0 c 9
6 7 d 2 0 3 f a 9 1 e 4 c 8 b 5
8 d 7 9 f 4 0 5 2 c b 3 1 6 e a
4 f 0 1 d 8 7 e c 2 a 6 9 3 5 b
9 b e 8 a 1 5 0 6 3 d c 4 2 7 f
a 1 c f 9 b 2 6 0 7 4 e d 5 3 8
e 2 9 7 c 5 1 4 d f 6 a 0 b 8 3
7 6 8 e 3 0 4 1 b a 2 f 5 d 9 c
2 e b 6 5 c a f 8 4 7 1 3 9 d 0
b 9 2 d 1 a c 3 7 0 8 5 f e 6 4
0 3 4 5 6 7 8 9 a b c d e f 1 2
3 0 f c 7 6 d b 1 9 5 8 2 4 a e
1 a 5 4 b 9 e 7 3 6 f 2 8 c 0 d
d 8 6 b 4 f 3 c e 5 9 0 a 7 2 1
c 5 a 3 e 2 b d 4 8 0 9 6 1 f 7
"""

Q = [[int(t, 16) for t in line.split()] for line in SQUARE_TEXT.strip().splitlines()]


def star(a, b):
    return Q[a][b]


def e_left(leader, s):
    out = []
    prev = leader
    for a in s:
        prev = star(prev, a)
        out.append(prev)
    return out


def e_right(leader, s):
    out = [0] * len(s)
    prev = leader
    for i in range(len(s) - 1, -1, -1):
        prev = star(prev, s[i])
        out[i] = prev
    return out


def to_bits(nibbles):
    bits = []
    for n in nibbles:
        for k in range(4):
            bits.append((n >> (3 - k)) & 1)
    return bits


def from_bits(bits):
    return [sum(bits[4 * j + k] << (3 - k) for k in range(4)) for j in range(len(bits) // 4)]


def xor_left_f2(nibbles):
    # eLeft over (F2, xor) with leader 1
    y = to_bits(nibbles)
    z = []
    prev = 1
    for b in y:
        prev ^= b
        z.append(prev)
    return from_bits(z)


def xor_right_f2(nibbles):
    # eRight over (F2, xor) with leader 0
    y = to_bits(nibbles)
    z = [0] * 64
    prev = 0
    for i in range(63, -1, -1):
        prev ^= y[i]
        z[i] = prev
    return from_bits(z)


def kxor(k, a):
    return [x ^ y for x, y in zip(k, a)]


def key_mixing(key, iv):
    s = list(key) + list(iv) + list(range(15, -1, -1))
    a = list(s)
    for i in range(1, 65):
        if i % 2 == 1:
            a = e_left(s[64 - i], a)
        else:
            a = e_right(s[64 - i], a)
    return a


def round_keys(a):
    s = list(range(16)) * 34
    l = list(s)
    for i in range(1, 65):
        if i % 2 == 1:
            l = e_left(a[i - 1], l)
        else:
            l = e_right(a[i - 1], l)
    return [[l[32 * i + 2 * j] for j in range(16)] for i in range(17)]


def encrypt(m, rk, rounds=16):
    c = list(m)
    for i in range(1, rounds + 1):
        c = kxor(rk[i - 1], c)
        if i % 2 == 1:
            c = e_left(rk[i - 1][0], c)
            c = xor_right_f2(c)
        else:
            c = e_right(rk[i - 1][15], c)
            if i != 16:
                c = xor_left_f2(c)
    return kxor(rk[rounds], c)


def hexs(n):
    return "".join("%x" % v for v in n)


def parse(h):
    return [int(ch, 16) for ch in h]


def lcg(seed):
    # tiny deterministic generator so vectors are reproducible without numpy
    x = seed
    while True:
        x = (x * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        yield (x >> 33) & 0xF


def main():
    zero_key, zero_iv, zero_pt = [0] * 32, [0] * 16, [0] * 16
    mixed = key_mixing(zero_key, zero_iv)
    rk = round_keys(mixed)
    print("# mixed(all-zero) =", hexs(mixed))
    for i, k in enumerate(rk):
        print("# rk%d = %s" % (i, hexs(k)))
    print("# one-round, rk0=0, m=0:", hexs(xor_right_f2(e_left(0, [0] * 16))))
    print("# e_left(b, 0123) =", hexs(e_left(0xb, [0, 1, 2, 3])))
    print("# e_right(0, 00) =", hexs(e_right(0, [0, 0])))

    gen = lcg(2024)
    records = [(zero_key, zero_iv, zero_pt)]
    records.append(([0xf] * 32, [0xf] * 16, [0xf] * 16))
    records.append((parse("0123456789abcdeffedcba9876543210"), zero_iv, parse("0123456789abcdef")))
    for _ in range(13):
        key = [next(gen) for _ in range(32)]
        iv = [next(gen) for _ in range(16)]
        pt = [next(gen) for _ in range(16)]
        records.append((key, iv, pt))
    for key, iv, pt in records:
        ct = encrypt(pt, round_keys(key_mixing(key, iv)))
        print("key=%s iv=%s pt=%s ct=%s" % (hexs(key), hexs(iv), hexs(pt), hexs(ct)))


if __name__ == "__main__":
    main()
