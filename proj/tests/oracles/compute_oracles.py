"""Independent reference values for the C++ test suites.

Everything here uses plain Python integers, fractions and a byte-array sieve,
none of which share code with the library. Run with:

    python3 tests/oracles/compute_oracles.py
"""
import math
from fractions import Fraction

LIMIT = 8009 * 8009 + 2


def simple_sieve(n):
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return flags


def main():
    flags = simple_sieve(LIMIT)
    primes_small = [i for i in range(2, 10**6 + 1) if flags[i]]

    def pi(x):
        return sum(flags[: x + 1])

    def twin(q):
        return q + 2 if q % 6 == 5 else q - 2

    def is_twin_member(q):
        return flags[q] and q >= 5 and (flags[q - 2] or flags[q + 2])

    print("pi(30) =", pi(30))
    print("pi(10201) =", pi(10201))
    print("pi(1018081) =", pi(1009 * 1009))
    print("pi(64144081) =", pi(8009 * 8009))
    print("index of 8009 =", primes_small.index(8009) + 1)

    # Actual column under the conventions the library offers.
    for p in (5, 7, 101, 199, 907, 1999, 8009):
        closed = sum(1 for q in range(p, p * p + 1) if is_twin_member(q))
        meeting = sum(1 for q in range(max(5, p - 2), p * p + 1) if is_twin_member(q))
        print(f"actual p={p}: closed={closed} meeting={meeting}")

    # Deletion ledger by direct classification.
    def spf_from5(n):
        d = 5
        while d * d <= n:
            if n % d == 0:
                return d
            d += 2
        return n

    def ledger(p):
        steps = {}
        survivors = 0
        for q in range(5, p * p):
            if not flags[q]:
                continue
            s = min(q, spf_from5(twin(q)))
            if s < p:
                steps[s] = steps.get(s, 0) + 1
            else:
                survivors += 1
        return steps, survivors

    for p in (7, 11, 101):
        steps, surv = ledger(p)
        print(f"ledger p={p}: step5={steps.get(5, 0)} nsteps={len(steps)} survivors={surv} total={sum(steps.values()) + surv} pi-2={pi(p*p)-2}")
    steps, surv = ledger(1009)
    n5 = steps[5]
    approx = pi(1009 * 1009) / 4 + 1
    print(f"ledger p=1009: N(5)={n5} approx={approx} relerr={(n5 - approx) / approx:.6f}")

    # Estimates.
    def prod_range(p, f):
        out = 1.0
        for q in primes_small:
            if q > p:
                break
            out *= f(q)
        return out

    for p in (5, 101, 1009, 8009):
        P = pi(p * p)
        e7 = prod_range(p, lambda q: (q - 2) / (q - 1) if q >= 5 else 1.0) * P
        r = P / (p * p) * prod_range(p, lambda q: q / (q - 1))
        e15 = P * P / (p * p) * 4 * prod_range(p, lambda q: q * (q - 2) / (q - 1) ** 2 if q >= 3 else 1.0)
        print(f"p={p} pi={P} eq7={e7!r} r={r!r} eq15={e15!r}")

    # Exact telescoping check for p = 11.
    tel = 1 - Fraction(3, 4) * Fraction(5, 6) * Fraction(9, 10)
    print("telescope p=11:", tel, Fraction(1, 4) + Fraction(1, 8) + Fraction(1, 16))

    # Twin product truncations.
    for bound in (3, 100, 10**4, 10**6):
        v = 1.0
        for q in primes_small:
            if q > bound:
                break
            if q >= 3:
                v *= q * (q - 2) / (q - 1) ** 2
        print(f"twin product <= {bound}: {v!r}")

    gamma = 0.577215664901533
    print("half_e_gamma =", repr(math.exp(gamma) / 2))
    for p in (5, 101, 1009, 8009):
        m = prod_range(p, lambda q: (q - 1) / q) * math.log(p * p) / (2 * math.exp(-gamma))
        print(f"mertens p={p}: {m!r}")

    x = 8009 * 8009
    tp = prod_range(8009, lambda q: q * (q - 2) / (q - 1) ** 2 if q >= 3 else 1.0)
    e16 = 4 * x / math.log(x) ** 2 * tp
    P = pi(x)
    e15 = P * P / x * 4 * tp
    print(f"eq16(8009^2) = {e16!r} ratio eq16/eq15 = {e16 / e15!r}")


if __name__ == "__main__":
    main()
