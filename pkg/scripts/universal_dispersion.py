"""Spread of Maurer's universal statistic: keystream vs the mix64 reference.

Prints, per source, the variance of the p-values (ideal 1/12), the mean and
standard deviation of f_n, and the 10-bin p-value histogram. Used to check
whether an out-of-band p-value variance comes from the generator or from the
test's normal approximation.
"""

import argparse

import numpy as np

from mmohocc.battery import keystream_source, mix64_source
from mmohocc.keyschedule import parse_hex_key
from mmohocc.stats.complexity import maurer_universal, universal_parameters

DEFAULT_KEYS = ("0" * 32, "0123456789abcdef0123456789abcdef",
                "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f")


def summarize(label, source):
    ps, fn = [], []
    for seq in source:
        r = maurer_universal(seq)
        ps.append(r.p_value)
        fn.append(r.detail["fn"])
    ps, fn = np.array(ps), np.array(fn)
    hist = np.histogram(ps, 10, (0, 1))[0]
    print(f"{label:<20} m={ps.size:<5} var(p)={ps.var():.4f} "
          f"fn={fn.mean():.6f} sd(fn)={fn.std():.6f} hist={hist.tolist()}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sequences", type=int, default=300)
    p.add_argument("--bits", type=int, default=1_000_000)
    p.add_argument("--keys", nargs="*", default=list(DEFAULT_KEYS))
    args = p.parse_args()
    print("universal parameters (L, Q):", universal_parameters(args.bits))
    for key in args.keys:
        summarize(key[:16], keystream_source(parse_hex_key(key), args.bits, args.sequences))
    summarize("mix64", mix64_source(args.bits, 3 * args.sequences, start=10**9))


if __name__ == "__main__":
    main()
