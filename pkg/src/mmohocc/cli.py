"""Command-line interface.

Every invocation is a pure function of its arguments and input files.  The
keystream always restarts from the key, so two ``gen`` runs do not continue
each other.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 battery run non-random.
"""

from __future__ import annotations

import argparse
import hashlib
import secrets
import sys

from . import __version__
from .battery import BatteryConfig, file_source, keystream_source, run_battery
from .hopping import pattern_for_hpsn
from .keyschedule import DEFAULT_MAPS, DEFAULT_ORBITS, parse_hex_key
from .keystream import KeystreamGenerator
from .report import to_text, write_reports
from .stats import TEST_NAMES
from .vectors import as_text

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NONRANDOM = 0, 1, 2, 3
CHUNK = 1 << 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _key(text: str) -> bytes:
    try:
        return parse_hex_key(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _tests(text: str) -> tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [t for t in names if t not in TEST_NAMES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown tests {unknown}; choose from {', '.join(TEST_NAMES)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mmohocc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_key(sp, required=True):
        sp.add_argument("--key", type=_key, required=required,
                        help="master key, 32/64/128 hex digits")
        sp.add_argument("--maps", type=_positive, default=DEFAULT_MAPS)
        sp.add_argument("--orbits", type=_positive, default=DEFAULT_ORBITS)

    sp = sub.add_parser("keygen", help="print a fresh random key")
    sp.add_argument("--bits", type=int, choices=(128, 256, 512), default=128)

    sp = sub.add_parser("gen", help="write raw keystream")
    with_key(sp)
    sp.add_argument("--bytes", type=int, required=True, dest="nbytes")
    sp.add_argument("--out", required=True)

    for name in ("encrypt", "decrypt"):
        sp = sub.add_parser(name, help=f"{name} a file with the keystream")
        with_key(sp)
        sp.add_argument("--in", required=True, dest="inp")
        sp.add_argument("--out", required=True)

    sp = sub.add_parser("test", help="run the statistical battery")
    with_key(sp, required=False)
    sp.add_argument("--in", dest="inp", help="raw bit file, MSB first")
    sp.add_argument("--sequences", type=_positive, default=100)
    sp.add_argument("--bits", type=_positive, default=1_000_000)
    sp.add_argument("--alpha", type=float, default=0.01)
    sp.add_argument("--tests", type=_tests, default=TEST_NAMES,
                    help="comma-separated subset of: " + ", ".join(TEST_NAMES))
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--report", required=True, help="prefix for .txt/.json/.csv")

    sp = sub.add_parser("pattern", help="print one hopping-pattern row")
    sp.add_argument("--hpsn", type=int, required=True)
    sp.add_argument("--orbits", type=int, default=DEFAULT_ORBITS)

    sub.add_parser("vectors", help="print the known-answer vectors")
    return p


def _cmd_keygen(args, out):
    print(secrets.token_hex(args.bits // 8), file=out)
    return EXIT_OK


def _cmd_gen(args, out):
    if args.nbytes < 0:
        raise UsageError("--bytes must be non-negative")
    gen = KeystreamGenerator(args.key, args.maps, args.orbits)
    left = args.nbytes
    with open(args.out, "wb") as fh:
        while left:
            take = min(left, CHUNK)
            fh.write(gen.next_bytes(take))
            left -= take
    return EXIT_OK


def _cmd_xor(args, out):
    gen = KeystreamGenerator(args.key, args.maps, args.orbits)
    with open(args.inp, "rb") as src, open(args.out, "wb") as dst:
        while chunk := src.read(CHUNK):
            dst.write(gen.xor(chunk))
    return EXIT_OK


def _sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        while chunk := fh.read(CHUNK):
            h.update(chunk)
    return h.hexdigest()


def _cmd_test(args, out):
    if (args.key is None) == (args.inp is None):
        raise UsageError("test: give exactly one of --key or --in")
    try:
        cfg = BatteryConfig(sequences=args.sequences, bits_per_sequence=args.bits,
                            alpha=args.alpha, tests=args.tests, workers=args.workers)
    except ValueError as exc:
        raise UsageError(f"test: {exc}") from None
    prefix = args.report
    manifest = {
        "command": "test",
        "tool_version": __version__,
        "sequences": args.sequences,
        "bits_per_sequence": args.bits,
        "alpha": args.alpha,
        "outputs": [f"{prefix}.{ext}" for ext in ("txt", "json", "csv")],
    }
    if args.key is not None:
        manifest.update(key=args.key.hex(), M=args.maps, K=args.orbits)
        source = keystream_source(args.key, args.bits, args.sequences,
                                  args.maps, args.orbits)
    else:
        manifest.update(input=args.inp, input_sha256=_sha256(args.inp))
        source = file_source(args.inp, args.bits, args.sequences)
    try:
        report = run_battery(source, cfg, manifest)
    except ValueError as exc:
        # short input file
        raise UsageError(f"test: {exc}") from None
    write_reports(report, prefix)
    out.write(to_text(report))
    return EXIT_NONRANDOM if report.below_range else EXIT_OK


def _cmd_pattern(args, out):
    try:
        row = pattern_for_hpsn(args.hpsn, args.orbits)
    except ValueError as exc:
        raise UsageError(f"pattern: {exc}") from None
    print(" ".join(map(str, row)), file=out)
    return EXIT_OK


def _cmd_vectors(args, out):
    print(as_text(), file=out)
    return EXIT_OK


COMMANDS = {
    "keygen": _cmd_keygen, "gen": _cmd_gen, "encrypt": _cmd_xor, "decrypt": _cmd_xor,
    "test": _cmd_test, "pattern": _cmd_pattern, "vectors": _cmd_vectors,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SystemExit as exc:
        # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
