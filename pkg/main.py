import argparse
import json
import logging
import sys

from utils.config import Config, RunConfig, parse_sizes
from utils.errors import DeltaError, InputReadError, UsageError
from utils.stream_runner import bench, read_input, run
from utils.textgen import KINDS, GenSpec, generate

logger = logging.getLogger("deltastream")

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(message)s"
LOG_DATEFMT = "%H:%M:%S"


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def positions(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad position list {text!r}") from None


def sizes(text):
    try:
        return parse_sizes(text)
    except UsageError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_run_parser():
    p = ArgumentParser(
        prog="delta",
        description="Online normalized substring complexity (delta) of a byte stream.",
        epilog="Subcommands: 'delta gen ...' writes test texts, 'delta view ...' opens the hull viewer.",
    )
    p.add_argument("path", nargs="?", help="input file (default: stdin)")
    p.add_argument("--engine", choices=("amortized", "worstcase", "oracle"))
    p.add_argument("--emit-every", type=int, metavar="N", help="emit a record every N positions")
    p.add_argument("--format", choices=("csv", "jsonl"))
    p.add_argument("--snapshot-at", type=positions, default=[], metavar="I[,I...]",
                   help="write hull snapshots after these positions")
    p.add_argument("--snapshot-dir", metavar="DIR")
    p.add_argument("--stats", action="store_true", default=None, help="add engine counters to the summary")
    p.add_argument("--bench", action="store_true", default=None,
                   help="time seeded random binary texts instead of reading input")
    p.add_argument("--bench-sizes", type=sizes, metavar="N[,N...]")
    p.add_argument("--seed", type=int, help="seed of the bench texts")
    p.add_argument("--strip-newlines", action="store_true", default=None,
                   help="drop \\n and \\r bytes before streaming")
    p.add_argument("--check", action="store_true", default=None,
                   help="cross-check every step against a plain count simulation")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_gen_parser():
    p = ArgumentParser(prog="delta gen", description="Write a generated test text as raw bytes.")
    p.add_argument("--kind", choices=KINDS, default="random")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pattern", help="period (periodic) or symbol table (other kinds)")
    p.add_argument("--output", "-o", help="output file (default: stdout)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_view_parser():
    p = ArgumentParser(prog="delta view", description="Draw count points, upper hull and tangent.")
    p.add_argument("snapshot", nargs="?", help="snapshot JSON written by --snapshot-at")
    p.add_argument("--stream", metavar="PATH", help="stream a file and redraw as delta evolves")
    p.add_argument("--engine", choices=("amortized", "worstcase", "oracle"), default="amortized")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


class DeltaApp:
    def __init__(self, argv=None, stdout=None, stderr=None):
        self.argv = list(sys.argv[1:] if argv is None else argv)
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        self.config = Config()

    def setup_logging(self, verbose, default_level):
        logging.basicConfig(
            level=logging.DEBUG if verbose else default_level,
            format=LOG_FORMAT,
            datefmt=LOG_DATEFMT,
            stream=self.stderr,
            force=True,
        )

    def run(self):
        try:
            if self.argv and self.argv[0] == "gen":
                return self.gen(self.argv[1:])
            if self.argv and self.argv[0] == "view":
                return self.view(self.argv[1:])
            return self.delta(self.argv)
        except DeltaError as e:
            self.stderr.write(f"delta: {e}\n")
            return e.exit_code

    def delta(self, argv):
        args = build_run_parser().parse_args(argv)
        self.setup_logging(args.verbose, logging.INFO if args.bench else logging.WARNING)
        config = RunConfig.resolve(
            self.config,
            input_path=args.path,
            engine=args.engine,
            emit_every=args.emit_every,
            format=args.format,
            snapshot_at=args.snapshot_at,
            snapshot_dir=args.snapshot_dir,
            stats=args.stats,
            bench=args.bench,
            bench_sizes=args.bench_sizes,
            seed=args.seed,
            strip_newlines=args.strip_newlines,
            check=args.check,
        )
        if config.bench:
            report = bench(config)
            self.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")
            return 0
        data = read_input(config.input_path)
        return run(config, data, self.stdout, self.stderr)

    def gen(self, argv):
        args = build_gen_parser().parse_args(argv)
        self.setup_logging(args.verbose, logging.WARNING)
        pattern = args.pattern.encode("latin-1") if args.pattern is not None else None
        text = generate(GenSpec(kind=args.kind, length=args.length, alphabet=args.alphabet,
                                seed=args.seed, pattern=pattern))
        if args.output:
            try:
                with open(args.output, "wb") as f:
                    f.write(text)
            except OSError as e:
                raise InputReadError(f"cannot write {args.output}: {e.strerror or e}") from e
            logger.info("wrote %d bytes to %s", len(text), args.output)
        else:
            out = getattr(self.stdout, "buffer", None)
            if out is not None:
                out.write(text)
                out.flush()
            else:
                self.stdout.write(text.decode("latin-1"))
        return 0

    def view(self, argv):
        args = build_view_parser().parse_args(argv)
        self.setup_logging(args.verbose, logging.INFO)
        if not args.snapshot and not args.stream:
            raise UsageError("delta view: give a snapshot file or --stream PATH")
        from gui.main_window import launch_viewer
        return launch_viewer(snapshot_path=args.snapshot, stream_path=args.stream, engine=args.engine)


def main():
    app = DeltaApp()
    sys.exit(app.run())


if __name__ == "__main__":
    main()
