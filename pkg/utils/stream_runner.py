#utils/stream_runner.py
"""
Stream a byte source through a DeltaStream and write what the command line
promises: per-position records on stdout, a summary on stderr, snapshot
files, and benchmark reports.
"""
import csv
import json
import logging
import math
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import numpy as np

from utils.count_oracle import StreamingCounts
from utils.delta_core import DeltaStream
from utils.errors import DeltaError, EmptyInputError, InputReadError, OracleCapExceeded
from utils.file_naming import FileNamingUtils
from utils.textgen import GenSpec, generate

logger = logging.getLogger(__name__)

RECORD_FIELDS = ("i", "delta_num", "delta_den", "delta_float",
                 "maximizing_length", "alpha", "step_kind")


def read_input(path):
    """Raw bytes of a file, or of stdin when path is None or '-'"""
    try:
        if not path or path == '-':
            return sys.stdin.buffer.read()
        with open(path, 'rb') as f:
            return f.read()
    except OSError as e:
        raise InputReadError(f"cannot read {path or 'stdin'}: {e.strerror or e}") from e


def strip_newlines(data):
    return data.replace(b"\n", b"").replace(b"\r", b"")


def report_record(report):
    return {
        "i": report.i,
        "delta_num": report.delta.numerator,
        "delta_den": report.delta.denominator,
        "delta_float": report.delta_float,
        "maximizing_length": report.maximizing_length,
        "alpha": report.alpha,
        "step_kind": report.step_kind,
    }


class RecordWriter:
    """csv (header first) or one JSON object per line"""

    def __init__(self, out, fmt):
        self.out = out
        self.fmt = fmt
        self._csv = None
        if fmt == 'csv':
            self._csv = csv.DictWriter(out, fieldnames=RECORD_FIELDS, lineterminator="\n")
            self._csv.writeheader()

    def write(self, report):
        record = report_record(report)
        if self._csv is not None:
            record["delta_float"] = repr(record["delta_float"])
            self._csv.writerow(record)
        else:
            self.out.write(json.dumps(record) + "\n")


def make_stream(config):
    return DeltaStream(
        engine=config.engine,
        capacity=config.capacity,
        oracle_cap=config.oracle_cap,
        debug=config.check,
    )


def write_snapshot(stream, config):
    path = FileNamingUtils.snapshot_path(config.snapshot_dir, config.input_path, stream.i)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with open(path, 'w') as f:
            json.dump(stream.snapshot().to_json(), f)
            f.write("\n")
    except OSError as e:
        raise InputReadError(f"cannot write snapshot {path}: {e.strerror or e}") from e
    logger.info("snapshot at i=%d written to %s", stream.i, path)
    return path


def summary(stream, config):
    report = stream.last_report
    result = {
        "n": stream.i,
        "engine": config.engine,
        "delta": f"{report.delta.numerator}/{report.delta.denominator}",
        "delta_float": report.delta_float,
        "maximizing_length": report.maximizing_length,
        "R": report.R,
        "pullbacks": asdict(stream.stats()),
    }
    if config.stats:
        result["counters"] = stream.counters()
        if stream.tracker is not None:
            result["counters"]["suffix_tree_steps"] = stream.tracker.operations
    return result


def partial_summary(stream, config, error):
    """Summary of whatever was streamed before error stopped the run"""
    if stream.last_report is not None:
        result = summary(stream, config)
    else:
        result = {"n": stream.i, "engine": config.engine}
    result["error"] = str(error)
    return result


def run(config, data, out, err=None):
    """Stream data, emit records to out and the summary line to err. Returns the exit status."""
    err = err if err is not None else sys.stderr
    if config.strip_newlines:
        data = strip_newlines(data)
    if not data:
        raise EmptyInputError("input is empty; delta is defined for nonempty texts")

    n = len(data)
    stream = make_stream(config)
    try:
        # refuse before the header goes out, not halfway through the records
        if config.engine == "oracle" and n > config.oracle_cap:
            raise OracleCapExceeded(
                f"oracle engine is capped at {config.oracle_cap} symbols, input has {n} "
                f"(set DELTA_ORACLE_CAP to raise it)"
            )
        writer = RecordWriter(out, config.format)
        pending = sorted(set(config.snapshot_at))
        for position in pending:
            if position > n:
                logger.warning("snapshot position %d is beyond the input length %d", position, n)
        pending = [p for p in pending if p <= n]
        simulation = StreamingCounts() if config.check else None

        for symbol in data:
            report = stream.push(symbol)
            if simulation is not None:
                simulation.push(symbol)
                stream.check_invariants(simulation.counts)
            if report.i % config.emit_every == 0 or report.i == n:
                writer.write(report)
            if pending and pending[0] == report.i:
                write_snapshot(stream, config)
                pending.pop(0)
    except DeltaError as e:
        err.write(json.dumps(partial_summary(stream, config, e)) + "\n")
        raise

    err.write(json.dumps(summary(stream, config)) + "\n")
    return 0


@dataclass
class BenchRun:
    n: int
    total_seconds: float
    p50_us: float
    p99_us: float
    max_us: float
    pullbacks: Dict
    counters: Dict
    pullback_distance_within_n: bool
    alpha_sum_within_2nlogn: bool


@dataclass
class BenchReport:
    engine: str
    seed: int
    runs: List[BenchRun] = field(default_factory=list)
    doubling_ratios: List[float] = field(default_factory=list)

    def to_json(self):
        return asdict(self)


def bench_one(config, n):
    data = generate(GenSpec(kind="random", length=n, alphabet=2, seed=config.seed))
    stream = make_stream(config)
    latencies = np.empty(n, dtype=np.int64)
    clock = time.perf_counter_ns
    started = clock()
    for index, symbol in enumerate(data):
        t0 = clock()
        stream.push(symbol)
        latencies[index] = clock() - t0
    total = (clock() - started) / 1e9

    stats = stream.stats()
    counters = stream.counters()
    p50, p99 = np.percentile(latencies, [50, 99]) / 1e3
    return BenchRun(
        n=n,
        total_seconds=total,
        p50_us=float(p50),
        p99_us=float(p99),
        max_us=float(latencies.max()) / 1e3,
        pullbacks=asdict(stats),
        counters=counters,
        pullback_distance_within_n=stats.distance <= n,
        alpha_sum_within_2nlogn=stats.alpha_sum <= 2 * n * math.log2(max(n, 2)),
    )


def bench(config):
    report = BenchReport(engine=config.engine, seed=config.seed)
    for n in config.bench_sizes:
        logger.info("bench: %s engine, n=%d", config.engine, n)
        run_ = bench_one(config, n)
        logger.info("bench: n=%d took %.3fs (p99 %.1fus)", n, run_.total_seconds, run_.p99_us)
        report.runs.append(run_)
    for previous, current in zip(report.runs, report.runs[1:]):
        if previous.total_seconds > 0:
            report.doubling_ratios.append(current.total_seconds / previous.total_seconds)
    return report
