#utils/config.py
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from utils.errors import UsageError

logger = logging.getLogger(__name__)

ENGINES = ("amortized", "worstcase", "oracle")
FORMATS = ("csv", "jsonl")

DEFAULTS = {
    'engine': 'amortized',
    'emit_every': 1,
    'format': 'csv',
    'oracle_cap': 5000,
    'capacity': 2**32 - 1,
    'snapshot_dir': '.',
    'bench_sizes': [2**18, 2**19, 2**20, 2**21],
}


class Config:
    def __init__(self, config_dir=None):
        if config_dir is None:
            config_dir = os.environ.get('DELTA_CONFIG_DIR') or Path.home() / '.deltastream'
        self.config_dir = Path(config_dir)
        self.config_file = self.config_dir / 'config.json'
        self.data = self.load()

    def load(self):
        data = dict(DEFAULTS)
        if self.config_file.exists():
            try:
                with open(self.config_file, 'r') as f:
                    saved = json.load(f)
                for key in ('emit_every', 'oracle_cap', 'capacity'):
                    if key in saved:
                        saved[key] = int(saved[key])
                if 'bench_sizes' in saved:
                    if isinstance(saved['bench_sizes'], str):
                        saved['bench_sizes'] = parse_sizes(saved['bench_sizes'])
                    saved['bench_sizes'] = [int(n) for n in saved['bench_sizes']]
                data.update({k: v for k, v in saved.items() if k in DEFAULTS})
            except (OSError, ValueError, TypeError, UsageError) as e:
                logger.debug("ignoring unreadable config %s: %s", self.config_file, e)
                data = dict(DEFAULTS)
        return data

    def save(self):
        self.config_dir.mkdir(parents=True, exist_ok=True)
        with open(self.config_file, 'w') as f:
            json.dump(self.data, f, indent=2)

    def get(self, key):
        return self.data.get(key, DEFAULTS.get(key))

    def update_default_setting(self, key, value):
        if key not in DEFAULTS:
            raise UsageError(f"unknown setting {key!r}")
        self.data[key] = value
        self.save()

    def oracle_cap(self):
        env = os.environ.get('DELTA_ORACLE_CAP')
        if env:
            try:
                return int(env)
            except ValueError:
                raise UsageError(f"DELTA_ORACLE_CAP must be an integer, got {env!r}") from None
        return int(self.get('oracle_cap'))


def parse_sizes(text):
    try:
        sizes = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise UsageError(f"bad size list {text!r}") from None
    if not sizes or any(n < 1 for n in sizes):
        raise UsageError(f"bad size list {text!r}")
    return sizes


@dataclass
class RunConfig:
    """Resolved settings of one invocation"""
    input_path: Optional[str] = None
    engine: str = 'amortized'
    emit_every: int = 1
    format: str = 'csv'
    snapshot_at: List[int] = field(default_factory=list)
    snapshot_dir: str = '.'
    stats: bool = False
    bench: bool = False
    bench_sizes: List[int] = field(default_factory=lambda: list(DEFAULTS['bench_sizes']))
    oracle_cap: int = 5000
    capacity: int = 2**32 - 1
    strip_newlines: bool = False
    check: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise UsageError(f"unknown engine {self.engine!r}, expected one of {ENGINES}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}, expected one of {FORMATS}")
        if self.emit_every < 1:
            raise UsageError("--emit-every must be at least 1")
        if any(i < 1 for i in self.snapshot_at):
            raise UsageError("snapshot positions start at 1")

    @classmethod
    def resolve(cls, config, **flags):
        """CLI flags (None = not given) over environment over config file over defaults"""
        values = {
            'engine': config.get('engine'),
            'emit_every': config.get('emit_every'),
            'format': config.get('format'),
            'snapshot_dir': config.get('snapshot_dir'),
            'bench_sizes': list(config.get('bench_sizes')),
            'oracle_cap': config.oracle_cap(),
            'capacity': config.get('capacity'),
        }
        values.update({k: v for k, v in flags.items() if v is not None})
        return cls(**values)
