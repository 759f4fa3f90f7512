#gui/hull_plot.py
"""Coordinate mapping for the hull canvas. No Qt here."""
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from utils.errors import InputReadError


@dataclass
class PlotData:
    n: int
    R: int
    delta: Fraction
    tangency_k: int
    points: List[Tuple[int, int]]
    hull: List[int]

    @classmethod
    def from_json(cls, data):
        num, _, den = str(data["delta"]).partition("/")
        return cls(
            n=int(data["n"]),
            R=int(data["R"]),
            delta=Fraction(int(num), int(den or 1)),
            tangency_k=int(data["tangency_k"]),
            points=[(int(k), int(c)) for k, c in data["points"]],
            hull=[int(k) for k in data["hull"]],
        )

    @classmethod
    def from_snapshot(cls, snapshot):
        return cls.from_json(snapshot.to_json())

    def hull_points(self):
        heights = dict(self.points)
        return [(k, heights[k]) for k in self.hull]


def load_snapshot(path):
    try:
        with open(path, 'r') as f:
            return PlotData.from_json(json.load(f))
    except OSError as e:
        raise InputReadError(f"cannot read {path}: {e.strerror or e}") from e
    except (ValueError, KeyError, TypeError) as e:
        raise InputReadError(f"{path} is not a snapshot file: {e}") from e


@dataclass
class PlotFrame:
    """Maps data (k, c) with origin (0, 0) onto a pixel rectangle, y pointing down"""
    width: int
    height: int
    max_x: int
    max_y: int
    margin: int = 30

    @classmethod
    def fit(cls, plot, width, height, margin=30):
        max_x = max((k for k, _ in plot.points), default=1)
        max_y = max((c for _, c in plot.points), default=1)
        return cls(width, height, max(max_x, 1) + 1, max(max_y, 1) + 1, margin)

    def to_pixel(self, x, y):
        usable_w = max(self.width - 2 * self.margin, 1)
        usable_h = max(self.height - 2 * self.margin, 1)
        px = self.margin + x * usable_w / self.max_x
        py = self.height - self.margin - y * usable_h / self.max_y
        return px, py

    def tangent_segment(self, delta):
        """Pixel end points of y = delta * x from the origin, clipped to the frame"""
        end_x = float(self.max_x)
        end_y = float(delta) * end_x
        if end_y > self.max_y:
            end_x = self.max_y / float(delta)
            end_y = float(self.max_y)
        return self.to_pixel(0, 0), self.to_pixel(end_x, end_y)
