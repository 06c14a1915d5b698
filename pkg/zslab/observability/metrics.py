#!/usr/bin/env python3
"""
Metrics Registry
Solver and check behaviour quantification.

Series are keyed by name plus optional labels, rendered Prometheus-style:
    checks_total{status="fail"}
"""

import threading
from collections import defaultdict
from datetime import datetime, timezone
from typing import Dict, List, Optional

import numpy as np


def series_key(name: str, **labels: str) -> str:
    """name{k="v",...} with labels sorted; the bare name when unlabeled"""
    if not labels:
        return name
    inner = ",".join(f'{k}="{v}"' for k, v in sorted(labels.items()))
    return f"{name}{{{inner}}}"


class Counter:
    """Monotonic integer series"""

    def __init__(self):
        self._value = 0
        self._lock = threading.Lock()

    def inc(self, amount: int = 1):
        if amount < 0:
            raise ValueError("Counters only go up")
        with self._lock:
            self._value += amount

    @property
    def value(self) -> int:
        with self._lock:
            return self._value

    def reset(self):
        with self._lock:
            self._value = 0


class Histogram:
    """Latency observations with count, extremes and quantiles"""

    QUANTILES = (0.5, 0.95)

    def __init__(self):
        self._values: List[float] = []
        self._lock = threading.Lock()

    def observe(self, value: float):
        with self._lock:
            self._values.append(float(value))

    def get_stats(self) -> Dict[str, float]:
        with self._lock:
            values = np.asarray(self._values, dtype=float)
        if values.size == 0:
            return {"count": 0, "sum": 0.0, "avg": 0.0, "min": 0.0, "max": 0.0, "p50": 0.0, "p95": 0.0}
        p50, p95 = np.quantile(values, self.QUANTILES)
        return {
            "count": int(values.size),
            "sum": float(values.sum()),
            "avg": float(values.mean()),
            "min": float(values.min()),
            "max": float(values.max()),
            "p50": float(p50),
            "p95": float(p95),
        }

    def reset(self):
        with self._lock:
            self._values = []


class MetricsRegistry:
    """
    Central metrics registry.

    Names in use:
    - counters: solver_runs_total{objective}, solver_nodes_total{objective},
      checks_total, checks_failed_total, check_outcomes_total{status}
    - histograms: solve_latency_ms, check_latency_ms
    """

    def __init__(self):
        self._counters: Dict[str, Counter] = defaultdict(Counter)
        self._histograms: Dict[str, Histogram] = defaultdict(Histogram)
        self._lock = threading.Lock()
        self._created_at = datetime.now(timezone.utc)

    def counter(self, name: str, **labels: str) -> Counter:
        with self._lock:
            return self._counters[series_key(name, **labels)]

    def histogram(self, name: str, **labels: str) -> Histogram:
        with self._lock:
            return self._histograms[series_key(name, **labels)]

    # ==================== DOMAIN RECORDERS ====================

    def record_solve(self, objective: str, nodes: int, elapsed_ms: float):
        """One finished solver run"""
        self.counter("solver_runs_total", objective=objective).inc()
        self.counter("solver_nodes_total", objective=objective).inc(nodes)
        self.histogram("solve_latency_ms").observe(elapsed_ms)

    def record_check(self, status: str, elapsed_ms: float):
        """One finished verification check"""
        self.counter("checks_total").inc()
        self.counter("check_outcomes_total", status=status).inc()
        if status == "fail":
            self.counter("checks_failed_total").inc()
        self.histogram("check_latency_ms").observe(elapsed_ms)

    def get_snapshot(self) -> Dict:
        with self._lock:
            counters = dict(self._counters)
            histograms = dict(self._histograms)
        return {
            "counters": {key: c.value for key, c in sorted(counters.items())},
            "histograms": {key: h.get_stats() for key, h in sorted(histograms.items())},
            "meta": {
                "created_at": self._created_at.isoformat(),
                "uptime_seconds": (datetime.now(timezone.utc) - self._created_at).total_seconds(),
            },
        }

    def reset_all(self):
        """Zero every series (tests)"""
        with self._lock:
            for counter in self._counters.values():
                counter.reset()
            for histogram in self._histograms.values():
                histogram.reset()
            self._created_at = datetime.now(timezone.utc)


_metrics: Optional[MetricsRegistry] = None


def get_metrics() -> MetricsRegistry:
    """Get singleton metrics registry"""
    global _metrics
    if _metrics is None:
        _metrics = MetricsRegistry()
    return _metrics
