#!/usr/bin/env python3
"""
Phase Tracing
Timeline of the phases of a multi-step search, for debug logs
"""

import time
from typing import Dict, List, Tuple


class Trace:
    """
    Marks named phases against a monotonic clock.

        trace = Trace()
        ...                         # solve the optimum
        trace.mark("optimum_solved")
        ...                         # collect every optimum
        trace.mark("optima_collected")

    Each timeline entry carries the time since the start and the time the
    phase itself took (since the previous mark).
    """

    def __init__(self):
        self.events: List[Tuple[str, float]] = []
        self.start_time = time.perf_counter()

    def mark(self, phase: str) -> float:
        """Close a phase; returns its duration in ms"""
        elapsed = (time.perf_counter() - self.start_time) * 1000
        previous = self.events[-1][1] if self.events else 0.0
        self.events.append((phase, elapsed))
        return elapsed - previous

    @property
    def total_ms(self) -> float:
        return self.events[-1][1] if self.events else 0.0

    def get_timeline(self) -> List[Dict]:
        timeline = []
        previous = 0.0
        for phase, elapsed in self.events:
            timeline.append({
                "event": phase,
                "elapsed_ms": round(elapsed, 2),
                "phase_ms": round(elapsed - previous, 2),
            })
            previous = elapsed
        return timeline
