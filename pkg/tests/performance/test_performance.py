"""Timing checks for the search engines, run in CI to catch regressions."""

import time
from typing import Any, Callable, Dict, List

import pytest

from helix_lab.chromatics import chromatic_number
from helix_lab.graphs import cycle, kneser, petersen
from helix_lab.hom import has_homomorphism
from helix_lab.monitoring import ComponentName, track_performance


class PerformanceTest:
    """Repeats a call and compares its mean duration with a threshold."""

    def __init__(
        self,
        name: str,
        threshold_ms: float = 100.0,
        iterations: int = 10,
        warmup_iterations: int = 1,
    ):
        self.name = name
        self.threshold_ms = threshold_ms
        self.iterations = iterations
        self.warmup_iterations = warmup_iterations
        self.results: List[float] = []

    def run(
        self, func: Callable[..., Any], *args: Any, **kwargs: Any
    ) -> Dict[str, Any]:
        for _ in range(self.warmup_iterations):
            func(*args, **kwargs)

        self.results = []
        for _ in range(self.iterations):
            with track_performance(self.name, ComponentName.HARNESS) as span:
                start_time = time.perf_counter()
                func(*args, **kwargs)
                duration_ms = (time.perf_counter() - start_time) * 1000
                self.results.append(duration_ms)
                span.add_data({"iteration_duration_ms": duration_ms})
        return self.get_stats()

    def get_stats(self) -> Dict[str, Any]:
        if not self.results:
            return {"name": self.name, "iterations": 0, "passed": False}
        ordered = sorted(self.results)
        n = len(ordered)
        return {
            "name": self.name,
            "min": round(ordered[0], 3),
            "max": round(ordered[-1], 3),
            "avg": round(self.avg_duration(), 3),
            "median": round(ordered[n // 2], 3),
            "iterations": n,
            "passed": self.avg_duration() <= self.threshold_ms,
        }

    def avg_duration(self) -> float:
        if not self.results:
            return 0.0
        return sum(self.results) / len(self.results)

    def __str__(self) -> str:
        stats = self.get_stats()
        return (
            f"performance '{self.name}' - {'pass' if stats['passed'] else 'fail'}\n"
            f"  mean {self.avg_duration():.3f}ms (threshold {self.threshold_ms:.3f}ms)"
        )


@pytest.mark.slow
class TestSearchPerformance:
    """Generous upper bounds on the core searches."""

    def test_petersen_to_pentagon(self):
        """Test refuting P -> C5 stays fast."""
        g, h = petersen(), cycle(5)
        bench = PerformanceTest("hom P -> C:5", threshold_ms=2000.0, iterations=5)
        stats = bench.run(has_homomorphism, g, h)
        print(bench)
        assert stats["passed"], str(bench)

    def test_kneser_chromatic_number(self):
        """Test chi(KG(7,2)) = 5 within the threshold."""
        g = kneser(7, 2)
        assert chromatic_number(g).integer_value == 5
        bench = PerformanceTest("chi KG:7,2", threshold_ms=5000.0, iterations=3)
        stats = bench.run(chromatic_number, g)
        print(bench)
        assert stats["passed"], str(bench)

    def test_stats_without_runs(self):
        """Test an unrun benchmark reports failure."""
        assert not PerformanceTest("idle").get_stats()["passed"]
