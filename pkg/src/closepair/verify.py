"""Randomized cross-checks of the divide-and-conquer solvers.

Runs seeded random instances through basic2 and basic7 against the
brute-force oracle, audits the per-invocation combine call bounds, and
replays two adversarial slab configurations that target the combine
probes: one where the first opposite-side candidate is (jointly) closest
in a tie it must win deterministically, and one where only the second
candidate beats the first. The report text is fully deterministic, so two
runs with the same arguments are byte-identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .geometry import Counters, Metric, scalar_distance_fn
from .instances import GenSpec, UniformUnitSquare, generate
from .solver import Algo, combine_basic2, solve

__all__ = ["VerificationReport", "run_verification", "check_combine_fixtures"]

DEFAULT_METRICS = (Metric(1.0), Metric(2.0), Metric(3.1415), Metric(math.inf))

SolveFn = Callable[..., object]


@dataclass
class VerificationReport:
    """Outcome of one verification sweep."""

    lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    repro: Optional[str] = None
    combine_invocations: int = 0
    bound_violations: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and self.bound_violations == 0

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def check_combine_fixtures() -> list[str]:
    """Run the two adversarial combine configurations; return failure texts.

    Both use the p=1 metric and a slab half-width of 1. First fixture: the
    probe of the current opposite head must win a distance tie against the
    successor probe (first strictly smaller result is kept). Second
    fixture: the successor probe, not the head, holds the closest point.
    """
    failures: list[str] = []
    dfun = scalar_distance_fn(Metric(1.0))

    # ids: 0 on the left of the dividing line at x=0; 1..3 on the right.
    # Left point sits just off the line; the two right candidates are both
    # at distance 0.51, and the head (id 1) must be reported.
    xs = [-0.01, 0.5, 0.0, 1.0]
    ys = [0.0, 0.0, 0.5, 0.5]
    d, pair = combine_basic2([0], [1, 2, 3], xs, ys, 1.0, dfun, Counters())
    if pair != (0, 1) or not math.isclose(d, 0.51, rel_tol=0, abs_tol=1e-12):
        failures.append(
            f"fixture first-candidate-tie: expected pair (0, 1) at 0.51, "
            f"got {pair} at {d!r}"
        )

    # Dividing line at x=0.05. Head candidate id 1 is at distance 0.9;
    # the successor id 2 is closer at 0.85 and the right side stays
    # delta-sparse (d1 between ids 1 and 2 is 1.55).
    xs = [0.0, 0.9, 0.1]
    ys = [0.0, 0.0, 0.75]
    d, pair = combine_basic2([0], [1, 2], xs, ys, 1.0, dfun, Counters())
    if pair != (0, 2) or not math.isclose(d, 0.85, rel_tol=0, abs_tol=1e-12):
        failures.append(
            f"fixture second-candidate-closer: expected pair (0, 2) at 0.85, "
            f"got {pair} at {d!r}"
        )
    return failures


def _repro_command(n: int, seed: int, algo: Algo, metric: Metric, cutoff: int) -> str:
    return (
        f"closepair gen --n {n} --seed {seed} --dist unit --out repro.txt && "
        f"closepair solve --in repro.txt --algo {algo.value} "
        f"--metric {metric} --cutoff {cutoff} --stats"
    )


def run_verification(
    trials: int,
    n_max: int,
    seed: int = 0,
    metrics: Sequence[Metric] = DEFAULT_METRICS,
    cutoff: int = 10,
    rel_tol: float = 1e-9,
    solve_fn: Optional[SolveFn] = None,
) -> VerificationReport:
    """Cross-check both solvers against brute force on seeded instances.

    Instance t (t = 0..trials-1) uses seed ``seed + t``; its size is drawn
    uniformly from [2, n_max] by the same seed, so every failing case is
    reproducible from the printed command alone. The same instances are
    reused for every metric.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if n_max < 2:
        raise ValueError(f"n-max must be >= 2, got {n_max}")
    if solve_fn is None:
        solve_fn = solve
    report = VerificationReport()

    fixture_failures = check_combine_fixtures()
    report.failures.extend(fixture_failures)
    report.lines.append(
        f"combine fixtures: {'ok' if not fixture_failures else 'FAIL'} (2 cases)"
    )

    for metric in metrics:
        passes = 0
        failed = 0
        for t in range(trials):
            inst_seed = seed + t
            n = random.Random(inst_seed).randint(2, n_max)
            ps = generate(GenSpec(n=n, seed=inst_seed, distribution=UniformUnitSquare()))
            expected = solve_fn(ps, metric, Algo.BRUTE, cutoff)
            trial_ok = True
            for algo, bound in ((Algo.BASIC2, 2), (Algo.BASIC7, 7)):
                audit: list[tuple[int, int]] = []
                got = solve_fn(ps, metric, algo, cutoff, combine_audit=audit)
                report.combine_invocations += len(audit)
                for slab_size, calls in audit:
                    if calls > bound * slab_size:
                        report.bound_violations += 1
                        report.failures.append(
                            f"combine bound violated: {algo.value} made {calls} "
                            f"distance calls on a {slab_size}-point slab "
                            f"(n={n}, seed={inst_seed}, metric={metric})"
                        )
                if not math.isclose(got.dist, expected.dist, rel_tol=rel_tol, abs_tol=0.0):
                    trial_ok = False
                    report.failures.append(
                        f"mismatch: {algo.value} found {got.dist!r} "
                        f"(pair {got.index_a},{got.index_b}) but brute force found "
                        f"{expected.dist!r} (pair {expected.index_a},{expected.index_b}) "
                        f"on n={n}, seed={inst_seed}, metric={metric}"
                    )
                    if report.repro is None:
                        report.repro = _repro_command(n, inst_seed, algo, metric, cutoff)
            if trial_ok:
                passes += 1
            else:
                failed += 1
        status = "PASS" if failed == 0 else "FAIL"
        report.lines.append(f"p={metric}: {status} {passes}/{trials}")

    report.lines.append(
        f"combine call bounds: {report.bound_violations} violations in "
        f"{report.combine_invocations} audited invocations"
    )
    return report
