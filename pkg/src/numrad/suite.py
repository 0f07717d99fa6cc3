"""Randomized verification suites.

A suite draws ``trials`` seeded instances that satisfy the hypotheses of its
inequalities, evaluates every bound on them and aggregates the reports.
Trial ``k`` of suite ``name`` draws from ``stream_rng(seed, name, k)``, so it
does not depend on which other suites or trials run.

Aggregate margins are relative (``margin / scale``) so that instances of
different magnitude are comparable.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable

from .bounds import (
    POWER_GRID,
    BoundReport,
    PowerPair,
    check_alomari_counterexample,
    check_full_s4,
    check_lemmas,
    check_offdiag_s4,
    check_opmatrix_s3,
    check_product_buzano_s2,
    check_product_s2,
    check_wa_product,
)
from .errors import UnknownSuite
from .generators import (
    GenSpec,
    gen_blocks,
    gen_commuting_pair,
    gen_intertwined_pair,
    gen_matrix,
    stream_rng,
    unit_vector,
)
from .numrange import DEFAULT_SWEEP, ThetaSweepConfig
from .weighted import make_weight

SUITES = ("lemmas", "s2", "s3", "s4-offdiag", "s4-full")
SUITE_IDS = SUITES + ("all",)
PAIR_MODES = ("hermitian", "polar", "nonnormal")
# the two-vector mixed Schwarz bound needs a normal Y once s != 1/2
# (see mixed_schwarz_nonnormal_counterexample), so lemma pairs keep Y Hermitian
LEMMA_PAIR_MODES = ("hermitian", "polar")
FIXTURE_TRIAL = -1


def _scale(rng) -> float:
    return math.exp(rng.uniform(-1.0, 1.0))


def _power_pair(rng, k: int) -> PowerPair:
    p, alpha = POWER_GRID[k % len(POWER_GRID)]
    return PowerPair.conjugate(float(rng.uniform(0.1, 0.9)), p, alpha)


def _weight(rng, dim: int, strict: bool):
    return make_weight(gen_matrix(GenSpec(dim, ensemble="pd" if strict else "psd"), rng))


def trial_lemmas(rng, dim, k, cfg):
    spec = GenSpec(dim, scale=_scale(rng))
    X, Y = gen_intertwined_pair(spec, LEMMA_PAIR_MODES[k % 2], rng)
    x, y = unit_vector(rng, dim), unit_vector(rng, dim)
    W = _weight(rng, dim, strict=(k // 2) % 2 == 0)
    return check_lemmas(X, Y, x, y, W, _power_pair(rng, k), cfg)


def trial_s2(rng, dim, k, cfg):
    pp = _power_pair(rng, k)
    X, Y = gen_intertwined_pair(GenSpec(dim, scale=_scale(rng)), PAIR_MODES[k % 3], rng)
    reports = check_product_s2(X, Y, pp, cfg)
    X, Y = gen_commuting_pair(GenSpec(dim, scale=_scale(rng)), rng)
    return reports + check_product_buzano_s2(X, Y, pp, cfg)


def trial_s3(rng, dim, k, cfg):
    T = gen_blocks(GenSpec(dim, scale=_scale(rng)), 2 + k % 2, "full", rng)
    return check_opmatrix_s3(T, float(rng.uniform(0.1, 0.9)), cfg)


def trial_s4_offdiag(rng, dim, k, cfg):
    W = _weight(rng, dim, strict=True)
    T = gen_blocks(GenSpec(dim, scale=_scale(rng)), 2, "offdiag2", rng)
    return check_offdiag_s4(T[0, 1], T[1, 0], W, cfg, phase=float(rng.uniform(0, 2 * math.pi)))


def trial_s4_full(rng, dim, k, cfg):
    strict = k % 3 != 2
    W = _weight(rng, dim, strict)
    T = gen_blocks(GenSpec(dim, scale=_scale(rng)), 3 if k % 4 == 3 else 2, "full", rng)
    reports = check_full_s4(T, W, cfg)
    if strict:
        spec = GenSpec(dim, scale=_scale(rng))
        reports.append(check_wa_product(gen_matrix(spec, rng), gen_matrix(spec, rng), W, cfg))
    return reports


TRIALS: dict[str, Callable] = {
    "lemmas": trial_lemmas,
    "s2": trial_s2,
    "s3": trial_s3,
    "s4-offdiag": trial_s4_offdiag,
    "s4-full": trial_s4_full,
}


def fixtures(suite: str, cfg) -> list[BoundReport]:
    """Fixed instances evaluated once per run."""
    if suite == "s3":
        return [check_alomari_counterexample(cfg)]
    return []


@dataclass(frozen=True)
class Record:
    suite: str
    trial: int
    report: BoundReport


def _summary(reports: list[BoundReport]) -> dict:
    valid = [r for r in reports if r.valid]
    rel = [r.margin / r.scale for r in valid]
    return {
        "count": len(reports),
        "violations": sum(1 for r in valid if not r.holds),
        "invalid": len(reports) - len(valid),
        "min_margin": min(rel) if rel else None,
        "mean_margin": math.fsum(rel) / len(rel) if rel else None,
        "tight_fraction": sum(1 for r in valid if r.tight) / len(valid) if valid else None,
    }


@dataclass
class SuiteReport:
    """Aggregate of one suite run.

    ``violations`` counts valid reports whose inequality fails;
    ``invalid_instances`` counts reports whose hypothesis residual was too
    large.  Margins are relative to each report's scale.
    """

    suite_id: str
    trials: int
    dim: int
    seed: int
    grid_points: int
    violations: int
    invalid_instances: int
    min_margin: float | None
    mean_margin: float | None
    tight_fraction: float | None
    per_bound: list[dict]
    records: list[Record] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite_id,
            "trials": self.trials,
            "dim": self.dim,
            "seed": self.seed,
            "grid_points": self.grid_points,
            "violations": self.violations,
            "invalid": self.invalid_instances,
            "min_margin": self.min_margin,
            "mean_margin": self.mean_margin,
            "tight_fraction": self.tight_fraction,
            "per_bound": self.per_bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "trial", "bound_id", "relation", "lhs", "rhs", "margin",
                    "scale", "hypothesis_residual", "holds", "valid"])
        for rec in self.records:
            r = rec.report
            w.writerow([rec.suite, rec.trial, r.bound_id, r.relation, repr(r.lhs), repr(r.rhs),
                        repr(r.margin), repr(r.scale), repr(r.hypothesis_residual),
                        int(r.holds), int(r.valid)])
        return buf.getvalue()


def run_suite(suite_id: str, trials: int, dim: int, seed: int,
              cfg: ThetaSweepConfig | None = None,
              trial_fn: Callable[[str, int], list[BoundReport]] | None = None) -> SuiteReport:
    """Run a verification suite.

    Parameters
    ----------
    suite_id : {"lemmas", "s2", "s3", "s4-offdiag", "s4-full", "all"}
        "all" runs every suite with the same trial count.
    trials : int
        Random instances per suite, at least 1.
    dim : int
        Order of the random matrices (of each block for operator matrices),
        in ``[2, 16]``.
    seed : int
    cfg : ThetaSweepConfig, optional
    trial_fn : callable, optional
        Replaces the random draw: ``trial_fn(suite, k)`` returns the reports
        of trial ``k``.

    Raises
    ------
    UnknownSuite
    ValueError
        For out-of-range `trials` or `dim`.
    """
    if suite_id not in SUITE_IDS:
        raise UnknownSuite(suite_id)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 2 <= dim <= 16:
        raise ValueError("dim must lie in [2, 16]")
    cfg = cfg or DEFAULT_SWEEP
    suites = SUITES if suite_id == "all" else (suite_id,)
    records: list[Record] = []
    for name in suites:
        for r in fixtures(name, cfg):
            records.append(Record(name, FIXTURE_TRIAL, r))
        for k in range(trials):
            if trial_fn is not None:
                reports = trial_fn(name, k)
            else:
                reports = TRIALS[name](stream_rng(seed, name, k), dim, k, cfg)
            records.extend(Record(name, k, r) for r in reports)

    all_reports = [rec.report for rec in records]
    total = _summary(all_reports)
    by_id: dict[tuple[str, str], list[BoundReport]] = {}
    for rec in records:
        by_id.setdefault((rec.suite, rec.report.bound_id), []).append(rec.report)
    per_bound = [{"suite": s, "bound_id": b, **_summary(rs)} for (s, b), rs in by_id.items()]
    return SuiteReport(
        suite_id=suite_id,
        trials=trials,
        dim=dim,
        seed=seed,
        grid_points=cfg.grid_points,
        violations=total["violations"],
        invalid_instances=total["invalid"],
        min_margin=total["min_margin"],
        mean_margin=total["mean_margin"],
        tight_fraction=total["tight_fraction"],
        per_bound=per_bound,
        records=records,
    )
