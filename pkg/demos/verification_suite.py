"""
Randomized verification suites
==============================

Each suite draws seeded instances that satisfy its hypotheses, evaluates
every inequality and aggregates the margins.  The same flags always give
byte-identical reports.
"""

from numrad import run_suite

report = run_suite("all", trials=50, dim=3, seed=7)
print(f"violations={report.violations} invalid={report.invalid_instances} "
      f"min relative margin={report.min_margin:.2e} tight fraction={report.tight_fraction:.3f}")

# per-bound summary: tightness and slack differ a lot between bounds
for row in report.per_bound:
    print(f"{row['suite']:11s} {row['bound_id']:34s} n={row['count']:4d} "
          f"min={row['min_margin']:+.2e} mean={row['mean_margin']:.2e} tight={row['tight_fraction']:.2f}")

# determinism: a second run reproduces the JSON byte for byte
assert run_suite("all", trials=50, dim=3, seed=7).to_json() == report.to_json()

# the same run from the command line:
#   numrad verify --suite all --trials 50 --dim 3 --seed 7 --out report.json
