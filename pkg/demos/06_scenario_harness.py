#!/usr/bin/env python3
"""Drive the whole pipeline through the scenario harness: load a JSON
scenario, run solve -> pressure -> checks, and emit JSON/CSV reports.

The same scenarios run from the command line:
    pmecheck verify demos/scenarios/hyperbolic_suite.json --report out.json
"""

import json
from pathlib import Path

from pme_estimates import emit_report, load_scenario, run_scenario

HERE = Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

for name in ("formula_only", "constant_data", "barenblatt_sharpness",
             "hyperbolic_suite"):
    path = HERE / "scenarios" / f"{name}.json"
    scenario = load_scenario(path)
    report = run_scenario(scenario)
    print("=" * 72)
    print(f"scenario: {path.name}   ->   {report.status}")
    print("=" * 72)
    for rec in report.checks:
        loc = "" if rec.r is None else f"  at (r={rec.r:.3g}, t={rec.t:.3g})"
        print(f"  {rec.status:<12} {rec.check_id:<52} "
              f"slack={rec.worst_slack:+.4g}{loc}")
    if report.diagnostics:
        print(f"  solver: {report.diagnostics}")
    emit_report(report, "json", OUT / f"{name}.json")
    emit_report(report, "csv", OUT / f"{name}.csv")

print(f"\nreports written under {OUT}/ "
      f"({len(list(OUT.glob('*.csv')))} csv, {len(list(OUT.glob('*.json')))} json; "
      "bound checks also get per-node r,t,lhs,rhs,slack plot files)")
sample = json.loads((OUT / "formula_only.json").read_text())
print(f"sample json keys: {sorted(sample)}")
