#!/usr/bin/env python3
"""Harnack factors three ways: closed form, quadrature, and measured ratios.

Each gradient bound integrates along space-time curves into a bound on
v(x1,t1)/v(x2,t2). The closed forms are checked against adaptive quadrature of
the same integrals, then against ratios measured on a solved field.
"""

import math

import numpy as np

from pme_estimates import (
    COROLLARIES,
    ManifoldModel,
    PMEParameters,
    a1_a2,
    check_harnack,
    harnack_closed_form,
    harnack_exponent_closed_form,
    harnack_exponent_proof_form,
    pressure_field,
    solve_radial,
)

p22 = PMEParameters(m=2.0, n=2)

print("=" * 72)
print("WORKED VALUES, a = 1/2, (m-1)MK = 1, rho = 0, t1 = 1, t2 = 2")
print("=" * 72)
print(f"cor12 (alpha=2) factor : "
      f"{harnack_closed_form('cor12', p22, 1, 1, 1, 0, 1, 2, alpha_const=2.0):.7f}"
      f"   (= 2 e^0.5 = {2 * math.exp(0.5):.7f})")
print(f"cor14 exponent         : "
      f"{harnack_exponent_closed_form('cor14', p22, 1, 1, 1, 0, 1, 2):.7f}"
      f"   (= (e^4 - e^2)/4)")
A1, A2 = a1_a2(p22, 1.0, 1.0, 1.0, 2.0)
print(f"cor16 factors          : A1 = {A1:.7f}, A2 = {A2:.7f}")
print(f"cor18 factor           : "
      f"{harnack_closed_form('cor18', p22, 1, 1, 1, 0, 1, 2):.7f}")

print("\n" + "=" * 72)
print("CLOSED FORM vs QUADRATURE over random parameters")
print("=" * 72)
rng = np.random.default_rng(1)
worst = {c: 0.0 for c in COROLLARIES}
for _ in range(200):
    params = PMEParameters(m=1.2 + 0.8 * rng.random(), n=int(rng.integers(1, 4)))
    M = 0.3 + 1.2 * rng.random()
    Mt = M * (0.2 + 0.7 * rng.random())
    K = 0.8 * rng.random()
    t1 = 0.2 + 0.8 * rng.random()
    t2 = t1 + 0.3 + 0.7 * rng.random()
    rho = 1.5 * rng.random()
    for c in COROLLARIES:
        cf = harnack_exponent_closed_form(c, params, M, Mt, K, rho, t1, t2,
                                          alpha_const=2.0)
        qf = harnack_exponent_proof_form(c, params, M, Mt, K, rho, t1, t2,
                                         alpha_const=2.0)
        worst[c] = max(worst[c], abs(cf - qf))
for c, gap in worst.items():
    print(f"  {c}: max |log factor difference| over 200 draws = {gap:.2e}")

print("\n" + "=" * 72)
print("MEASURED RATIOS on a solved hyperbolic field")
print("=" * 72)
model = ManifoldModel("hyperbolic", 2, 1.0)
sol = solve_radial(model, p22, lambda r: 1.0 + np.exp(-(r**2)),
                   r_max=4.0, nr=81, t0=0.25, t_end=0.75, nt=33)
pf = pressure_field(sol)
print(f"{'family':>7} {'pair':>26} {'measured':>10} {'bound':>12} {'log slack':>10}")
for corollary in COROLLARIES:
    for p1, p2 in [((0.0, 0.4), (0.5, 0.6)), ((0.5, 0.3), (1.5, 0.7))]:
        rep = check_harnack(pf, corollary, p1, p2, alpha_const=2.0,
                            tolerance=1e-3)
        pair = f"{p1}->{p2}"
        print(f"{corollary:>7} {pair:>26} {rep.measured_ratio:>10.4f} "
              f"{rep.closed_form_factor:>12.4f} {rep.slack:>10.4f}"
              + ("" if rep.passed else "  VIOLATED"))
print("\nAll measured ratios sit below their factors (positive log slack).")
