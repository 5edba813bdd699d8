#!/usr/bin/env python3
"""The self-similar source solution makes the K=0 gradient bound sharp.

For u_t = Delta u^m on flat R^n the pressure of the Barenblatt solution is a
quadratic in r whose Laplacian is exactly -a/((m-1)t), a = n(m-1)/(n(m-1)+2).
That turns the constant-alpha gradient bound into an equality as alpha -> 1:
the deficit slack phi + alpha v_t/v - |grad v|^2/v collapses to zero.
"""

import numpy as np

from pme_estimates import (
    PMEParameters,
    barenblatt,
    barenblatt_pressure_field,
    barenblatt_support_radius,
    li_yau_deficit,
    make_profile,
)

n, m = 1, 2.0
params = PMEParameters(m=m, n=n)
print(f"flat n={n}, m={m}:  a = {params.a:.6f},  support radius at t=1: "
      f"{barenblatt_support_radius(n, m, 1.0):.4f}")
print(f"center value u(0,1) = {barenblatt(n, m, 1.0, 0.0):.6f}")

pf = barenblatt_pressure_field(n, m, r_max=2.0, nr=513, t0=1.0, t_end=2.0, nt=257)
print(f"\npressure extrema over the window: M = {pf.M:.6f}, M~ = {pf.M_tilde:.6f}")

target = params.a / ((m - 1.0) * pf.t)
measured = -(m - 1.0) * pf.lap_v
rel = np.max(np.abs(measured - target[:, None]) / target[:, None])
print(f"max relative defect of -(m-1) Delta v against a/t: {rel:.3e}")
print("(the 4th-order stencils are exact on the quadratic pressure)")

print("\ndeficit slack as the constant alpha approaches 1:")
print(f"{'alpha':>12} {'min slack':>14} {'max slack':>14}")
for da in (1.0, 1e-1, 1e-2, 1e-4, 1e-6):
    prof = make_profile("constant_alpha_davies", params, M=pf.M, K=0.0,
                        alpha_const=1.0 + da)
    slack = li_yau_deficit(pf, prof)
    print(f"{1.0 + da:>12.6f} {np.nanmin(slack):>14.3e} {np.nanmax(slack):>14.3e}")
print("\nmin slack -> 0 linearly in (alpha - 1): the bound is attained.")
