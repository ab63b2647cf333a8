#!/usr/bin/env python3
"""Regenerates include/exactrv/reference_constants.hpp.

All distribution constants and chi-square critical values used by the
conformance harness are computed here with mpmath at 50 decimal digits,
independently of the C++ sampler implementations, and frozen into a
header. Run from the repository root:

    python3 tools/gen_reference_constants.py > include/exactrv/reference_constants.hpp
"""

import sys

from mpmath import mp, mpf, exp, sqrt, pi, erfc, quad, e, factorial, gammainc

mp.dps = 50


def chi2_critical(dof, alpha):
    """Upper-tail critical value: P[X >= c] = alpha for X ~ chi2(dof)."""

    def tail(c):
        return gammainc(mpf(dof) / 2, mpf(c) / 2, mp.inf, regularized=True) - alpha

    lo, hi = mpf(0), mpf(dof) + 16 * sqrt(2 * mpf(dof)) + 64
    for _ in range(200):
        mid = (lo + hi) / 2
        if tail(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def phi(x):
    return erfc(-mpf(x) / sqrt(2)) / 2


def fmt(name, value, comment=""):
    s = mp.nstr(mpf(value), 17, strip_zeros=False)
    c = f"  // {comment}" if comment else ""
    print(f"inline constexpr double {name} = {s};{c}")


def main():
    print("// Numeric reference table for the conformance harness.")
    print("//")
    print("// Generated by tools/gen_reference_constants.py (mpmath, 50 decimal")
    print("// digits); do not edit by hand. These values are computed independently")
    print("// of the samplers they validate.")
    print()
    print("#pragma once")
    print()
    print("namespace exactrv::ref {")
    print()

    fmt("exp_neg_half", exp(mpf(-1) / 2), "exp(-1/2)")
    fmt("exp_neg_1", exp(mpf(-1)), "exp(-1)")
    fmt("exp_neg_2", exp(mpf(-2)), "exp(-2)")
    fmt("one_minus_exp_neg_1", 1 - exp(mpf(-1)), "1 - exp(-1)")
    fmt("exp_neg_0_375", exp(mpf("-0.375")), "exp(-3/8)")
    fmt("e_minus_1", e - 1, "e - 1")
    fmt(
        "geo_mean_half_exp",
        exp(mpf(-1) / 2) / (1 - exp(mpf(-1) / 2)),
        "mean of Geometric(exp(-1/2))",
    )

    # Decreasing-run length at x = 1: mean and variance of the PMF
    # P(n) = x^n/n! - x^(n+1)/(n+1)!.
    def run_pmf(n, x):
        return mpf(x) ** n / factorial(n) - mpf(x) ** (n + 1) / factorial(n + 1)

    mean_run_1 = sum(n * run_pmf(n, 1) for n in range(200))
    m2_run_1 = sum(n * n * run_pmf(n, 1) for n in range(200))
    fmt("run_len_mean_at_1", mean_run_1, "E[run length], x = 1")
    fmt("run_len_var_at_1", m2_run_1 - mean_run_1**2, "Var[run length], x = 1")
    print()

    # Integer-Gaussian normalizer and per-outcome masses.
    z_norm = sum(exp(-mpf(k) ** 2 / 2) for k in range(80))
    fmt("gauss_int_norm", z_norm, "sum_k exp(-k^2/2)")
    for k in range(7):
        fmt(
            f"gauss_int_pmf_{k}",
            exp(-mpf(k) ** 2 / 2) / z_norm,
            f"exp(-{k}^2/2) / norm",
        )
    tail3 = sum(exp(-mpf(k) ** 2 / 2) for k in range(3, 80)) / z_norm
    fmt("gauss_int_tail_ge_3", tail3, "P[k >= 3]")
    print()

    # Half-Gaussian normalizer, k-marginal head, and the standard normal CDF.
    half_norm = sqrt(pi / 2)
    fmt("half_gauss_norm", half_norm, "integral_0^inf exp(-t^2/2) dt")
    fmt(
        "half_gauss_k0",
        quad(lambda x: exp(-(x**2) / 2), [0, 1]) / half_norm,
        "P[k = 0] for the half-Gaussian",
    )
    for label, pt in [
        ("m2", -2),
        ("m1", -1),
        ("mhalf", mpf(-1) / 2),
        ("zero", 0),
        ("phalf", mpf(1) / 2),
        ("p1", 1),
        ("p2", 2),
    ]:
        fmt(f"std_normal_cdf_{label}", phi(pt), f"Phi({mp.nstr(mpf(pt), 4)})")
    print()

    # Laplace CDF values, rate eps = 2^eps_exp, mu = 0:
    # F(t) = exp(eps*t)/2 for t < 0, 1 - exp(-eps*t)/2 otherwise.
    for eps_exp in (0, 1):
        eps = mpf(2) ** eps_exp
        for label, pt in [("m1", -1), ("zero", 0), ("p1", 1)]:
            t = mpf(pt)
            cdf = exp(eps * t) / 2 if t < 0 else 1 - exp(-eps * t) / 2
            fmt(
                f"laplace_cdf_e{eps_exp}_{label}",
                cdf,
                f"Laplace(rate 2^{eps_exp}) CDF at {pt}",
            )
    print()

    # Thinned-trial closed form at k = 1, x = 1/2:
    # P(n) = (x^n/n!) q^n - (x^(n+1)/(n+1)!) q^(n+1), q = (2k+x)/(2k+2).
    x = mpf(1) / 2
    q = (2 + x) / 4
    for n in range(3):
        p = (x**n / factorial(n)) * q**n - (x ** (n + 1) / factorial(n + 1)) * q ** (
            n + 1
        )
        fmt(f"thinned_pmf_k1_xhalf_{n}", p, f"thinned-run PMF at n = {n}")
    print()

    # Upper-tail chi-square critical values at alpha = 0.001.
    print("// Chi-square upper critical values, alpha = 0.001, by degrees of")
    print("// freedom (index 0 unused).")
    vals = ", ".join(
        "0.0" if dof == 0 else mp.nstr(chi2_critical(dof, mpf("0.001")), 10)
        for dof in range(17)
    )
    print(f"inline constexpr double chi2_crit_001[17] = {{{vals}}};")
    print()
    print("}  // namespace exactrv::ref")


if __name__ == "__main__":
    sys.stdout.reconfigure(line_buffering=True)
    main()
