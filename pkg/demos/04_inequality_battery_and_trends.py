"""Inequality battery and asymptotic-trend diagnostics.

Usage:
    python3 demos/04_inequality_battery_and_trends.py

Runs the verification battery over all classes up to order 6, prints the
per-check aggregate, then shows the two observational diagnostics: the
scaled-optimum ratio table and the finite-n stability conditions.
"""

from alphaspectral import (
    complete,
    forbidden_family,
    pi_sequence,
    run_battery,
    stability_condition_check,
)


def battery():
    report = run_battery(6, [0.0, 0.2, 0.4, 0.6], [2, 3])
    print(report.to_table())


def ratio_trends():
    fam = forbidden_family([complete(3)])
    print("Scaled optima for the triangle-free family at alpha=0.25:")
    diag = pi_sequence(fam, 0.25, 4, 8)
    print(diag.to_csv())
    print(f"ratio optimum/(n-1) non-increasing: {diag.ratio_nonincreasing}")


def stability_conditions():
    fam = forbidden_family([complete(3)])
    print()
    print("Finite-n stability conditions (observational, sigma=0.5, eps=0.1):")
    rows = stability_condition_check(fam, 0.5, 5, 8, alpha=0.2, epsilon=0.1)
    print(f"{'n':>3} {'ex(n)':>6} {'growth lhs':>11} {'ok':>4} {'restricted lam':>15} {'lam lhs':>9} {'ok':>4} {'step ok':>8}")
    for r in rows:
        lam = "-" if r.lambda_min_degree is None else f"{r.lambda_min_degree:.6f}"
        lam_lhs = "-" if r.cond_lambda_lhs is None else f"{r.cond_lambda_lhs:.4f}"
        lam_ok = "-" if r.cond_lambda_ok is None else str(r.cond_lambda_ok)
        step = "-" if r.stepwise_ok is None else str(r.stepwise_ok)
        print(
            f"{r.n:>3} {r.turan_n:>6} {r.cond_growth_lhs:>11.4f} {str(r.cond_growth_ok):>4} "
            f"{lam:>15} {lam_lhs:>9} {lam_ok:>4} {step:>8}"
        )
    print()
    print("rows are findings, not assertions: the statements they probe are")
    print("guaranteed only for sufficiently large order.")


if __name__ == "__main__":
    battery()
    ratio_trends()
    stability_conditions()
