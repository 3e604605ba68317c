"""Spectral Turan-type searches at desk scale.

Usage:
    python3 demos/03_spectral_turan_search.py

Three exhaustive experiments:
  1. clique-free maximizers across alpha, showing the Turan graph winning
     below alpha = 1 - 1/r and the split graph taking over above it;
  2. the star-forbidden family, whose optimum pins to a constant;
  3. the two-disjoint-edges family, maximized by the star.
"""

from alphaspectral import (
    canonical_form,
    complete,
    forbidden_family,
    matching,
    spectral_extremal,
    star,
    turan,
)


def clique_free_regimes():
    print("=" * 72)
    print("Triangle-free maximizers: Turan graph below alpha=1/2, star above")
    print("=" * 72)
    fam = forbidden_family([complete(3)])
    n = 7
    t_key = canonical_form(turan(n, 2))
    s_key = canonical_form(star(n - 1))
    print(f"{'alpha':>6} {'optimum':>12} {'argmax':<12} {'witness'}")
    for a in [0.0, 0.2, 0.4, 0.55, 0.7, 0.85]:
        rec = spectral_extremal(n, a, fam)
        if rec.argmax == (t_key,):
            witness = "T_{7,2}"
        elif rec.argmax == (s_key,):
            witness = "S_{7,1}"
        else:
            witness = "other"
        print(f"{a:>6} {rec.optimum:>12.8f} {','.join(rec.argmax):<12} {witness}")


def star_free_constant():
    print()
    print("Forbidding the 3-leaf star pins the optimum at 2 for every alpha:")
    fam = forbidden_family([star(3)])
    for n in (5, 7):
        vals = [spectral_extremal(n, a, fam).optimum for a in (0.0, 0.25, 0.5, 0.75)]
        print(f"  n={n}: optima {['%.9f' % v for v in vals]}")


def matching_free_star():
    print()
    print("Forbidding two disjoint edges leaves stars and the triangle;")
    print("the star wins once n exceeds 4:")
    fam = forbidden_family([matching(2)])
    for n in range(5, 9):
        rec = spectral_extremal(n, 0.5, fam)
        assert rec.argmax == (canonical_form(star(n - 1)),)
        print(f"  n={n}: optimum {rec.optimum:.6f} (= n/2), unique argmax {rec.argmax[0]}")


if __name__ == "__main__":
    clique_free_regimes()
    star_free_constant()
    matching_free_star()
