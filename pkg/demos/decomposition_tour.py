"""Tour of the dyadic stopping-time decomposition and its consequences.

Decomposes a small sequence at a threshold, prints the selected blocks with
their alpha-averages, verifies the 9t covering of the maximal superlevel
set, nests two thresholds, and reports the level-set domination inequality
with its three candidate constants.
"""

from varseq.czd import (
    covering_check,
    cz_decompose,
    cz_nesting_check,
    domination_check,
    level_set_partition,
)
from varseq.exponent import ExponentFunction
from varseq.harness import XorShift64Star
from varseq.lattice import Sequence


def main():
    rng = XorShift64Star(11)
    a = Sequence(-13, [4.0 * rng.uniform() ** 2 for _ in range(40)])
    alpha, t = 0.25, 0.3

    d = cz_decompose(a, alpha, t)
    print(f"decomposition at alpha = {alpha}, t = {t} (top level N_t = {d.n_t}):")
    for iv, avg in zip(d.intervals, d.averages):
        print(f"  block [{iv.lo}, {iv.hi}]  alpha-average = {avg:.6f}"
              f"  (in (t, 2^(1-alpha) t] = ({t}, {2 ** (1 - alpha) * t:.6f}])")

    cov = covering_check(a, alpha, t)
    print(f"\ncovering of the superlevel set {{M_alpha a > 9t}}:")
    print(f"  superlevel points = {cov.superlevel_count}, uncovered by doubled blocks = {cov.uncovered_count}")
    print(f"  max average ratio = {cov.max_average_ratio:.6f}, fraction of averages <= 2t = {cov.two_t_fraction}")

    nest = cz_nesting_check(a, alpha, 5.0 * t, t)
    print(f"\nnesting t_hi = 5 t against t_lo = t:"
          f" selection covers {nest.count_hi} points inside {nest.count_lo},"
          f" containment failures = {nest.containment_failures}")

    p = ExponentFunction.constant(1.5)
    part = level_set_partition(a.scaled(0.01), alpha, 0.05)
    print(f"\nlevel-set partition at t = 0.05 (heights A^(k+1)/9, A = 9t = 0.45):")
    print(f"  levels = {part.levels}")
    print(f"  window = [{part.window.lo}, {part.window.hi}]")

    dom = domination_check(a.scaled(0.01), p, alpha, 0.05)
    print(f"\ndomination of sum M_alpha^q by the E-set weighted sum:")
    print(f"  lhs = {dom.lhs:.6f}, weighted sum = {dom.e_weighted_sum:.6f}, q in [{dom.q_minus:.3f}, {dom.q_plus:.3f}]")
    print(f"  derived constant (2^(1-alpha)/t)^q_+ = {dom.c_derived:.6g}: holds = {dom.ok_derived}")
    print(f"  corrected constant A^q_- 2^((1-alpha) q_+) = {dom.c_corrected:.6g}: holds = {dom.ok_corrected}")
    print(f"  smaller variant A^q_- 2^((alpha-1) q_+) = {dom.c_literal:.6g}: holds = {dom.ok_literal}")


if __name__ == "__main__":
    main()
