#!/usr/bin/env python3
"""Scan the coherent-state radius estimator across q.

Confirms the continuous-family estimate tracks 1/sqrt(1-q), the lattice
family stays entire, and the q^(-n^2)-growth model (the reason no type-I
coherent states exist) stays at radius zero.
"""

import math
import sys

from qhermite import q_factorial, radius_estimate, rogers_radius


def main() -> int:
    print(f"{'q':>5} {'estimate':>18} {'expected':>18} {'lattice':>10} {'typeI-model':>12}")
    for q in (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
        est = radius_estimate([1.0 / q_factorial(n, q) for n in range(35)]).estimate
        poch, u = 1.0, []
        for n in range(35):
            val = ((1 - q) / q) ** n * q ** (n * n) / poch
            if val < 1e-290:  # keep the tail clear of underflow
                break
            u.append(val)
            poch *= 1 - q ** (n + 1)
        latt = radius_estimate(u).estimate
        zero = radius_estimate([q ** (-n * n) for n in range(35) if q ** (n * n) > 1e-290]).estimate
        print(f"{q:>5} {est:>18.12f} {rogers_radius(q):>18.12f} "
              f"{'inf' if math.isinf(latt) else latt:>10} {zero:>12}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
