#!/usr/bin/env python3
"""Writes the synthetic unit-cell reflection map shipped in data/.

Each state is a varactor-loaded patch over ground: a series R-L-C branch in
parallel with the grounded-substrate inductance, seen from free space.
The (4.5 GHz, 27 ohm, 0.35 pF) state is pinned to RA = 0.5, RP = 64 deg.
"""

import argparse
import cmath
import math

ETA0 = 376.730313668
FREQS_GHZ = [4.0, 4.5, 5.0]
R_OHM = [1.0, 2.2, 4.7, 10.0, 15.0, 27.0, 47.0, 68.0, 100.0]
# 20 steps per decade from 0.1 pF, three significant figures
C_PF = sorted({float(f"{0.1 * 10 ** (i / 20):.3g}") for i in range(35)} | {0.35})
L_SERIES = 1.0e-9
L_GROUND = 5.0e-9
PINNED = (4.5, 27.0, 0.35, 0.5, 64.0)


def reflection(f_ghz, r_ohm, c_pf):
    w = 2.0 * math.pi * f_ghz * 1e9
    branch = r_ohm + 1j * w * L_SERIES + 1.0 / (1j * w * c_pf * 1e-12)
    ground = 1j * w * L_GROUND
    zs = branch * ground / (branch + ground)
    return (zs - ETA0) / (zs + ETA0)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", nargs="?", default="data/sample_reflection_map.csv")
    args = parser.parse_args()

    lines = ["f_ghz,r_ohm,c_pf,rho_re,rho_im"]
    for f in FREQS_GHZ:
        for r in R_OHM:
            for c in C_PF:
                rho = reflection(f, r, c)
                if (f, r, c) == PINNED[:3]:
                    rho = cmath.rect(PINNED[3], math.radians(PINNED[4]))
                lines.append(f"{f!r},{r!r},{c!r},{rho.real!r},{rho.imag!r}")
    with open(args.out, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
