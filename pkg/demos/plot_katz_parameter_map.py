"""
The Katz parameter plane
========================

Classify a grid of (alpha, beta) for a fixed support size and draw the
regions as text: ``B`` binomial limit, ``.`` point mass at 0, ``=`` the
alpha = beta diagonal, ``?`` undetermined boundary. Beyond alpha = 1 the
picture depends on S.
"""

import tempfile
from fractions import Fraction
from pathlib import Path

from partsum.katz import KatzParams, Kind, classify
from partsum.scan import ScanConfig, parse_range, read_scan, scan

SYMBOL = {Kind.BINOMIAL: "B", Kind.DETERMINISTIC: ".", Kind.BOUNDARY: "?"}

for S in (4, 10):
    print(f"S = {S}   (alpha from 0 to 2.6 left to right, beta from 0.9 down to -1)")
    for j in range(19, -1, -1):
        beta = Fraction(j, 10) - 1
        row = ""
        for i in range(27):
            alpha = Fraction(i, 10)
            c = classify(KatzParams(alpha, beta), S)
            row += "=" if c.note else SYMBOL[c.kind]
        print(f"{float(beta):5.1f} {row}")
    print()

# the same data as CSV
out = Path(tempfile.mkdtemp()) / "katz_S10.csv"
n = scan(ScanConfig(parse_range("0:2.7:0.1"), parse_range("-1:0.9:0.1"), 10), out)
print(f"wrote {n} rows to {out}")
print(out.read_text().splitlines()[:4])
print(sum(c.kind is Kind.BINOMIAL for _, _, c in read_scan(out)), "binomial points")
