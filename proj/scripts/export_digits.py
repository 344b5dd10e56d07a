#!/usr/bin/env python3
"""Export the scikit-learn digits dataset (1797 x 64) to a plain CSV.

The row order of the library distribution is preserved; it defines the
sliding-window ordering used by `raydrift analyze`.
"""
import sys

import numpy as np
from sklearn.datasets import load_digits

out = sys.argv[1] if len(sys.argv) > 1 else "digits.csv"
np.savetxt(out, load_digits().data, fmt="%.17g", delimiter=",")
print(f"wrote {out}")
