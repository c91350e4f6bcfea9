"""
Census of small solutions
=========================

Enumerates every solution on up to four points, counts isomorphism classes
and runs the cross-checking property suite on each class.
"""

import time

from ybx import enumerate_solutions, is_decomposable, run_property_suite
from ybx.solution import is_square_free

for n in range(1, 5):
    t0 = time.perf_counter()
    census = enumerate_solutions(n)
    dt = time.perf_counter() - t0
    decomposable = sum(is_decomposable(S) for S in census.classes)
    square_free = sum(is_square_free(S) for S in census.classes)
    ok = all(run_property_suite(S).passed for S in census.classes)
    print(f"n={n}: {census.raw_count:4d} tables, {census.iso_count:3d} classes, "
          f"{decomposable} decomposable, {square_free} square-free, "
          f"suite {'ok' if ok else 'FAILED'} ({dt:.2f}s)")
