"""Exact computer algebra for the reduced quantum group U_q(sl2) at an odd
primitive N-th root of unity, its function-algebra dual, the reduced quantum
plane, star structures and invariant hermitian forms."""

__version__ = "0.1.0"
