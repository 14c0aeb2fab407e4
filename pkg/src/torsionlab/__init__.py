"""Exact commutative-algebra laboratory for torsion functors, Koszul/Čech cohomology
and weak proregularity on explicit non-noetherian rings."""

__version__ = "0.1.0"
