"""Combinatorics of the filtration of global sections of homogeneous bundles
on Drinfeld's upper half space: Bott cohomology, Pieri decompositions, the
weight sets of the filtration subquotients, local cohomology characters and
finite-level building homology."""

__version__ = "0.1.0"
