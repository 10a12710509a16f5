"""Exact-arithmetic toolkit for six pencils of quotient K3 surfaces.

The surfaces arise from degree-6 and degree-8 pencils in P^3 divided by
finite rotation groups acting through the two rulings of a quadric.

Subpackages cover: the scalar field Q(zeta_24) and exact matrices
(algebra), finite rotation groups given as quaternion pairs (groups),
fixed lines and ruling orbits on the quadric (geometry), quotient
singularity bookkeeping (singularities), even lattices and divisibility
tests (lattices), and the verification tables plus CLI (tables, cli).
"""

__version__ = "0.1.0"
