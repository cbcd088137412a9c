"""Floer cohomology of the Chiang Lagrangian with F2 local systems of any rank."""

__version__ = "0.1.0"
