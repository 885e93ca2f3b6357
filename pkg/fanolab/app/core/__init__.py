"""Exact calculation modules: lattice algebra, cones, sequences, number theory.

Submodules import the domain models, which in turn import ``exceptions`` from
here, so this package deliberately re-exports nothing.
"""
