"""Domain layer (immutable value objects).

Framework-agnostic representations of lattice objects and classification
reports. The CLI maps them to Pydantic report models at the boundary.
"""
