"""homlab: finite-scale laboratory for morphism taxonomy, transformation-monoid
orbits, extension properties and countable graph oracles."""

__version__ = "0.1.0"
