"""Cycle extendability in chordal graphs: counterexample constructions and exact checkers."""

__version__ = "0.1.0"
