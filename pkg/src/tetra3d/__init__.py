"""Exact verification toolkit for the 3d R matrix, its boundary-vector reductions
to Yang-Baxter solutions, and the q-oscillator representations they intertwine."""

__version__ = "0.1.0"
