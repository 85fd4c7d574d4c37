"""Pivot and loop complementation on F2 matrices, graphs and set systems."""
