"""Voltage graphs, group-labelled graphs and the derived-graph adjunction."""

__version__ = "0.1.0"
