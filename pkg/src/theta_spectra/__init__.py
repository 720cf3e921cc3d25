"""Spectra of signed complete graphs whose negative edges form a bicyclic graph."""

__version__ = "0.1.0"
