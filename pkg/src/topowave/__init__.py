"""Numerical checks for Dirac plane waves, ellipse-defect ensembles, light-cone
defects and the Riemann-Silberstein form of Maxwell's equations."""

__version__ = "0.1.0"
