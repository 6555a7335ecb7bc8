"""Bound-state spectra and wavefunctions of generalized Poschl-Teller
potentials via DVR and higher-order finite-difference eigensolvers, with
tridiagonal series reconstruction of the analytic wavefunctions."""

__version__ = "0.1.0"
