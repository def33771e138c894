"""Numerical laboratory for fractional backward stochastic control.

Layers, bottom up:

- ``special_functions``: Gamma, Wright/Mainardi density, Mittag-Leffler.
- ``frac_grid``: discrete fractional calculus on uniform grids.
- ``resolvent``: fractional resolvent operator tables for a matrix generator.
- ``noise``: reproducible finite-mode Q-Wiener increments.
- ``backward_solver``: least-squares Monte-Carlo solver for the backward
  fractional Volterra state equation.
- ``adjoint``: forward adjoint equations (Caputo-type and RL-type).
- ``smp_lab``: spike variations, moment-scaling experiments, Hamiltonian scans.
- ``lq_control``: the backward linear-quadratic problem and its closed-form
  optimal control, with brute-force optimality verification.
- ``cli`` / ``experiments``: configuration-driven experiment runner.
"""

__version__ = "0.1.0"
