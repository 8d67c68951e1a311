"""Numerical core: operators, Hamiltonians, dynamics, measurement and dephasing."""
