"""Cluster algebras with universal coefficients and their categorification."""
