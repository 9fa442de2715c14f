"""Numerical semigroup toolkit: Apéry sets, Wilf's inequality and tree enumeration."""
