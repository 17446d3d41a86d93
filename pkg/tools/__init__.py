"""Operator scripts for benchmarking verification runs."""
