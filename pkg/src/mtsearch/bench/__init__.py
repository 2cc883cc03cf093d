"""Benchmark harness, experiment configs and the command-line tool."""
