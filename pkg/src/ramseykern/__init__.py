"""Reductions, instance embedding and host-graph search for the Ramsey(k)
composition, with exact solvers and a brute-force verification harness."""

from ._backend import BACKEND

__version__ = "0.1.0"
