"""Symbolic cohomology of the moduli space of trigonal curves of genus 5."""

from .hg_ring import BM, COHOM, CountPoly, HGPoly, euler_specialize
from .spectral import run_pipeline

__all__ = ["BM", "COHOM", "CountPoly", "HGPoly", "euler_specialize", "run_pipeline"]
