"""Exact intersection numbers, heights and bounds for tautological bundles on powers of a curve."""
