"""Partition bijections, truncated q-series and congruence checks."""
