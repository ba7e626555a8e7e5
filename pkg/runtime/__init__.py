"""
Runtime package.

Task discovery, the task engine, per-run logging and the run layout that the
table, eval and verify tasks execute on.
"""
