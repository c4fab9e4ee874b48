"""
Provenance

Checksums tie certificates to the exact triangulation they were found on.
Decision steps are recorded in a hash-chained trail.
"""
