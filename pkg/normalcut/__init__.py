"""
normalcut

Normal surface theory on triangulated 3-manifolds.

Core capabilities:
- Triangulation model, skeleton, homology and the Kneser bound
- Normal coordinates, matching equations, Euler characteristic, weight
- Exact vertex and fundamental solution enumeration
- Haken's unknot decision procedure with verifiable certificates
- Wirtinger presentations and symmetric-group representation search
"""

__version__ = "0.1.0"

SCHEMA_VERSION = 1
