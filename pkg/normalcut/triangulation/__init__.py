"""
Triangulations

Combinatorial model of triangulated compact 3-manifolds, possibly with boundary.

Provides:
- Parsing and validation of triangulation documents
- Identification classes of vertices, edges and faces
- The induced triangulation of the boundary surface
- First homology and the Kneser bound
"""
