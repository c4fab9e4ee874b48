"""
Normal Surfaces

Normal coordinates on a triangulation: seven disc types per tetrahedron.

Provides:
- Matching equations and the quadrilateral condition
- Weight, Euler characteristic and Haken sums
- Reconstruction of the embedded surface from its coordinates
"""
