"""
Unknot Recognition

Decides whether a triangulated knot complement is a solid torus by searching
the fundamental normal surfaces for an essential disk.
"""
