"""
Enumeration

Exact solution sets of the matching equations.

Provides:
- Vertex solutions by the double description method
- Fundamental solutions inside the bounded search box
- Admissible fundamentals and normal 2-spheres
"""
