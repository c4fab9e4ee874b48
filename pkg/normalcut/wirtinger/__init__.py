"""
Wirtinger Certificates

Knot diagrams in planar-diagram notation, their Wirtinger presentations, and
the search for a symmetric-group representation with non-cyclic image, which
certifies that a knot is non-trivial.
"""
