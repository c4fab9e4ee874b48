"""
Certificate Guards

Independent re-verification of every certificate before it is reported.
A certificate that fails its check is never emitted.
"""
