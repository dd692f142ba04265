"""
Domain Layer
Value objects, domain services and exceptions of the Berge knot atlas
"""
