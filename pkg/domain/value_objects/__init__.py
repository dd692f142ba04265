"""Value Objects - Immutable objects defined by their attributes"""
