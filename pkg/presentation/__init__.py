"""CLI Presentation Layer"""
