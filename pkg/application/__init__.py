"""Application Layer - Use cases and interfaces"""
