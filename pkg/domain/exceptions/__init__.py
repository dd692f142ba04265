"""Domain Exceptions"""
