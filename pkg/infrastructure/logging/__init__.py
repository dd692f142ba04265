"""Logging Infrastructure"""
