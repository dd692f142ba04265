"""Unit Tests"""
