"""Reporting Infrastructure"""
