"""Interfaces - Abstract contracts for infrastructure"""
