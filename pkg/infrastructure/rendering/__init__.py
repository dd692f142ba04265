"""Rendering Infrastructure"""
