"""Data Transfer Objects"""
