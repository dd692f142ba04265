"""Test Suite for divide-atlas"""
