"""Configuration Management"""
