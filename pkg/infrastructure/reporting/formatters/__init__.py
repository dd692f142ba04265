"""Report Formatters"""
