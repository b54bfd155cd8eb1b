"""Validated Chebyshev expansion enclosures"""
