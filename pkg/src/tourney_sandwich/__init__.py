"""Sandwich certificates for tournament anti-Sidorenko oriented forests."""

__version__ = "0.1.0"
