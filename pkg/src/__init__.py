"""Nakayama algebras, Dyck paths and ordered trees"""

__version__ = "1.0.0"
