"""Rendering helpers shared by the CLI and the tools"""
