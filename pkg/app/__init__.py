"""
App module - command-line front end for the record statistics library.
"""

__all__ = ["commands", "config", "output", "records", "statistics", "verification_log", "verify"]
