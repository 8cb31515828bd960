"""
Constants, shared types and helper functions

Nothing is imported here: `anticipation_lab.system` reads the constants while it is still initializing
"""
