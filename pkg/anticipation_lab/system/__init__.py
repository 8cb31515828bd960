"""
Settings and logging shared by every part of the toolkit
"""
from .system import settings
from .system import initialize
