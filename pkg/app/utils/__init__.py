# Utility functions
from .stateio import StateFileManager, to_payload
from .output import render, emit

__all__ = ["StateFileManager", "to_payload", "render", "emit"]
