"""Alexander modules of infinite cyclic covers over Q[t, t^-1]."""
__version__ = "0.1.0"
