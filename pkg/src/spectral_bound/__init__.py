"""Linear-programming bounds on the order of regular graphs with bounded second eigenvalue."""

__version__ = "0.1.0"
