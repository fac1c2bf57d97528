"""Census of binodal tropical cubic surfaces through points in Mikhalkin position."""

__version__ = "0.1.0"
