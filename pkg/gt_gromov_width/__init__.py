"""Gelfand-Tsetlin polytopes of coadjoint orbits and lower bounds for their Gromov width."""

__version__ = "0.1.0"
