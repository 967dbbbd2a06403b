"""Replayable simulation and statistical verification of lattice growth models.

Five nearest-neighbor growth models (contact process and four relatives) run
on finite windows of Z^d from a replayable event log, so that restarted and
space-time shifted copies of a process can be coupled exactly on the same
randomness.  On top of the simulator sit the growth observables (hit times,
extinction, coverage), the essential hitting time construction, and a
statistics layer fitting tail bounds and asymptotic shapes.
"""

__version__ = "0.1.0"

from . import lattice, models, engine, observables, essential, analysis  # noqa: F401
