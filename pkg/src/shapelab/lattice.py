"""Finite-window geometry of Z^d: sites, neighbors, norms, balls, translations.

A Window is the symmetric box [-L, L]^d with absorbing-empty boundary: sites
outside exist conceptually but are frozen at the minimal state, and events
targeting them are discarded.  All values here are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

Site = tuple[int, ...]

NORM_KINDS = ("l1", "l2", "linf")


def _as_site(x) -> Site:
    if isinstance(x, (int, np.integer)):
        return (int(x),)
    return tuple(int(c) for c in x)


def neighbors(x, d: int | None = None) -> list[Site]:
    """The 2d nearest neighbors of x, ordered lexicographically by offset."""
    x = _as_site(x)
    if d is None:
        d = len(x)
    if d != len(x):
        raise ValueError(f"site {x} has dimension {len(x)}, expected {d}")
    out = []
    for off in neighbor_offsets(d):
        out.append(tuple(x[i] + off[i] for i in range(d)))
    return out


def neighbor_offsets(d: int) -> list[Site]:
    """Unit displacement vectors in lexicographic order, e.g. (-1,0),(0,-1),(0,1),(1,0)."""
    offs = []
    for i in range(d):
        for s in (-1, 1):
            v = [0] * d
            v[i] = s
            offs.append(tuple(v))
    return sorted(offs)


def norm(x, kind: str = "l1") -> float:
    x = _as_site(x)
    if kind == "l1":
        return float(sum(abs(c) for c in x))
    if kind == "l2":
        return math.sqrt(sum(c * c for c in x))
    if kind == "linf":
        return float(max(abs(c) for c in x)) if x else 0.0
    raise ValueError(f"unknown norm kind {kind!r}; expected one of {NORM_KINDS}")


class Window:
    """The box [-L, L]^d with row-major site indexing."""

    __slots__ = ("d", "L", "boundary_policy", "side", "n_sites", "_strides")

    def __init__(self, d: int, L: int, boundary_policy: str = "absorbing-empty"):
        if d < 1:
            raise ValueError("dimension must be >= 1")
        if L < 0:
            raise ValueError("window radius must be >= 0")
        if boundary_policy != "absorbing-empty":
            raise ValueError(f"unsupported boundary policy {boundary_policy!r}")
        self.d = int(d)
        self.L = int(L)
        self.boundary_policy = boundary_policy
        self.side = 2 * self.L + 1
        self.n_sites = self.side**self.d
        self._strides = tuple(self.side ** (self.d - 1 - i) for i in range(self.d))

    def __repr__(self):
        return f"Window(d={self.d}, L={self.L})"

    def __eq__(self, other):
        return (
            isinstance(other, Window)
            and self.d == other.d
            and self.L == other.L
            and self.boundary_policy == other.boundary_policy
        )

    def __hash__(self):
        return hash((self.d, self.L, self.boundary_policy))

    def contains(self, x) -> bool:
        x = _as_site(x)
        return len(x) == self.d and all(-self.L <= c <= self.L for c in x)

    def index(self, x) -> int:
        x = _as_site(x)
        if not self.contains(x):
            raise ValueError(f"site {x} outside window radius {self.L}")
        return sum((c + self.L) * s for c, s in zip(x, self._strides))

    def site(self, idx: int) -> Site:
        if not 0 <= idx < self.n_sites:
            raise IndexError(idx)
        out = []
        for s in self._strides:
            out.append(idx // s - self.L)
            idx %= s
        return tuple(out)

    def sites(self) -> Iterator[Site]:
        rng = range(-self.L, self.L + 1)
        return itertools.product(rng, repeat=self.d)

    def coords_array(self) -> np.ndarray:
        """(n_sites, d) int array of coordinates, in index order."""
        axes = np.arange(-self.L, self.L + 1)
        grids = np.meshgrid(*([axes] * self.d), indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1)

    def neighbor_table(self) -> np.ndarray:
        """(n_sites, 2d) int32 table of neighbor indices, -1 for outside."""
        coords = self.coords_array()
        offs = np.array(neighbor_offsets(self.d), dtype=np.int64)
        tbl = np.full((self.n_sites, 2 * self.d), -1, dtype=np.int32)
        for k, off in enumerate(offs):
            nb = coords + off
            inside = np.all(np.abs(nb) <= self.L, axis=1)
            flat = np.zeros(self.n_sites, dtype=np.int64)
            for i in range(self.d):
                flat += (nb[:, i] + self.L) * self._strides[i]
            tbl[inside, k] = flat[inside]
        return tbl

    def boundary_mask(self) -> np.ndarray:
        """Boolean mask of sites touching the window boundary."""
        coords = self.coords_array()
        return np.any(np.abs(coords) == self.L, axis=1)


class SiteSet:
    """A set of sites inside a Window, stored as a dense boolean mask.

    Translations that push members outside the window drop them and record
    the count in `.dropped`.
    """

    __slots__ = ("window", "mask", "dropped")

    def __init__(self, window: Window, sites: Iterable | np.ndarray = (), dropped: int = 0):
        self.window = window
        if isinstance(sites, np.ndarray) and sites.dtype == bool:
            if sites.shape != (window.n_sites,):
                raise ValueError("mask shape does not match window")
            self.mask = sites.copy()
        else:
            self.mask = np.zeros(window.n_sites, dtype=bool)
            for s in sites:
                self.mask[window.index(s)] = True
        self.dropped = int(dropped)

    @classmethod
    def from_mask(cls, window: Window, mask: np.ndarray, dropped: int = 0) -> "SiteSet":
        out = cls.__new__(cls)
        out.window = window
        out.mask = mask.astype(bool, copy=True)
        out.dropped = int(dropped)
        return out

    def __len__(self):
        return int(self.mask.sum())

    def __contains__(self, x):
        x = _as_site(x)
        return self.window.contains(x) and bool(self.mask[self.window.index(x)])

    def __iter__(self) -> Iterator[Site]:
        for idx in np.flatnonzero(self.mask):
            yield self.window.site(int(idx))

    def __eq__(self, other):
        return (
            isinstance(other, SiteSet)
            and self.window == other.window
            and bool(np.array_equal(self.mask, other.mask))
        )

    def __repr__(self):
        n = len(self)
        shown = ", ".join(map(str, itertools.islice(iter(self), 6)))
        more = ", ..." if n > 6 else ""
        return f"SiteSet({n} sites: {{{shown}{more}}})"

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def coords(self) -> np.ndarray:
        return self.window.coords_array()[self.mask]

    def _check(self, other: "SiteSet"):
        if self.window != other.window:
            raise ValueError("site sets live on different windows")

    def union(self, other: "SiteSet") -> "SiteSet":
        self._check(other)
        return SiteSet.from_mask(self.window, self.mask | other.mask)

    def intersection(self, other: "SiteSet") -> "SiteSet":
        self._check(other)
        return SiteSet.from_mask(self.window, self.mask & other.mask)

    def issubset(self, other: "SiteSet") -> bool:
        self._check(other)
        return bool(np.all(~self.mask | other.mask))


def ball_coords(r: float, kind: str = "l1", d: int = 1) -> list[Site]:
    """All lattice sites with norm <= r, as sorted coordinate tuples."""
    if r < 0:
        raise ValueError("ball radius must be >= 0")
    R = int(math.floor(r))
    rng = range(-R, R + 1)
    return [x for x in itertools.product(rng, repeat=d) if norm(x, kind) <= r]


def ball(r: float, kind: str = "l1", d: int = 1, window: Window | None = None) -> SiteSet:
    """Sites with norm <= r as a SiteSet (on a minimal window by default)."""
    if window is None:
        window = Window(d, int(math.floor(max(r, 0))))
    return SiteSet(window, ball_coords(r, kind, d))


def translate(obj, v):
    """Shift a Site or SiteSet by vector v; window leavers are dropped and counted."""
    v = _as_site(v)
    if isinstance(obj, SiteSet):
        w = obj.window
        coords = obj.coords() + np.asarray(v, dtype=np.int64)
        inside = np.all(np.abs(coords) <= w.L, axis=1)
        out = SiteSet(w, (tuple(c) for c in coords[inside]))
        out.dropped = int((~inside).sum())
        return out
    x = _as_site(obj)
    if len(x) != len(v):
        raise ValueError("dimension mismatch")
    return tuple(a + b for a, b in zip(x, v))
