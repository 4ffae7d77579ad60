"""Inductive construction of 2-factors in the odd cube's middle layer.

The construction keeps, per level n, families of disjoint dangling
oriented paths in the upper layers of the 2n-cube: family k lives in the
layer (k, k+1) and every path starts and ends at weight k.  One step
builds the 2-factor of the middle layer of the (2n+1)-cube out of the
middle family and a level-n alpha vector, then splits it back into the
families of the next level.

Vertices are ints (see bitcube), paths are tuples of vertex ints, and a
family is a tuple of paths sorted by first vertex.  Each cycle of the
2-factor alternates between whole stored paths suffixed with 0 and
reversed f_alpha images suffixed with 1; assembly therefore reduces to a
permutation on the middle family and concatenation of its blocks, and the
cycle lengths to the orbit sizes of that permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import lattice
from .bitcube import AlphaVector, ParameterSequence, f_alpha


class ConstructionError(Exception):
    """An internal invariant of the construction was violated."""


@dataclass(frozen=True)
class ConstructionState:
    """Path families of one level for one alpha prefix.

    families maps k to the family in layer (k, k+1) of the 2n-cube, for
    k = n .. min(2n-1, k_cap); a k_cap prunes layers that a build toward
    a fixed target level never reads again.
    """

    n: int
    families: dict[int, tuple[tuple[int, ...], ...]]
    alpha_prefix: ParameterSequence
    k_cap: int | None = None


@dataclass(frozen=True)
class TwoFactor:
    """Disjoint cycles covering both middle levels of the (2n+1)-cube.

    Cycles are stored canonically: smallest vertex first, second vertex
    the smaller of its two neighbors, cycles sorted by first vertex.
    """

    n: int
    alphas: ParameterSequence
    cycles: tuple[tuple[int, ...], ...] = field(repr=False)


def base_state(k_cap: int | None = None) -> ConstructionState:
    """Level 1: the single oriented path 10 -> 11 -> 01 in the 2-cube."""
    return ConstructionState(1, {1: ((0b01, 0b11, 0b10),)}, (), k_cap)


@lru_cache(maxsize=4096)
def _alpha_tables(n: int, alpha: AlphaVector) -> tuple[dict[int, int], dict[int, int]]:
    """Per (n, alpha): f_alpha on the possible first vertices and the
    inverse of f_alpha on the possible last vertices of middle families."""
    fb = {x: f_alpha(alpha, x) for x in lattice.dyck_bitstrings(2 * n)}
    rev = alpha[::-1]
    lb = {x: f_alpha(rev, x) for x in lattice.dminus_bitstrings(2 * n)}
    return fb, lb


def _successors(
    state: ConstructionState, alpha: AlphaVector
) -> tuple[list[int], list[int]]:
    """For each path index i of the middle family: phat[i], the path whose
    image block follows path i on its cycle, and succ[i], the path after
    that.  Raises if an f_alpha image endpoint leaves the first/last sets.
    """
    n = state.n
    if len(alpha) != n - 1:
        raise ConstructionError(
            f"alpha has length {len(alpha)}, expected {n - 1}"
        )
    fam = state.families.get(n)
    if fam is None:
        raise ConstructionError(f"state has no middle family at level {n}")
    fmap = {p[0]: i for i, p in enumerate(fam)}
    lmap = {p[-1]: i for i, p in enumerate(fam)}
    fb, lb = _alpha_tables(n, alpha)
    phat: list[int] = []
    succ: list[int] = []
    try:
        for p in fam:
            j = lmap[lb[p[-1]]]
            phat.append(j)
            succ.append(fmap[fb[fam[j][0]]])
    except KeyError as exc:  # pragma: no cover - guards a construction bug
        raise ConstructionError(
            f"f_alpha image {exc.args[0]} is not a family endpoint"
        ) from exc
    return succ, phat


def canonical_cycle(verts: list[int]) -> tuple[int, ...]:
    """Rotate to the minimal vertex and orient toward its smaller neighbor."""
    i = verts.index(min(verts))
    r = verts[i:] + verts[:i]
    if len(r) > 2 and r[-1] < r[1]:
        r = [r[0]] + r[:0:-1]
    return tuple(r)


def assemble_two_factor(state: ConstructionState, alpha: AlphaVector) -> TwoFactor:
    """Glue the middle family, its f_alpha image, and the endpoint matching
    into the 2-factor of the middle layer of the (2n+1)-cube."""
    n = state.n
    fam = state.families[n]
    succ, phat = _successors(state, alpha)
    top = 1 << (2 * n)
    visited = [False] * len(fam)
    cycles = []
    for start in range(len(fam)):
        if visited[start]:
            continue
        verts: list[int] = []
        j = start
        while not visited[j]:
            visited[j] = True
            verts.extend(fam[j])  # P with suffix 0
            verts.extend(
                f_alpha(alpha, v) | top for v in reversed(fam[phat[j]])
            )  # f_alpha(P-hat) with suffix 1, traversed backwards
            j = succ[j]
        if j != start:
            raise ConstructionError("cycle walk did not close")
        cycles.append(canonical_cycle(verts))
    cycles.sort(key=lambda c: c[0])
    return TwoFactor(n, state.alpha_prefix + (alpha,), tuple(cycles))


def cycle_spectrum(state: ConstructionState, alpha: AlphaVector) -> dict[int, int]:
    """Cycle-length multiset of the 2-factor, without materializing it.

    Each orbit of the path permutation contributes one cycle of length
    (4n+2) times the orbit size.
    """
    succ, _ = _successors(state, alpha)
    unit = 4 * state.n + 2
    spectrum: dict[int, int] = {}
    visited = [False] * len(succ)
    for start in range(len(succ)):
        if visited[start]:
            continue
        size = 0
        j = start
        while not visited[j]:
            visited[j] = True
            size += 1
            j = succ[j]
        length = unit * size
        spectrum[length] = spectrum.get(length, 0) + 1
    return spectrum


def _advance(state: ConstructionState, alpha: AlphaVector) -> ConstructionState:
    """Build the level n+1 families from the level n state and alpha."""
    n = state.n
    fam = state.families[n]
    succ, phat = _successors(state, alpha)
    m = 2 * n
    s10 = 1 << m
    s01 = 1 << (m + 1)
    s11 = 3 << m

    # Each deleted first edge of the 2-factor leaves an arc from the old
    # second vertex to the next first vertex; prepend the matching edge
    # into the 00-copy and push the arc into the 1-copies.
    new_paths = []
    for i, p in enumerate(fam):
        arc = (
            (p[1],)
            + tuple(v | s01 for v in p[1:])
            + tuple(f_alpha(alpha, v) | s11 for v in reversed(fam[phat[i]]))
            + (fam[succ[i]][0] | s01,)
        )
        new_paths.append(arc)

    get = lambda k: state.families.get(k, ())
    kmax = 2 * n + 1
    if state.k_cap is not None:
        kmax = min(kmax, state.k_cap)
    families: dict[int, tuple[tuple[int, ...], ...]] = {}
    for k in range(n + 1, kmax + 1):
        if k == n + 1:
            parts = (
                list(get(n + 1))
                + [tuple(v | s10 for v in p) for p in get(n)]
                + new_paths
            )
        else:
            parts = (
                list(get(k))
                + [tuple(v | s10 for v in p) for p in get(k - 1)]
                + [tuple(v | s01 for v in p) for p in get(k - 1)]
                + [tuple(v | s11 for v in p) for p in get(k - 2)]
            )
        parts.sort(key=lambda p: p[0])
        families[k] = tuple(parts)
    return ConstructionState(
        n + 1, families, state.alpha_prefix + (alpha,), state.k_cap
    )


def split_state(
    state: ConstructionState, tf: TwoFactor, alpha: AlphaVector
) -> ConstructionState:
    """Split the 2-factor assembled from (state, alpha) into the next level."""
    if tf.n != state.n or tf.alphas != state.alpha_prefix + (alpha,):
        raise ConstructionError("two-factor does not match (state, alpha)")
    return _advance(state, alpha)


def state_for_prefix(
    prefix: ParameterSequence, k_cap: int | None = None
) -> ConstructionState:
    """State at level len(prefix)+1 for the given alpha prefix."""
    state = base_state(k_cap)
    for alpha in prefix:
        state = _advance(state, alpha)
    return state


def build(seq: ParameterSequence, k_cap: int | None = None) -> TwoFactor:
    """The 2-factor of the middle layer of the (2n+1)-cube, n = len(seq)."""
    n = len(seq)
    if n < 1:
        raise ValueError("need at least one alpha vector")
    for i, a in enumerate(seq, start=1):
        if len(a) != i - 1:
            raise ValueError(f"alpha vector {i} has length {len(a)}, expected {i - 1}")
    cap = n if k_cap is None else k_cap
    if cap < n:
        raise ValueError("k_cap below the target level")
    state = state_for_prefix(seq[:-1], cap)
    return assemble_two_factor(state, seq[-1])


def fsl_sets(state: ConstructionState, k: int) -> tuple[set[int], set[int], set[int]]:
    """First, second and last vertex sets of family k."""
    fam = state.families[k]
    return (
        {p[0] for p in fam},
        {p[1] for p in fam},
        {p[-1] for p in fam},
    )
