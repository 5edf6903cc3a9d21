"""Exhaustive enumeration, counting, and orbit reduction at desk scale.

Enumeration strategy by dimension:

* n <= 2: brute force over all (2**n)**(2**n) outmap functions, filtered.
* n == 3 USOs: backtracking over the 12 edge orientations with unique-sink
  pruning on every completed 2-face, then a global sink check at the leaves.
* n >= 3 odd USOs: compose every ordered pair of (n-1)-dimensional odd USOs
  into opposite facets.  The connecting-edge pattern is forced up to a
  global flip because every spanning 2-face of an odd USO must be a bow, so
  each ordered pair contributes 0 or 2 candidates (see connect_facets); a
  candidate survives iff every face spanning the new coordinate has a
  unique sink (the two facet sinks' connecting edges agree) and the
  cross-facet odd pair condition holds.  That structured filter is
  equivalent to running the generic odd test on the composed outmap and is
  asserted equivalent in the test suite.

Counting uses the same composition idea without materializing outmaps:
USO counts sum 2**(components of the sink-agreement graph) over ordered
facet pairs, and the dimension-5 odd count vectorizes the pair filter with
numpy.  All streams and tables are deterministic: facet pairs are visited
in enumeration order and workers only ever shard contiguous index ranges
that are recombined in order, so results are identical for any job count.

Orbits are taken under the vertex relabelings V -> sigma(V) XOR R (the
2**n * n! cube symmetries); the canonical form of an outmap is the
lexicographically smallest .uso body over the orbit.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .classes import dual, is_odd
from .cube import FaceSpec, Outmap, faces_iter, full_mask, value_line
from .errors import ResourceLimitError
from .recognition import is_puso, is_uso_fast


# ---------------------------------------------------------------------------
# exhaustive generators


def enumerate_outmap_functions(n: int) -> Iterator[Outmap]:
    """Every function from vertices to coordinate sets, lexicographic order (n <= 2)."""
    if n > 2:
        raise ResourceLimitError("the full function space is only enumerable for n <= 2")
    size = 1 << n
    for combo in itertools.product(range(1 << n), repeat=size):
        yield Outmap(n, combo)


def _edge_list(n: int) -> list[tuple[int, int]]:
    """Edges as (lower vertex, coordinate position), vertex-major order."""
    return [(v, pos) for v in range(1 << n) for pos in range(n) if not v >> pos & 1]


def enumerate_orientations(n: int) -> Iterator[Outmap]:
    """Every consistent orientation of the n-cube, one per edge-direction word (n <= 3)."""
    if n > 3:
        raise ResourceLimitError("orientation space is only enumerable for n <= 3")
    edges = _edge_list(n)
    size = 1 << n
    for word in range(1 << len(edges)):
        values = [0] * size
        for idx, (v, pos) in enumerate(edges):
            if word >> idx & 1:
                values[v] |= 1 << pos
            else:
                values[v | 1 << pos] |= 1 << pos
        yield Outmap(n, tuple(values))


def _usos_by_backtracking_3() -> Iterator[Outmap]:
    """Backtracking over the 12 edge orientations of the 3-cube.

    Edges are assigned in vertex-major order; whenever the last edge of a
    2-face is placed the face must have exactly one sink, and a leaf
    survives iff the whole cube also has exactly one sink (all proper
    faces being vertices, edges, or already-checked 2-faces).
    """
    edges = _edge_list(3)
    edge_index = {e: i for i, e in enumerate(edges)}
    completions: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in edges]
    for face in faces_iter(3, min_dim=2):
        if face.dim != 2:
            continue
        verts = tuple(face.vertices())
        members = []
        for v in verts:
            for pos in range(3):
                if face.carrier >> pos & 1 and not v >> pos & 1:
                    members.append(edge_index[(v, pos)])
        completions[max(members)].append((face.carrier, verts))

    values = [0] * 8
    out: list[Outmap] = []

    def descend(depth: int) -> None:
        if depth == len(edges):
            if sum(1 for v in range(8) if not values[v]) == 1:
                out.append(Outmap(3, tuple(values)))
            return
        v, pos = edges[depth]
        bit = 1 << pos
        for owner in (v, v | bit):
            values[owner] |= bit
            good = True
            for carrier, verts in completions[depth]:
                if sum(1 for w in verts if not values[w] & carrier) != 1:
                    good = False
                    break
            if good:
                descend(depth + 1)
            values[owner] &= ~bit
        return

    descend(0)
    yield from out


def enumerate_usos(n: int) -> Iterator[Outmap]:
    """All USOs of the n-cube in a fixed documented order (n <= 3)."""
    if n > 3:
        raise ResourceLimitError("exhaustive USO enumeration is capped at n = 3")
    if n <= 2:
        for phi in enumerate_outmap_functions(n):
            if is_uso_fast(phi):
                yield phi
        return
    yield from _usos_by_backtracking_3()


def enumerate_pusos(n: int) -> Iterator[Outmap]:
    """All PUSOs of the n-cube by filtering orientations (n <= 3)."""
    if n > 3:
        raise ResourceLimitError("exhaustive PUSO enumeration is capped at n = 3")
    for phi in enumerate_orientations(n):
        if is_puso(phi):
            yield phi


# ---------------------------------------------------------------------------
# facet composition


def connect_facets(lower: Outmap, upper: Outmap, seed: int) -> Outmap | None:
    """Glue two (n-1)-dimensional odd USOs into opposite facets of an n-cube.

    seed fixes the connecting edge at facet vertex 0 (1 = points toward the
    upper facet); the remaining connecting edges are forced by requiring
    every 2-face spanning the new coordinate to be a bow, and propagate by
    breadth-first traversal that visits every facet vertex exactly once.
    Returns the composed outmap, or None when some propagated edge
    disagrees with an already-fixed one.  The result is a candidate only;
    callers still filter (each ordered pair yields at most two odd USOs).
    """
    if lower.n != upper.n:
        raise ValueError("facets must have equal dimension")
    if seed not in (0, 1):
        raise ValueError("seed must be 0 or 1")
    m = lower.n
    size = 1 << m
    psi0 = lower.values
    psi1 = upper.values
    pattern: list[int | None] = [None] * size
    pattern[0] = seed
    queue = [0]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for pos in range(m):
            w = v ^ (1 << pos)
            # bow rule: parallel facet edges force antiparallel connecting
            # edges and vice versa
            forced = pattern[v] ^ (((psi0[v] ^ psi1[v]) >> pos) & 1) ^ 1
            if pattern[w] is None:
                pattern[w] = forced
                queue.append(w)
            elif pattern[w] != forced:
                return None
    bits = 0
    for v in range(size):
        bits |= pattern[v] << v
    return Outmap(m + 1, tuple(_compose_build(psi0, psi1, m, bits)))


def _compose_build(psi0, psi1, m: int, pattern: int) -> list[int]:
    """Assemble the composed value list from facet values and a connecting pattern."""
    top = 1 << m
    values = [psi0[v] | top if pattern >> v & 1 else psi0[v] for v in range(top)]
    values += [psi1[v] if pattern >> v & 1 else psi1[v] | top for v in range(top)]
    return values


@lru_cache(maxsize=None)
def _proper_faces(m: int) -> tuple[tuple[int, int], ...]:
    """(lower, carrier) of every facet-cube face with dim >= 1, faces_iter order."""
    return tuple((f.lower, f.carrier) for f in faces_iter(m, min_dim=1))


@lru_cache(maxsize=None)
def _odd_distance_pairs(m: int) -> tuple[tuple[int, int, int], ...]:
    """Ordered vertex pairs (u, v, u XOR v) of the facet cube at odd Hamming distance."""
    size = 1 << m
    return tuple(
        (u, v, u ^ v) for u in range(size) for v in range(size) if (u ^ v).bit_count() & 1
    )


def _sink_rows(values_list: Iterable[tuple[int, ...]], m: int) -> np.ndarray:
    """Sink vertex of every face (dim >= 1, faces_iter order) for each USO given."""
    vals = np.asarray(list(values_list), dtype=np.uint32)
    faces = _proper_faces(m)
    rows = np.empty((vals.shape[0], len(faces)), dtype=np.uint8)
    for f, (lower, carrier) in enumerate(faces):
        verts = np.fromiter(FaceSpec(lower, lower | carrier).vertices(), dtype=np.int64)
        block = vals[:, verts] & carrier
        rows[:, f] = verts[(block == 0).argmax(axis=1)]
    return rows


def _compose_valid_pattern(psi0, psi1, m, row0, row1, odd_pairs) -> int | None:
    """Seed-0 connecting pattern if composing two odd USOs yields an odd USO.

    The pattern is propagated along a spanning tree by the bow rule; the
    composition is an odd USO iff every facet face's two sinks agree on
    their connecting edges (unique sink in every spanning face) and no
    cross-facet pair at odd distance both satisfies the inclusion
    condition and agrees (odd pair condition).  Both candidates of a pair
    stand or fall together, so a non-None return stands for two results.
    """
    g = 0
    for v in range(1, 1 << m):
        bit = v & -v
        parent = v ^ bit
        pos = bit.bit_length() - 1
        h = (((psi0[parent] ^ psi1[parent]) >> pos) & 1) ^ 1
        g |= (((g >> parent) & 1) ^ h) << v
    for s0, s1 in zip(row0, row1):
        if ((g >> s0) ^ (g >> s1)) & 1:
            return None
    for u, v, duv in odd_pairs:
        if not duv & ~(psi0[u] ^ psi1[v]) and not ((g >> u) ^ (g >> v)) & 1:
            return None
    return g


@lru_cache(maxsize=None)
def _uso_values(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(phi.values for phi in enumerate_usos(m))


@lru_cache(maxsize=None)
def _odd_values(m: int) -> tuple[tuple[int, ...], ...]:
    if m > 4:
        raise ResourceLimitError("odd USO lists are materialized up to n = 4 only")
    if m <= 2:
        return tuple(phi.values for phi in enumerate_usos(m) if is_odd(phi)[0])
    prev = _odd_values(m - 1)
    rows = _sink_rows(prev, m - 1).tolist()
    odd_pairs = _odd_distance_pairs(m - 1)
    size = 1 << (m - 1)
    flip_all = (1 << size) - 1
    out = []
    for i0, psi0 in enumerate(prev):
        row0 = rows[i0]
        for i1, psi1 in enumerate(prev):
            g = _compose_valid_pattern(psi0, psi1, m - 1, row0, rows[i1], odd_pairs)
            if g is not None:
                out.append(tuple(_compose_build(psi0, psi1, m - 1, g)))
                out.append(tuple(_compose_build(psi0, psi1, m - 1, g ^ flip_all)))
    return tuple(out)


def enumerate_odd(n: int, allow_large: bool = False) -> Iterator[Outmap]:
    """All odd USOs of the n-cube; n <= 4 by default, n = 5 behind allow_large.

    Dimension 5 is a stream over ~3.3e8 composition candidates (the valid
    ones are found with the vectorized pair filter); it does not cache.
    """
    if n > 5 or (n == 5 and not allow_large):
        raise ResourceLimitError(
            "odd enumeration is capped at n = 4 (n = 5 via the long-running opt-in)"
        )
    if n <= 4:
        for values in _odd_values(n):
            yield Outmap(n, values)
        return
    prev = _odd_values(4)
    nib, rows = _facet_arrays(4)
    size = 1 << 4
    flip_all = (1 << size) - 1
    for i0, psi0 in enumerate(prev):
        valid, patterns = _valid_upper_mask(i0, nib, rows, 4)
        for i1 in np.nonzero(valid)[0]:
            psi1 = prev[i1]
            g = int(patterns[i1])
            yield Outmap(5, tuple(_compose_build(psi0, psi1, 4, g)))
            yield Outmap(5, tuple(_compose_build(psi0, psi1, 4, g ^ flip_all)))


# ---------------------------------------------------------------------------
# counting


def _facet_arrays(m: int):
    """Value matrix and sink table of the full dimension-m odd USO list."""
    values_list = _odd_values(m)
    nib = np.asarray(values_list, dtype=np.uint32)
    rows = _sink_rows(values_list, m)
    return nib, rows


def _valid_upper_mask(i0: int, nib: np.ndarray, rows: np.ndarray, m: int):
    """Vectorized _compose_valid_pattern of facet i0 against every upper facet.

    Returns (valid mask, seed-0 patterns) over all uppers at once.
    """
    count = nib.shape[0]
    nib0 = nib[i0]
    size = 1 << m
    g = np.zeros(count, dtype=np.uint32)
    for v in range(1, size):
        bit = v & -v
        parent = v ^ bit
        pos = bit.bit_length() - 1
        h = (((int(nib0[parent]) ^ nib[:, parent]) >> pos) & 1) ^ 1
        g |= ((g >> parent & 1) ^ h) << v
    row0 = rows[i0].astype(np.uint32)
    sinks1 = rows.astype(np.uint32)
    agree = ((g[:, None] >> row0[None, :]) ^ (g[:, None] >> sinks1)) & 1
    valid = ~agree.any(axis=1)
    pairs = _odd_distance_pairs(m)
    us = np.fromiter((p[0] for p in pairs), dtype=np.uint32)
    vs = np.fromiter((p[1] for p in pairs), dtype=np.uint32)
    ds = np.fromiter((p[2] for p in pairs), dtype=np.uint32)
    incl = (ds[None, :] & ~(nib0[us][None, :] ^ nib[:, vs])) == 0
    same = ((g[:, None] >> us[None, :]) ^ (g[:, None] >> vs[None, :])) & 1 == 0
    valid &= ~(incl & same).any(axis=1)
    return valid, g


def _odd_successor_worker(args) -> int:
    nib, rows, m, lo, hi = args
    total = 0
    for i0 in range(lo, hi):
        valid, _ = _valid_upper_mask(i0, nib, rows, m)
        total += 2 * int(valid.sum())
    return total


def _uso_successor_worker(args) -> int:
    rows, size, lo, hi = args
    total = 0
    for i0 in range(lo, hi):
        row0 = rows[i0]
        for row1 in rows:
            parent = list(range(size))
            comps = size
            for a, b in zip(row0, row1):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    comps -= 1
            total += 1 << comps
    return total


def _sharded_sum(worker, make_args, count: int, jobs: int) -> int:
    """Run a range worker over [0, count) in deterministic contiguous shards."""
    if jobs <= 1 or count == 0:
        return worker(make_args(0, count))
    jobs = min(jobs, count)
    bounds = [count * k // jobs for k in range(jobs + 1)]
    tasks = [make_args(bounds[k], bounds[k + 1]) for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(worker, tasks))


def count_uso_successor(m: int, jobs: int = 1) -> int:
    """Count USOs of dimension m + 1 from the full dimension-m USO list.

    Every (m+1)-USO splits uniquely into two facet USOs plus connecting
    edges; a connecting pattern works iff for every facet face the two
    sinks' connecting edges agree, so each ordered pair contributes
    2**(components of that agreement graph).
    """
    if not 0 <= m <= 3:
        raise ResourceLimitError("USO successor counting needs the full list of dimension <= 3")
    rows = _sink_rows(_uso_values(m), m).tolist()
    size = 1 << m
    return _sharded_sum(
        _uso_successor_worker, lambda lo, hi: (rows, size, lo, hi), len(rows), jobs
    )


def count_odd_successor(m: int, jobs: int = 1) -> int:
    """Count odd USOs of dimension m + 1 by the vectorized pair filter."""
    if not 0 <= m <= 4:
        raise ResourceLimitError("odd successor counting needs the full list of dimension <= 4")
    nib, rows = _facet_arrays(m)
    return _sharded_sum(
        _odd_successor_worker, lambda lo, hi: (nib, rows, m, lo, hi), nib.shape[0], jobs
    )


@dataclass(frozen=True)
class CountRow:
    """Counts for one dimension; None marks a value outside the run's scope."""

    uso: int | None
    puso: int | None
    border: int | None
    odd: int | None


@dataclass(frozen=True)
class CountTable:
    """Per-dimension count rows, index 0..max_n."""

    rows: tuple[CountRow, ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1


OPT_IN_TARGETS = frozenset({"uso4", "odd5"})


def count_table(max_n: int = 4, opt_in: Iterable[str] = (), jobs: int = 1) -> CountTable:
    """Exact class counts per dimension up to max_n (<= 5).

    uso(4) and odd(5) are long-running opt-ins ("uso4", "odd5"); cells not
    covered by the current scope are None.  uso(5) is out of scope, while
    puso(n) = 2 * odd(n - 1) for n >= 2 is always filled when odd(n - 1)
    is, and is cross-verified against direct PUSO filtering for n <= 3.
    """
    opts = frozenset(opt_in)
    unknown = opts - OPT_IN_TARGETS
    if unknown:
        raise ValueError(f"unknown opt-in targets: {sorted(unknown)}")
    if not 0 <= max_n <= 5:
        raise ResourceLimitError("counting is supported for dimensions 0..5")
    odd: dict[int, int | None] = {}
    for n in range(0, min(max_n, 4) + 1):
        odd[n] = len(_odd_values(n))
    if max_n == 5:
        odd[5] = count_odd_successor(4, jobs) if "odd5" in opts else None
    uso: dict[int, int | None] = {}
    for n in range(0, min(max_n, 3) + 1):
        uso[n] = len(_uso_values(n))
    if max_n >= 4:
        uso[4] = count_uso_successor(3, jobs) if "uso4" in opts else None
    if max_n >= 5:
        uso[5] = None
    puso: dict[int, int | None] = {}
    for n in range(0, max_n + 1):
        if n < 2:
            puso[n] = 0
        else:
            below = odd[n - 1]
            puso[n] = None if below is None else 2 * below
    for n in range(0, min(max_n, 3) + 1):
        direct = sum(1 for _ in enumerate_pusos(n))
        if direct != puso[n]:
            raise AssertionError(
                f"PUSO count mismatch at n={n}: direct {direct} vs 2*odd(n-1) {puso[n]}"
            )
    rows = tuple(
        CountRow(uso=uso[n], puso=puso[n], border=odd[n], odd=odd[n]) for n in range(max_n + 1)
    )
    return CountTable(rows)


# ---------------------------------------------------------------------------
# orbits


@lru_cache(maxsize=None)
def _mask_perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each coordinate permutation, the induced map on coordinate masks."""
    tables = []
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1 << n):
            image = 0
            for src in range(n):
                if mask >> src & 1:
                    image |= 1 << perm[src]
            table[mask] = image
        tables.append(tuple(table))
    return tuple(tables)


@lru_cache(maxsize=None)
def _reverse_table(n: int) -> tuple[int, ...]:
    """Bit reversal within width n: mask order <-> .uso line lexicographic order."""
    return tuple(
        sum(((mask >> i) & 1) << (n - 1 - i) for i in range(n)) for mask in range(1 << n)
    )


@dataclass(frozen=True)
class CanonicalForm:
    """Lexicographically minimal .uso body over an outmap's symmetry orbit."""

    n: int
    body: bytes

    def to_outmap(self) -> Outmap:
        rev = _reverse_table(self.n)
        lines = self.body.decode().splitlines()
        values = tuple(
            sum(1 << pos for pos, ch in enumerate(line) if ch == "1") for line in lines
        )
        return Outmap(self.n, values)


def canonical_form(phi: Outmap) -> CanonicalForm:
    """Minimal .uso body over all vertex relabelings V -> sigma(V) XOR R (n <= 5)."""
    if phi.n > 5:
        raise ResourceLimitError("canonicalization is capped at n = 5")
    n = phi.n
    size = 1 << n
    rev = _reverse_table(n)
    best: bytes | None = None
    for table in _mask_perm_tables(n):
        keyed = [rev[table[value]] for value in phi.values]
        for r in range(size):
            cand = bytearray(size)
            for v in range(size):
                cand[table[v] ^ r] = keyed[v]
            packed = bytes(cand)
            if best is None or packed < best:
                best = packed
    body = "\n".join(value_line(rev[key], n) for key in best) + "\n"
    return CanonicalForm(n, body.encode())


def count_orbits(outmaps: Iterable[Outmap]) -> int:
    """Number of symmetry classes among outmaps of one dimension <= 4."""
    seen: set[bytes] = set()
    dim: int | None = None
    for phi in outmaps:
        if dim is None:
            dim = phi.n
            if dim > 4:
                raise ResourceLimitError("orbit counting is capped at n = 4")
        elif phi.n != dim:
            raise ValueError("orbit counting needs outmaps of one common dimension")
        seen.add(canonical_form(phi).body)
    return len(seen)


def orbit_representatives(outmaps: Iterable[Outmap]) -> list[CanonicalForm]:
    """Sorted canonical representative of every orbit present in the input."""
    forms: dict[bytes, CanonicalForm] = {}
    dim: int | None = None
    for phi in outmaps:
        if dim is None:
            dim = phi.n
            if dim > 4:
                raise ResourceLimitError("orbit counting is capped at n = 4")
        elif phi.n != dim:
            raise ValueError("orbit counting needs outmaps of one common dimension")
        form = canonical_form(phi)
        forms.setdefault(form.body, form)
    return [forms[body] for body in sorted(forms)]


# ---------------------------------------------------------------------------
# class streams and random generators (test and CLI support)


def enumerate_class(kind: str, n: int, allow_large: bool = False) -> Iterator[Outmap]:
    """Stream one recognized class: uso | puso | odd | border."""
    if kind == "uso":
        yield from enumerate_usos(n)
    elif kind == "puso":
        yield from enumerate_pusos(n)
    elif kind == "odd":
        yield from enumerate_odd(n, allow_large)
    elif kind == "border":
        # border USOs are exactly the duals of odd USOs
        for phi in enumerate_odd(n, allow_large):
            yield dual(phi)
    else:
        raise ValueError(f"unknown class {kind!r}")


def random_outmap(n: int, rng) -> Outmap:
    """Uniformly random outmap function (not usually an orientation)."""
    if n == 0:
        return Outmap(0, (0,))
    return Outmap(n, tuple(rng.getrandbits(n) for _ in range(1 << n)))


def random_uso(n: int, rng) -> Outmap:
    """Random USO: sampled from the full list for n <= 3, composed for n = 4."""
    if n <= 3:
        return Outmap(n, rng.choice(_uso_values(n)))
    if n != 4:
        raise ResourceLimitError("random USOs are supported for n <= 4")
    values_list = _uso_values(3)
    rows = _sink_rows(values_list, 3).tolist()
    i0 = rng.randrange(len(values_list))
    i1 = rng.randrange(len(values_list))
    parent = list(range(8))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in zip(rows[i0], rows[i1]):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    root_bits = {root: rng.getrandbits(1) for root in {find(v) for v in range(8)}}
    pattern = sum(root_bits[find(v)] << v for v in range(8))
    return Outmap(4, tuple(_compose_build(values_list[i0], values_list[i1], 3, pattern)))


def random_odd(n: int, rng) -> Outmap:
    """Random odd USO sampled from the full list (n <= 4)."""
    return Outmap(n, rng.choice(_odd_values(n)))


def random_puso(n: int, rng) -> Outmap:
    """Random PUSO: extend the dual of a random odd USO one dimension up (2 <= n <= 5)."""
    if not 2 <= n <= 5:
        raise ResourceLimitError("random PUSOs are supported for 2 <= n <= 5")
    from .constructions import extend_border

    return extend_border(dual(random_odd(n - 1, rng)), rng.getrandbits(1))
