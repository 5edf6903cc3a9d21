"""Bitmask cube machinery: coordinate sets, faces, outmaps, text format.

Coordinates are numbered 1..n and every set of coordinates is stored as an
integer bitmask with bit (i - 1) standing for coordinate i.  A vertex of the
standard n-cube is exactly such a set, so vertex masks double as array
indices: the vertex {1, 3} has index 0b101 = 5.  Outmap values, flip sets,
carriers, and Hamming codewords all reuse the same encoding, which keeps the
whole toolkit inside plain integer arithmetic (no floating point anywhere).

An outmap assigns each vertex its set of outgoing coordinates.  The ".uso"
text serialization is:

    line 1              the dimension n in decimal
    lines 2 .. 2**n+1   for vertex index v = 0 .. 2**n - 1, exactly n
                        characters over {0, 1}; the character at position
                        i - 1 (leftmost = coordinate 1) is '1' iff
                        coordinate i is outgoing at that vertex

A face is a closed interval [lower, upper] with lower <= upper as sets; its
carrier upper XOR lower holds the coordinates that vary on the face.  The
only coordinate relabeling in the package happens in induced_outmap, which
compresses carrier coordinates onto 1..dim in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import FormatError

# Hard cap on cube dimension; 2**20 vertices is already past desk scale.
MAX_DIM = 20


def full_mask(n: int) -> int:
    """Mask of all coordinates 1..n."""
    return (1 << n) - 1


def symdiff(a: int, b: int) -> int:
    """Symmetric difference of two coordinate sets."""
    return a ^ b


def mask_from_coords(coords) -> int:
    """Mask for an iterable of coordinate numbers (each >= 1)."""
    mask = 0
    for i in coords:
        if i < 1:
            raise ValueError(f"coordinates are numbered from 1, got {i}")
        mask |= 1 << (i - 1)
    return mask


def coords_from_mask(mask: int) -> tuple[int, ...]:
    """Increasing tuple of coordinate numbers present in a mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class FaceSpec:
    """Face [lower, upper] of a cube: all vertices V with lower <= V <= upper."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower < 0:
            raise ValueError("face bounds must be nonnegative masks")
        if self.lower & ~self.upper:
            raise ValueError(
                f"invalid face: lower {self.lower:#b} is not a subset of upper {self.upper:#b}"
            )

    @property
    def carrier(self) -> int:
        """Coordinates that vary on the face."""
        return self.lower ^ self.upper

    @property
    def dim(self) -> int:
        return self.carrier.bit_count()

    def contains(self, v: int) -> bool:
        return not (self.lower & ~v) and not (v & ~self.upper)

    def vertices(self) -> Iterator[int]:
        """Vertices of the face in increasing index order."""
        carrier = self.carrier
        s = 0
        while True:
            yield self.lower | s
            if s == carrier:
                return
            s = (s - carrier) & carrier


def antipode(v: int, face: FaceSpec) -> int:
    """Vertex opposite v within a face."""
    if not face.contains(v):
        raise ValueError(f"vertex {v:#b} lies outside face [{face.lower:#b}, {face.upper:#b}]")
    return v ^ face.carrier


def faces_iter(n: int, min_dim: int = 0) -> Iterator[FaceSpec]:
    """All faces of the standard n-cube with dimension >= min_dim.

    Deterministic order: carrier masks ascending, and for each carrier the
    lower sets ascending.  Yields 3**n faces for min_dim=0 and 3**n - 2**n
    faces for min_dim=1.
    """
    if not 0 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be within 0..{MAX_DIM}")
    if min_dim < 0:
        raise ValueError("min_dim must be nonnegative")
    if min_dim > n:
        return
    full = full_mask(n)
    for carrier in range(full + 1):
        if carrier.bit_count() < min_dim:
            continue
        free = full ^ carrier
        a = 0
        while True:
            yield FaceSpec(a, a | carrier)
            if a == free:
                break
            a = (a - free) & free


@dataclass(frozen=True)
class Outmap:
    """Dense outmap of the standard n-cube: values[v] = outgoing set of vertex v."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension must be within 0..{MAX_DIM}")
        if len(self.values) != 1 << self.n:
            raise ValueError(
                f"outmap for dimension {self.n} needs {1 << self.n} values, got {len(self.values)}"
            )
        full = full_mask(self.n)
        for v, value in enumerate(self.values):
            if value < 0 or value & ~full:
                raise ValueError(f"value {value:#b} at vertex {v} uses coordinates beyond 1..{self.n}")

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def whole_face(self) -> FaceSpec:
        return FaceSpec(0, full_mask(self.n))


def face_sinks(phi: Outmap, face: FaceSpec | None = None) -> tuple[int, ...]:
    """Vertices of a face with no outgoing coordinate inside the face."""
    if face is None:
        face = phi.whole_face()
    if face.upper > full_mask(phi.n):
        raise ValueError("face does not fit inside the cube")
    carrier = face.carrier
    values = phi.values
    return tuple(v for v in face.vertices() if not values[v] & carrier)


def _carrier_bits(carrier: int) -> list[int]:
    """Bit positions of a carrier, increasing."""
    bits = []
    pos = 0
    while carrier:
        if carrier & 1:
            bits.append(pos)
        carrier >>= 1
        pos += 1
    return bits


def induced_outmap(phi: Outmap, face: FaceSpec) -> Outmap:
    """Outmap induced on a face, re-indexed to a standalone dim(face)-cube.

    Vertex lower | S of the face becomes the compression of S onto the
    carrier coordinates taken in increasing order, and values are the
    original values restricted to the carrier, compressed the same way.
    """
    if face.upper > full_mask(phi.n):
        raise ValueError("face does not fit inside the cube")
    bits = _carrier_bits(face.carrier)
    k = len(bits)
    values = []
    for w in range(1 << k):
        v = face.lower
        for j, pos in enumerate(bits):
            if w >> j & 1:
                v |= 1 << pos
        value = phi.values[v]
        values.append(sum((value >> pos & 1) << j for j, pos in enumerate(bits)))
    return Outmap(k, tuple(values))


def parse_uso(text: str) -> Outmap:
    """Parse the .uso text format; raises FormatError with a line number."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input", line=1)
    head = lines[0].strip()
    try:
        n = int(head, 10)
    except ValueError:
        raise FormatError(f"expected a decimal dimension, got {head!r}", line=1) from None
    if not 0 <= n <= MAX_DIM:
        raise FormatError(f"dimension {n} outside 0..{MAX_DIM}", line=1)
    expected = 1 << n
    if len(lines) - 1 != expected:
        raise FormatError(
            f"expected {expected} vertex lines for dimension {n}, got {len(lines) - 1}",
            line=len(lines) + 1 if len(lines) - 1 < expected else expected + 2,
        )
    values = []
    for v in range(expected):
        row = lines[v + 1]
        if len(row) != n:
            raise FormatError(f"expected exactly {n} characters, got {len(row)}", line=v + 2)
        value = 0
        for pos, ch in enumerate(row):
            if ch == "1":
                value |= 1 << pos
            elif ch != "0":
                raise FormatError(f"invalid character {ch!r}", line=v + 2)
        values.append(value)
    return Outmap(n, tuple(values))


def value_line(value: int, n: int) -> str:
    """Render one outmap value as its n-character .uso line."""
    return "".join("1" if value >> pos & 1 else "0" for pos in range(n))


def emit_uso(phi: Outmap) -> str:
    """Serialize an outmap to .uso text (with trailing newline)."""
    lines = [str(phi.n)]
    lines.extend(value_line(value, phi.n) for value in phi.values)
    return "\n".join(lines) + "\n"
