"""USO subclasses: duals, border USOs, odd USOs, caps, and PUSO parity.

A border USO is one that can appear as a facet of a PUSO; a USO psi is
border exactly when every vertex pair with psi(U) XOR psi(V) contained in
U XOR V has |psi(U) XOR psi(V)| odd.  An odd USO is the mirror notion for
the inverse outmap: every pair with U XOR V contained in phi(U) XOR phi(V)
has |U XOR V| odd.  Both direct pair conditions are implemented here; the
test suite cross-checks them against the dual route (odd = dual is border)
and the cap route (odd = every face is a cap).
"""

from __future__ import annotations

import enum

from .cube import FaceSpec, Outmap, faces_iter, full_mask
from .errors import NotAPusoError, NotAUsoError, NotBijectiveError
from .recognition import PairEvalCounter, is_puso, is_uso_fast


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


def dual(phi: Outmap) -> Outmap:
    """Inverse outmap phi**-1; requires phi to be a bijection on vertices."""
    size = 1 << phi.n
    inverse = [-1] * size
    for v, value in enumerate(phi.values):
        if inverse[value] >= 0:
            raise NotBijectiveError(
                f"outmap is not bijective: vertices {inverse[value]} and {v} share value {value:#b}"
            )
        inverse[value] = v
    return Outmap(phi.n, tuple(inverse))


def _require_uso(phi: Outmap, counter: PairEvalCounter | None) -> None:
    if not is_uso_fast(phi, counter):
        raise NotAUsoError("input outmap is not a unique sink orientation")


def is_border(phi: Outmap, counter: PairEvalCounter | None = None):
    """Decide whether a USO can occur as a facet of a PUSO.

    Scans unordered vertex pairs in lexicographic order; the first pair
    with phi(U) XOR phi(V) contained in U XOR V but of even size is
    returned as witness.  Raises NotAUsoError for non-USO input.
    """
    _require_uso(phi, counter)
    values = phi.values
    size = 1 << phi.n
    used = 0
    result = True, None
    for u in range(size):
        vu = values[u]
        for v in range(u + 1, size):
            used += 1
            diff = vu ^ values[v]
            if not diff & ~(u ^ v) and not diff.bit_count() & 1:
                result = False, (u, v)
                break
        if result[1]:
            break
    if counter is not None:
        counter.count += used
    return result


def is_odd(phi: Outmap, counter: PairEvalCounter | None = None):
    """Decide whether a USO is odd (its dual is a border USO).

    Direct condition: every pair with U XOR V contained in
    phi(U) XOR phi(V) must have odd Hamming distance.  First violating
    pair (lexicographic scan) is returned as witness.  Raises NotAUsoError
    for non-USO input.
    """
    _require_uso(phi, counter)
    values = phi.values
    size = 1 << phi.n
    used = 0
    result = True, None
    for u in range(size):
        vu = values[u]
        for v in range(u + 1, size):
            used += 1
            duv = u ^ v
            if not duv & ~(vu ^ values[v]) and not duv.bit_count() & 1:
                result = False, (u, v)
                break
        if result[1]:
            break
    if counter is not None:
        counter.count += used
    return result


def complementary_vertex(phi: Outmap, w: int, face: FaceSpec | None = None) -> int:
    """The unique vertex of the face whose induced value is the complement of w's.

    Requires the outmap induced on the face to be a bijection; raises
    NotBijectiveError otherwise.
    """
    if face is None:
        face = phi.whole_face()
    if face.upper > full_mask(phi.n):
        raise ValueError("face does not fit inside the cube")
    if not face.contains(w):
        raise ValueError(f"vertex {w:#b} lies outside the face")
    carrier = face.carrier
    values = phi.values
    seen: dict[int, int] = {}
    for v in face.vertices():
        key = values[v] & carrier
        if key in seen:
            raise NotBijectiveError(
                f"induced outmap is not bijective: vertices {seen[key]} and {v} share value {key:#b}"
            )
        seen[key] = v
    return seen[(values[w] & carrier) ^ carrier]


def complementary_pairs(phi: Outmap, face: FaceSpec | None = None) -> tuple[tuple[int, int], ...]:
    """Perfect matching (W, complement of W) over a face, each pair once, W <= partner."""
    if face is None:
        face = phi.whole_face()
    carrier = face.carrier
    values = phi.values
    seen: dict[int, int] = {}
    for v in face.vertices():
        key = values[v] & carrier
        if key in seen:
            raise NotBijectiveError(
                f"induced outmap is not bijective: vertices {seen[key]} and {v} share value {key:#b}"
            )
        seen[key] = v
    pairs = []
    for v in face.vertices():
        partner = seen[(values[v] & carrier) ^ carrier]
        if v <= partner:
            pairs.append((v, partner))
    return tuple(pairs)


def is_cap(phi: Outmap, face: FaceSpec | None = None) -> bool:
    """True iff the face's induced outmap is bijective with every complementary
    pair at odd Hamming distance.  Vertices (dimension 0) are trivially caps;
    a non-bijective induced outmap yields False, not an error.
    """
    if face is None:
        face = phi.whole_face()
    if face.carrier == 0:
        return True
    try:
        pairs = complementary_pairs(phi, face)
    except NotBijectiveError:
        return False
    return all((w ^ partner).bit_count() & 1 for w, partner in pairs)


def all_faces_caps(phi: Outmap) -> bool:
    """True iff every one of the 3**n faces is a cap (equivalent to odd for USOs)."""
    return all(is_cap(phi, face) for face in faces_iter(phi.n))


def puso_parity(phi: Outmap, counter: PairEvalCounter | None = None) -> Parity:
    """Common parity |phi(V)| mod 2 of a PUSO's values (even: 2 sinks, odd: 0)."""
    if not is_puso(phi, counter):
        raise NotAPusoError("parity is defined for PUSOs only")
    return Parity.ODD if phi.values[0].bit_count() & 1 else Parity.EVEN
