"""uso-kit: construct, recognize, classify, and count unique sink orientations.

An outmap assigns every vertex of the n-cube the set of its outgoing
coordinates; USOs are the orientations in which every face has a unique
sink.  The package recognizes and classifies arbitrary outmaps, builds the
standard families, reduces modulo cube symmetry, and reproduces the exact
class counts per dimension at desk scale.  See the .uso text format in
uso_kit.cube and the command line in uso_kit.cli.
"""

from .classes import (
    Parity,
    all_faces_caps,
    complementary_pairs,
    complementary_vertex,
    dual,
    is_border,
    is_cap,
    is_odd,
    puso_parity,
)
from .constructions import (
    CodewordSet,
    CyclicPermutation,
    complement_vertex,
    cyclic_puso,
    extend_border,
    flip,
    hamming_codewords,
    is_complementable,
    klee_minty,
    odd_family,
)
from .cube import (
    MAX_DIM,
    FaceSpec,
    Outmap,
    antipode,
    coords_from_mask,
    emit_uso,
    face_sinks,
    faces_iter,
    full_mask,
    induced_outmap,
    mask_from_coords,
    parse_uso,
    symdiff,
    value_line,
)
from .enumeration import (
    CanonicalForm,
    CountRow,
    CountTable,
    canonical_form,
    connect_facets,
    count_odd_successor,
    count_orbits,
    count_table,
    count_uso_successor,
    enumerate_class,
    enumerate_odd,
    enumerate_orientations,
    enumerate_outmap_functions,
    enumerate_pusos,
    enumerate_usos,
    orbit_representatives,
    random_odd,
    random_outmap,
    random_puso,
    random_uso,
)
from .errors import (
    FormatError,
    NotAnOrientationError,
    NotAPusoError,
    NotAUsoError,
    NotBijectiveError,
    PreconditionViolatedError,
    ResourceLimitError,
    UsoKitError,
)
from .recognition import (
    ClassificationReport,
    PairEvalCounter,
    Verdict,
    antipodal_failures,
    classify,
    is_orientation,
    is_puso,
    is_uso_fast,
    is_uso_naive,
    pair_eval,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "CanonicalForm",
    "ClassificationReport",
    "CodewordSet",
    "CountRow",
    "CountTable",
    "CyclicPermutation",
    "FaceSpec",
    "FormatError",
    "NotAPusoError",
    "NotAUsoError",
    "NotAnOrientationError",
    "NotBijectiveError",
    "Outmap",
    "PairEvalCounter",
    "Parity",
    "PreconditionViolatedError",
    "ResourceLimitError",
    "UsoKitError",
    "Verdict",
    "all_faces_caps",
    "antipodal_failures",
    "antipode",
    "canonical_form",
    "classify",
    "complement_vertex",
    "complementary_pairs",
    "complementary_vertex",
    "connect_facets",
    "coords_from_mask",
    "count_odd_successor",
    "count_orbits",
    "count_table",
    "count_uso_successor",
    "cyclic_puso",
    "dual",
    "emit_uso",
    "enumerate_class",
    "enumerate_odd",
    "enumerate_orientations",
    "enumerate_outmap_functions",
    "enumerate_pusos",
    "enumerate_usos",
    "extend_border",
    "face_sinks",
    "faces_iter",
    "flip",
    "full_mask",
    "hamming_codewords",
    "induced_outmap",
    "is_border",
    "is_cap",
    "is_complementable",
    "is_odd",
    "is_orientation",
    "is_puso",
    "is_uso_fast",
    "is_uso_naive",
    "klee_minty",
    "mask_from_coords",
    "odd_family",
    "orbit_representatives",
    "parse_uso",
    "pair_eval",
    "puso_parity",
    "random_odd",
    "random_outmap",
    "random_puso",
    "random_uso",
    "symdiff",
    "value_line",
]
