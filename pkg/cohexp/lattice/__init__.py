from cohexp.lattice.embedding import EmbeddingReport, MemberImage, core, verify_embedding
from cohexp.lattice.exceptions import HypothesisFailedError
from cohexp.lattice.subgroups import (
    HyperplanePreimage,
    WitnessFamily,
    frattini,
    hyperplane_preimages,
    index_p2_intersection,
    index_p2_intersection_direct,
    lift_subalgebra,
    line_preimage,
    maximal_subgroups,
    maximal_subgroups_generic,
    normal_closure,
    preimage_of,
    subgroups_intersection,
    w_part,
    witness_family,
)

__all__ = [
    "EmbeddingReport",
    "HyperplanePreimage",
    "HypothesisFailedError",
    "MemberImage",
    "WitnessFamily",
    "core",
    "frattini",
    "hyperplane_preimages",
    "index_p2_intersection",
    "index_p2_intersection_direct",
    "lift_subalgebra",
    "line_preimage",
    "maximal_subgroups",
    "maximal_subgroups_generic",
    "normal_closure",
    "preimage_of",
    "subgroups_intersection",
    "verify_embedding",
    "w_part",
    "witness_family",
]
