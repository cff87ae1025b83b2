from .errors import (
    IFSError,
    InvalidArc,
    AmbientMismatch,
    EmptySet,
    NotAHomeomorphism,
    OutOfDomain,
    InsufficientDepth,
    EvidenceContradictsMetadata,
    InvalidGeometry,
    InfeasibleSlopes,
    DepthExceedsData,
    Overflow,
)
from .rationals import to_rational, format_rational, frac_part, circle_distance
from .arcset import (
    Ambient,
    Arc,
    ArcSet,
    CIRCLE,
    make_arc,
    canonicalize,
    membership,
    union,
    union_all,
    intersect,
    is_subset,
    complement,
    point_distance,
    directed_distance,
    hausdorff_distance,
    component_stats,
)
from .plmap import (
    PLMap,
    pl_from_breakpoints,
    identity,
    evaluate,
    compose,
    power,
    invert,
    image_arcset,
    preimage_arcset,
    prune_collinear,
    segment_slopes,
    max_slope_on,
    has_fixed_point,
)
from .codec import (
    ambient_from_dict,
    arcset_to_dict,
    arcset_from_dict,
    plmap_to_dict,
    plmap_from_dict,
)

__all__ = [
    'IFSError',
    'InvalidArc',
    'AmbientMismatch',
    'EmptySet',
    'NotAHomeomorphism',
    'OutOfDomain',
    'InsufficientDepth',
    'EvidenceContradictsMetadata',
    'InvalidGeometry',
    'InfeasibleSlopes',
    'DepthExceedsData',
    'Overflow',
    'to_rational',
    'format_rational',
    'frac_part',
    'circle_distance',
    'Ambient',
    'Arc',
    'ArcSet',
    'CIRCLE',
    'make_arc',
    'canonicalize',
    'membership',
    'union',
    'union_all',
    'intersect',
    'is_subset',
    'complement',
    'point_distance',
    'directed_distance',
    'hausdorff_distance',
    'component_stats',
    'PLMap',
    'pl_from_breakpoints',
    'identity',
    'evaluate',
    'compose',
    'power',
    'invert',
    'image_arcset',
    'preimage_arcset',
    'prune_collinear',
    'segment_slopes',
    'max_slope_on',
    'has_fixed_point',
    'ambient_from_dict',
    'arcset_to_dict',
    'arcset_from_dict',
    'plmap_to_dict',
    'plmap_from_dict',
]
