"""Exact normalized-Laplacian spectra, cospectral search and isomorph-free
enumeration for small graphs."""

from .canon import CanonicalGraph, canonical_form, canonical_labeling, is_isomorphic
from .graph import (
    Graph,
    GraphError,
    InvalidParameterError,
    complete,
    complete_bipartite,
    construct_basic,
    cycle,
    disjoint_union,
    empty,
    gamma_graph,
    generalized_friendship,
    join,
    path,
    star,
)
from .graph6 import decode as graph6_decode, encode as graph6_encode
from .spectral import (
    ClosedFormSpectrum,
    Fingerprint,
    closed_form_fpq,
    fingerprint,
    float_spectrum,
    is_cospectral,
    spectrum_to_fingerprint,
)

__version__ = "0.1.0"
