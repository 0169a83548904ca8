"""Epimorphisms between two-bridge knot groups, genus spectra and minimality."""
from .alexander import LaurentPoly, alexander_poly, degree, divides
from .catalog import (
    KnotReport,
    PatternFamily,
    enumerate_knots,
    is_minimal,
    match_genus5_family,
    scan_minimality,
)
from .contfrac import (
    ContFrac,
    KnotId,
    crossing_number,
    delete_zeros,
    eval_cf,
    even_expansion,
    genus,
    normalize,
    parse_knot,
    positive_expansion,
)
from .ors import (
    EpiWitness,
    OrsPattern,
    expand_pattern,
    feasible_repetitions,
    find_epimorphism,
    targets,
)
from .spectrum import GenusSpectrum, admissible, construct_source, s_k

__version__ = "0.1.0"
