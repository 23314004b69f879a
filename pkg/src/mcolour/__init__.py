"""Exact colour spectra of finitely-determined colourings of N^(r).

Builds the extremal colouring families (small-rainbow, small-set and the
Baranyai-ordered family), computes spectra exactly over the subset lattice,
and checks the approximation, interval and lemma bounds against them.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapExceeded,
    InternalInvariantViolation,
    InvalidAssignment,
    InvalidPartition,
    InvalidVertex,
    McolourError,
    NoWitness,
    OutOfRange,
    ParseError,
    PreconditionFailed,
)
from .template import (  # noqa: E402
    ColourTemplate,
    canonical_form,
    make_template,
    merge_colours,
    parse_template,
    serialize_template,
)
from .spectrum import (  # noqa: E402
    Spectrum,
    colour_loss,
    gamma,
    minimal_witness,
    nearest,
    spectrum,
)
from .constructions import random_template, small_rainbow, small_set, theorem4  # noqa: E402
from .baranyai import factorize, verify_factorization  # noqa: E402
