"""Yoneda Ext for finitely presented modules over Z and Z/n.

Modules are given by generators and relations, n-exact sequences are
checked chains of module maps, and ``Ext^n(X, Y)`` is computed from the
syzygy tower of X.  Classes of sequences, splice and cut, pushout and
pullback along maps, both long exact sequences and the projective and
injective dimensions are all exact integer computations.
"""
from .dimensions import Dimension, ext_via_injectives, fd, id, injective_dimension, pd
from .errors import (
    ContractViolation,
    HomAlgError,
    InternalConsistencyError,
    MalformedInput,
    NoSolution,
    NotEpi,
    NotExact,
    NotExactAt,
    NotMono,
    RingMismatch,
    SizeBoundExceeded,
    UnsupportedRing,
)
from .ext import (
    ExtClass,
    ExtModule,
    are_equivalent,
    class_of,
    ext_module,
    induced_map,
    is_zero_class,
    projective_presentation,
    representative_sequence,
    splitting,
    syzygy_tower,
)
from .les import LongExactSequence, les_contravariant, les_covariant
from .modules import (
    InvariantFactors,
    Morphism,
    Presentation,
    canonical_decomposition,
    cokernel,
    direct_sum,
    hom_module,
    image,
    is_injective,
    is_projective,
    kernel,
    pullback,
    pushout,
    simplify,
)
from .oracle import EnumeratedModule, oracle_check
from .ring import ZZ, Matrix, RingSpec, Zmod, smith_normal_form, solve_linear
from .sequences import (
    NExactSequence,
    cut,
    pullback_sequence,
    pushout_sequence,
    splice,
    verify_exact,
    zero_sequence,
)

__version__ = "0.1.0"
