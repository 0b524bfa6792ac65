"""Linear-time shift rule for the prefer-min and prefer-max De Bruijn sequences."""

from .errors import (
    AlphabetMismatch,
    AlphabetTooSmall,
    CapExceeded,
    DeBruijnError,
    EmptyWord,
    InvalidParameter,
    LengthMismatch,
    LetterOutOfRange,
    NotPreNecklace,
)
from .generator import (
    GeneratorCursor,
    VerificationReport,
    fkm_sequence,
    fsr_stream,
    generate,
    materialize,
    verify_debruijn,
)
from .lyndon import (
    CflFactorization,
    FractionalPower,
    cfl_factorize,
    fractional_power_decompose,
    is_expanded_lyndon,
    is_lyndon,
    is_prenecklace,
)
from .oracles import SequenceOrder, enumerate_expanded_lyndon, greedy_sequence, head_naive, next_naive
from .shiftrule import head, next_max, next_max_inplace, next_min, next_min_inplace
from .words import (
    Ordering,
    Word,
    complement,
    cyclic_order,
    format_word,
    lex_compare,
    make_word,
    necklace_count,
    parse_word,
    rotate,
)

__version__ = "0.1.0"
