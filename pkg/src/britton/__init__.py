"""Compressed word problems in free groups, HNN-extensions of free groups and
graphs of free groups with cyclic edge groups."""

from .alphabet import Alphabet, inverse_word
from .errors import (
    AlphabetMismatch,
    BrittonError,
    GrammarError,
    InvalidInput,
    MalformedInput,
    OrderMismatch,
    TooLong,
    WordSyntaxError,
)
from .free_group import (
    FreeReducer,
    compressed_free_reduce,
    compressed_word_problem,
    cyclic_decompose,
    free_reduce,
    is_cyclically_reduced,
    is_reduced,
    word_problem,
)
from .graph import (
    CycleTypeWord,
    Edge,
    GraphOfGroups,
    amalgam,
    fundamental_word_problem,
    hnn_as_graph,
    hnn_word_as_cycle,
    validate_cycle_type,
    validate_graph,
)
from .hnn import (
    AscendingPresentation,
    BrittonSequence,
    HnnPresentation,
    ascending_word_problem,
    britton_reduce,
    bs12,
    bs12_ascending,
    make_ascending,
    make_hnn,
    semi_compressed_word_problem,
)
from .power import NO_SOLUTION, PowerAnswer, compressed_power
from .slp import (
    CompositionSystem,
    CutExpr,
    Slp,
    concat,
    doubling_grammar,
    equal,
    expand,
    fingerprint,
    grammar_from_json,
    grammar_to_json,
    invert,
    length,
    normalize_cuts,
    power,
    seed_fingerprints,
    substring_fp,
    to_chomsky_normal_form,
    validate,
)
from .syntax import parse_base_word, parse_word

__version__ = "0.1.0"
