"""fuzzybig: the algebra of fuzzy bigraphs.

Crisp bigraphs, fuzzy bigraphs over a frame of degrees, type-2 fuzzy
bigraphs with graded interfaces, their composition and tensor product,
support translations, a fuzzy-category law harness, and a canonical
serialization format with DOT export.
"""

from .category import (
    ArrowSystem,
    CategoryLawReport,
    FuzzyArrow,
    check_category_laws,
    compose_arrow,
    type2_arrow_system,
)
from .crisp import (
    Bigraph,
    Interface,
    LinkGraph,
    PlaceGraph,
    Signature,
    UNIT_INTERFACE,
    compose_crisp,
    identity_crisp,
    is_hypergraph,
    rename_crisp,
    tensor_crisp,
    validate_bigraph,
    validate_link_graph,
    validate_place_graph,
)
from .errors import (
    FrameMismatchError,
    InterfaceMismatchError,
    ModelError,
    NameClashError,
    NotComposableError,
    NotCrispError,
    ParseError,
    SignatureMismatchError,
    SupportOverlapError,
    ValidationReport,
)
from .fuzzy import (
    FuzzyBigraph,
    FuzzyLinkGraph,
    FuzzyPlaceGraph,
    Support,
    SupportTranslation,
    TranslationReport,
    check_support_translation,
    compose_fuzzy,
    compose_fuzzy_link,
    compose_fuzzy_place,
    defuzzify,
    derive_ports,
    fuzzify,
    identity_bigraph,
    identity_link,
    identity_place,
    identity_translation,
    support,
    tensor_fuzzy,
    tensor_fuzzy_link,
    tensor_fuzzy_place,
    translate_fuzzy,
    validate_fuzzy_bigraph,
    validate_fuzzy_link,
    validate_fuzzy_place,
)
from .lattice import (
    Frame,
    FrameValue,
    TWO_POINT,
    UNIT_INTERVAL,
    chain,
    frame_from_name,
    join,
    join_all,
    meet,
)
from .model_io import (
    FILE_EXTENSION,
    ModelDocument,
    export_dot,
    load_document,
    parse,
    save_document,
    serialize,
    validate_document,
    validate_graph,
)
from .relations import FuzzyRelation, FuzzySet, identity_relation
from .type2 import (
    Type2FuzzyBigraph,
    Type2FuzzyLinkGraph,
    Type2FuzzyPlaceGraph,
    Type2TranslationReport,
    check_type2_support_translation,
    compose_type2,
    compose_type2_link,
    compose_type2_place,
    embed_bigraph,
    embed_link,
    embed_place,
    find_support_equivalence,
    identity_type2_bigraph,
    make_type2_translation,
    translate_type2,
    type2_ports,
    type2_support,
    validate_type2_bigraph,
)

__version__ = "0.1.0"
