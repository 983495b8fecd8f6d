"""Exact classification of closed orientable 5-manifolds with fundamental
group Z/2, trivial pi_1-action on pi_2 and torsion-free H_2."""

from .algebra import (
    Block,
    Category,
    CP2xS1,
    FakeRP5,
    FakeRP5Top,
    Invariants,
    Level,
    ManifoldExpression,
    S2xRP3,
    S2xS2xS1,
    StandardForm,
    StarS2xRP3,
    W2Type,
    check_relations,
    connected_sum,
    enumerate_forms,
    equivalent,
    invariants,
    normalize,
)
from .bordism import (
    BordismElement,
    CanonicalClass,
    Flavor,
    GroupKind,
    add,
    canonicalize,
    forget_smooth,
    group_info,
    neg,
)
from .bundle import BundleInput, Classification, classify, is_smoothable, w2_type
from .forms import CohomologyClass, IntersectionForm, from_blocks, manifold_from_json
from .parsing import parse_expression, render_expression

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BordismElement",
    "BundleInput",
    "CP2xS1",
    "CanonicalClass",
    "Category",
    "Classification",
    "CohomologyClass",
    "FakeRP5",
    "FakeRP5Top",
    "Flavor",
    "GroupKind",
    "IntersectionForm",
    "Invariants",
    "Level",
    "ManifoldExpression",
    "S2xRP3",
    "S2xS2xS1",
    "StandardForm",
    "StarS2xRP3",
    "W2Type",
    "add",
    "canonicalize",
    "check_relations",
    "classify",
    "connected_sum",
    "enumerate_forms",
    "equivalent",
    "forget_smooth",
    "from_blocks",
    "group_info",
    "invariants",
    "is_smoothable",
    "manifold_from_json",
    "neg",
    "normalize",
    "parse_expression",
    "render_expression",
    "w2_type",
]
