from .group_element import (
    GroupElement,
    compose,
    element_distance,
    exp_generator,
    exp_matrix,
    inverse,
    renormalize,
)
from .group_spec import GroupSpec
from .words import (
    MultiIndex,
    WordTable,
    approximate,
    best_word,
    enumerate_alphas,
    enumerate_words,
    mesh_cover_radius,
    sample_unitaries,
    word_count,
    word_element,
)

__all__ = [
    "GroupElement",
    "GroupSpec",
    "MultiIndex",
    "WordTable",
    "approximate",
    "best_word",
    "compose",
    "element_distance",
    "enumerate_alphas",
    "enumerate_words",
    "exp_generator",
    "exp_matrix",
    "inverse",
    "mesh_cover_radius",
    "renormalize",
    "sample_unitaries",
    "word_count",
    "word_element",
]
