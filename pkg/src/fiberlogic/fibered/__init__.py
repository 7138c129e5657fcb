"""Morphisms of prop-categories and the constructions built on them."""

from .internal import internal_structure
from .kernel import (
    ImagePropCategory,
    Kernel,
    KernelWitness,
    Obstruction,
    class_e_report,
    complete_through,
    diagonal_filler,
    factorize,
    image_factor,
    is_subprop_morphism,
    kernel,
    kernel_leq,
    kernel_leq_witness,
    kernels_equal,
    morphisms_agree,
    subprop_report,
)
from .models import (
    bang_morphism,
    empty_product_structure,
    external_product,
    hom_image,
    pairing,
    product_propcat,
    projection,
    submodel,
    transport_formula_sides,
    transport_structure,
    transport_term_sides,
)
from .morphism import (
    MorphismError,
    PropMorphism,
    TwoCell,
    check_morphism,
    check_two_cell,
    compose_morphisms,
    identity_morphism,
    table_morphism,
    value_map_morphism,
)
from .translate import (
    SignatureInterpretation,
    compose_interpretations,
    identity_interpretation,
    precompose_structure,
    translate_theory,
)

__all__ = [
    "ImagePropCategory", "Kernel", "KernelWitness", "MorphismError", "Obstruction", "PropMorphism",
    "SignatureInterpretation", "TwoCell", "bang_morphism", "check_morphism", "check_two_cell",
    "class_e_report", "complete_through", "compose_interpretations", "compose_morphisms",
    "diagonal_filler", "empty_product_structure", "external_product", "factorize", "hom_image",
    "identity_interpretation", "identity_morphism", "image_factor", "internal_structure",
    "is_subprop_morphism", "kernel", "kernel_leq", "kernel_leq_witness", "kernels_equal",
    "morphisms_agree", "pairing", "precompose_structure", "product_propcat", "projection",
    "subprop_report", "submodel", "table_morphism", "transport_formula_sides", "transport_structure",
    "transport_term_sides", "translate_theory", "value_map_morphism",
]
