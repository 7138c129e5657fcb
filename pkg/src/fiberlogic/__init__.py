"""Categorical semantics for first-order logics over prop-categories.

Subpackages and modules: ``syntax`` (signatures, terms, formulas),
``calculus`` (proof rules, checking and search), ``propcat`` (hosts and the
axiom checker), ``semantics`` (structures and satisfaction), ``fibered``
(morphisms, kernels, translations) and ``cli`` (file formats and commands).
"""

__version__ = "0.1.0"
