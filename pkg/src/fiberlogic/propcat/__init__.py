from .builtins import (
    LatticePropCategory,
    PowersetPropCategory,
    TablePropCategory,
    ValueAlgebra,
    algebra_from_tables,
    boolean,
    chain,
    mk_fuzzy_propcat,
    mk_lattice_propcat,
    mk_powerset_propcat,
    spec_atleast,
    spec_exactly,
    spec_exists,
    spec_forall,
    unit_interval,
    TNORMS,
)
from .category import Category, CategoryError, Fn, ProductCategory, SetCategory, SubCategory, TableCategory
from .check import CheckReport, Violation, check_fa
from .core import Fiber, PropCategory, PropCatError
from .product import ProductPropCategory

__all__ = [
    "Category", "CategoryError", "CheckReport", "Fiber", "Fn", "LatticePropCategory",
    "PowersetPropCategory", "ProductCategory", "ProductPropCategory", "PropCatError", "PropCategory",
    "SetCategory", "SubCategory", "TNORMS", "TableCategory", "TablePropCategory", "ValueAlgebra",
    "Violation", "algebra_from_tables", "boolean", "chain", "check_fa", "mk_fuzzy_propcat",
    "mk_lattice_propcat", "mk_powerset_propcat", "spec_atleast", "spec_exactly", "spec_exists",
    "spec_forall", "unit_interval",
]
