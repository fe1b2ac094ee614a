from cohexp.groups.base import CODE_DTYPE, FiniteGroup
from cohexp.groups.bracket_group import BracketGroup, GroupElement
from cohexp.groups.coset import CosetAction, coset_action
from cohexp.groups.permutation import (
    PermGroup,
    Permutation,
    sylow_order_valuation,
    wreath_sylow,
)
from cohexp.groups.subgroup import Subgroup, closure, intersection_of
from cohexp.groups.table_group import (
    TableGroup,
    abelian_table,
    cyclic_table,
    direct_product,
)

__all__ = [
    "CODE_DTYPE",
    "BracketGroup",
    "CosetAction",
    "FiniteGroup",
    "GroupElement",
    "PermGroup",
    "Permutation",
    "Subgroup",
    "TableGroup",
    "abelian_table",
    "closure",
    "coset_action",
    "cyclic_table",
    "direct_product",
    "intersection_of",
    "sylow_order_valuation",
    "wreath_sylow",
]
