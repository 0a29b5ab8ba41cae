from .coset_table import CosetTable, TableStatus  # noqa
from .enumeration import EnumLimits, element_order, group_order, presentation_order  # noqa
