"""Utility modules for the Fujiki orbifold toolkit."""

from utils.cache_decorator import cache_computation, configure_cache, get_cache
from utils.formatting import FORMATS, TABLE_COLUMNS, markdown_cell, records_frame, render_records

__all__ = [
    'cache_computation', 'configure_cache', 'get_cache',
    'FORMATS', 'TABLE_COLUMNS', 'markdown_cell', 'records_frame', 'render_records',
]
