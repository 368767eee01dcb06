"""Text formats for groups, bisets, graphs of groups, graphs of bisets and Hubbard trees."""

from .lexer import Statement, Token, parse_statements
from .reader import DocumentReader, EntryKind, ParsedEntry, read_document, read_entry
from .values import (
    format_elements,
    format_group,
    parse_element,
    parse_elements,
    parse_group,
    parse_recursion,
    parse_word,
)
from .writer import (
    emit_biset,
    emit_entries,
    emit_gob,
    emit_gog,
    emit_group,
    emit_htree,
    emit_wreath_table,
)

__all__ = [
    "DocumentReader",
    "EntryKind",
    "ParsedEntry",
    "Statement",
    "Token",
    "emit_biset",
    "emit_entries",
    "emit_gob",
    "emit_gog",
    "emit_group",
    "emit_htree",
    "emit_wreath_table",
    "format_elements",
    "format_group",
    "parse_element",
    "parse_elements",
    "parse_group",
    "parse_recursion",
    "parse_statements",
    "parse_word",
    "read_document",
    "read_entry",
]
