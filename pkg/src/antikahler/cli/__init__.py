from .textio import (
    StructureFileError,
    StructureSyntaxError,
    format_structure,
    parse_structure,
)

__all__ = [
    "StructureFileError",
    "StructureSyntaxError",
    "format_structure",
    "parse_structure",
]
