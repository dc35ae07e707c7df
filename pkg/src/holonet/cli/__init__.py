from .main import build_parser, main
from .network_file import (
    NetworkDocument,
    parse_complex,
    parse_element,
    parse_group,
    parse_loops,
    parse_network,
    serialize_complex,
    serialize_network,
    write_text_atomic,
)

__all__ = [
    "NetworkDocument",
    "build_parser",
    "main",
    "parse_complex",
    "parse_element",
    "parse_group",
    "parse_loops",
    "parse_network",
    "serialize_complex",
    "serialize_network",
    "write_text_atomic",
]
