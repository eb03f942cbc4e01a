from ._kvpoly import (
    Diagram,
    Move,
    ParseError,
    Scalar,
    kv_oriented,
    kv_singular,
    kv_unoriented,
    oracles,
    random_diagram,
    reduce_web,
    twist_closure,
    twist_closure_unoriented,
    unknot,
)

__all__ = [
    "Diagram",
    "Move",
    "ParseError",
    "Scalar",
    "kv_oriented",
    "kv_singular",
    "kv_unoriented",
    "oracles",
    "random_diagram",
    "reduce_web",
    "twist_closure",
    "twist_closure_unoriented",
    "unknot",
]
