"""Odd contact Lie superalgebras over F_p: algebras, p-characters and Kac modules."""

import json

from ._core import (
    ContactAlgebra,
    Error,
    LieSuperalgebra,
    build,
    height,
    import_json,
    is_delta_invertible,
    is_nonsingular,
    is_regular_semisimple,
    kac_dims,
    kac_irreducible,
    rank,
    run_suite_json,
    search,
    version,
)

__version__ = version


def run_suite(command, sub, **config):
    """Run a CLI suite in process.  Returns (exit_code, report dict)."""
    code, doc = run_suite_json(command, sub, json.dumps(config))
    return code, json.loads(doc)


def export(g):
    """The JSON export of an algebra as a dict."""
    lsa = g.lsa if isinstance(g, ContactAlgebra) else g
    return json.loads(lsa.to_json())


__all__ = [
    "ContactAlgebra",
    "Error",
    "LieSuperalgebra",
    "build",
    "export",
    "height",
    "import_json",
    "is_delta_invertible",
    "is_nonsingular",
    "is_regular_semisimple",
    "kac_dims",
    "kac_irreducible",
    "rank",
    "run_suite",
    "search",
]
