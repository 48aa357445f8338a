"""Named-graph catalog: parametric families plus the fixed graphs in
config/catalog.yaml (Petersen, octahedron, the nine Beineke graphs)."""

from __future__ import annotations

import logging
import re
from collections.abc import Callable
from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel, ValidationError

from config.settings import settings
from core import families
from core.errors import CatalogError, GraphArgumentError
from core.models import Graph

logger = logging.getLogger(__name__)

_CALL = re.compile(r"^(?P<family>[a-z_]+)\((?P<args>[0-9,\s]*)\)$")

# family name -> (constructor taking the argument list, arity or None, order formula)
_FAMILIES: dict[str, tuple[Callable[[list[int]], Graph], int | None, str]] = {
    "complete": (lambda a: families.complete(a[0]), 1, "n"),
    "path": (lambda a: families.path(a[0]), 1, "n"),
    "cycle": (lambda a: families.cycle(a[0]), 1, "n"),
    "star": (lambda a: families.star(a[0]), 1, "n+1"),
    "complete_bipartite": (lambda a: families.complete_bipartite(a[0], a[1]), 2, "p+q"),
    "spider": (families.spider, None, "1+sum(legs)"),
}
_FAMILY_SIGNATURES = {
    "complete": "complete(n)",
    "path": "path(n)",
    "cycle": "cycle(n)",
    "star": "star(n)",
    "complete_bipartite": "complete_bipartite(p,q)",
    "spider": "spider(l1,l2,...)",
}


class CatalogEntry(BaseModel):
    """One line of the catalog listing."""

    name: str
    order: int | str
    description: str


@lru_cache(maxsize=4)
def _load_named(path: Path) -> dict[str, tuple[Graph, str]]:
    if not path.exists():
        logger.warning("Catalog file not found: %s", path)
        return {}
    with open(path) as f:
        raw = yaml.safe_load(f) or {}
    out: dict[str, tuple[Graph, str]] = {}
    for name, spec in raw.items():
        try:
            g = Graph(order=spec["order"], edges=[tuple(e) for e in spec["edges"]])
        except (KeyError, TypeError, ValidationError) as e:
            raise CatalogError(f"Malformed catalog entry {name!r}: {e}", sorted(raw)) from e
        out[name] = (g, spec.get("description", ""))
    return out


def named_graphs() -> dict[str, Graph]:
    return {k: g for k, (g, _) in _load_named(Path(settings.catalog_path)).items()}


def valid_names() -> list[str]:
    return sorted(_FAMILY_SIGNATURES.values()) + sorted(named_graphs())


def get(name: str) -> Graph:
    """Graph for a catalog name such as ``cycle(5)``, ``spider(1,2,3)`` or ``petersen``.

    Raises:
        CatalogError: If the name is unknown or its arguments do not fit.
    """
    key = name.strip()
    named = named_graphs()
    if key in named:
        return named[key]
    match = _CALL.match(key.replace(" ", ""))
    if match is None or match["family"] not in _FAMILIES:
        raise CatalogError(f"Unknown catalog name {name!r}", valid_names())
    builder, arity, _ = _FAMILIES[match["family"]]
    args = [int(a) for a in match["args"].split(",") if a]
    if (arity is not None and len(args) != arity) or not args:
        raise CatalogError(
            f"{match['family']} takes {arity or 'one or more'} arguments, got {len(args)}",
            valid_names(),
        )
    try:
        return builder(args)
    except GraphArgumentError as e:
        raise CatalogError(f"Bad arguments for {name!r}: {e}", valid_names()) from e


def list_catalog() -> list[CatalogEntry]:
    """Families first (order given as a formula), then named graphs by name."""
    entries = [
        CatalogEntry(name=_FAMILY_SIGNATURES[f], order=formula, description=f"{f} family")
        for f, (_, _, formula) in sorted(_FAMILIES.items())
    ]
    for name, (g, description) in sorted(_load_named(Path(settings.catalog_path)).items()):
        entries.append(CatalogEntry(name=name, order=g.order, description=description))
    return entries


def beineke_graphs() -> list[Graph]:
    """The nine minimal non-line graphs, beineke_1 (the claw) first."""
    named = named_graphs()
    names = sorted((k for k in named if k.startswith("beineke_")), key=lambda k: int(k[8:]))
    return [named[k] for k in names]
