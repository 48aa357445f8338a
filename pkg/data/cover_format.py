"""Plain-text cover files.

One path per line as comma-separated vertex indices; a closed path repeats
its terminal vertex at the end.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import logging
from pathlib import Path

from pydantic import ValidationError

from core.errors import CoverError
from core.models import GraphoidalCover, GraphoidalPath

logger = logging.getLogger(__name__)


def parse_cover(text: str) -> GraphoidalCover:
    """Parse cover text into a GraphoidalCover (path order = line order).

    Raises:
        CoverError: On a non-integer token or a path that repeats vertices.
    """
    paths: list[GraphoidalPath] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            vertices = tuple(int(tok) for tok in content.split(","))
        except ValueError as e:
            raise CoverError(f"Line {lineno}: cannot parse {content!r}: {e}") from e
        try:
            paths.append(GraphoidalPath(vertices=vertices))
        except ValidationError as e:
            raise CoverError(f"Line {lineno}: {e.errors()[0]['msg']}") from e
    return GraphoidalCover(paths=tuple(paths))


def format_cover(cover: GraphoidalCover) -> str:
    return "".join(",".join(str(v) for v in p.vertices) + "\n" for p in cover.paths)


def read_cover_file(path: Path) -> GraphoidalCover:
    cover = parse_cover(Path(path).read_text())
    logger.info("Read cover with %d paths from %s", cover.size, path)
    return cover


def write_cover_file(cover: GraphoidalCover, path: Path) -> None:
    Path(path).write_text(format_cover(cover))
