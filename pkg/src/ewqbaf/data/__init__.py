"""Bundled example graphs."""

from importlib import resources

from ..model import Qbaf, parse_qbaf


def movie_fixture_bytes() -> bytes:
    """Raw document of the bundled movie-recommendation example graph."""
    return resources.files(__package__).joinpath("movie.qbaf").read_bytes()


def movie_qbaf() -> Qbaf:
    """The bundled movie-recommendation example graph (8 arguments, 7 edges)."""
    return parse_qbaf(movie_fixture_bytes())
