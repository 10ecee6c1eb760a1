"""Pursuit-attraction engine for simple polygonal tracks."""

from .track import (
    Configuration,
    DegenerateGeometry,
    HumanParam,
    NotSimple,
    ParseError,
    PuppyError,
    PuppyParam,
    Tag,
    Track,
    classify,
    dump_track,
    load_track,
    min_feature_distance,
    puppy_direction,
    puppy_position,
)

__all__ = [
    "Configuration",
    "DegenerateGeometry",
    "HumanParam",
    "NotSimple",
    "ParseError",
    "PuppyError",
    "PuppyParam",
    "Tag",
    "Track",
    "classify",
    "dump_track",
    "load_track",
    "min_feature_distance",
    "puppy_direction",
    "puppy_position",
]

__version__ = "0.1.0"
