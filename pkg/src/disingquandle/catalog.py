"""The eighteen two-component singular links, stored as relation systems.

Each system is transcribed equation by equation; the bare ``*`` is read as
``*1``. Variables are ordered by first occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .links import RelationSystem, parse_relation_dsl

__all__ = ["CatalogEntry", "LINK_NAMES", "catalog", "get_link"]

_SYSTEMS: dict[str, str] = {
    "1_1^2": "R1(x,y)*R2(x,y)=y; R2(x,y)=x",
    "3_1^2": "z*R1(x,y)=R2(x,y); y*z=R1(x,y); x*y=z",
    "4_1^2": "y*R1(x,y)=z; R2(x,y)*z=w; x*y=w; R1(x,y)*w=z",
    "5_1^2": "x*y=v; y*v=z; v*z=u; z*u=R1(x,y); u*R1(x,y)=R2(x,y)",
    "5_2^2": "u*y=z; y*u=v; x*v=u; v*z=R1(x,y); z*R1(x,y)=R2(x,y)",
    "5_3^2": "x*y=z; z*u=R2(x,y); v*z=u; u*v=R1(x,y); y*R1(x,y)=v",
    "6_1^2": "R1(x,y)*v=w; z*R1(x,y)=R2(x,y); x*z=v; u*w=v; w*u=y; z*y=u",
    "6_2^2": "v*u=R1(x,y); x*v=u; u*x=z; v*z=w; R2(x,y)*w=z; w*R2(x,y)=y",
    "6_3^2": "w*R1(x,y)=R2(x,y); u*y=R1(x,y); u*z=v; v*w=y; w*u=z; z*v=x",
    "6_4^2": "u*z=R2(x,y); y*u=z; v*R2(x,y)=u; R1(x,y)*v=w; v*w=x; w*x=z",
    "6_5^2": "w*R2(x,y)=u; z*w=R2(x,y); v*u=w; R1(x,y)*z=u; z*v=x; v*x=y",
    "6_6^2": "R2(x,y)*v=z; u*z=v; w*u=v; u*w=R1(x,y); y*R1(x,y)=w; x*y=z",
    "6_7^2": "R1(x,y)*R2(x,y)=z; v*z=w; z*w=u; w*u=y; x*v=R2(x,y); v*x=u",
    "6_8^2": "w*u=R1(x,y); v*w=u; u*v=z; w*R2(x,y)=z; R2(x,y)*z=x; v*x=y",
    "6_9^2": "u*R1(x,y)=v; w*u=x; w*v=R2(x,y); z*w=R1(x,y); y*z=v; u*y=z",
    "6_10^2": "u*R1(x,y)=v; R1(x,y)*v=w; v*w=y; u*x=w; x*u=z; z*R1(x,y)=R2(x,y)",
    "6_11^2": "w*x=y; u*x=z; v*w=u; x*z=R2(x,y); w*z=v; v*z=R1(x,y)",
    "6_12^2": "z*w=R2(x,y); y*z=w; u*R2(x,y)=z; v*R1(x,y)=u; w*v=R1(x,y); x*w=v",
}

LINK_NAMES = tuple(_SYSTEMS)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    system: RelationSystem
    component_labels: dict[str, int] | None = field(default=None, hash=False, compare=False)


def _entry(name: str) -> CatalogEntry:
    text = "\n".join(part.strip() for part in _SYSTEMS[name].split(";"))
    return CatalogEntry(name, parse_relation_dsl(text, name=name))


def catalog() -> list[CatalogEntry]:
    return [_entry(name) for name in LINK_NAMES]


def get_link(name: str) -> CatalogEntry:
    """Look up a catalog link; accepts ``6_12^2`` as well as ``6_12``."""
    key = name if name in _SYSTEMS else f"{name}^2"
    if key not in _SYSTEMS:
        raise KeyError(f"unknown link {name!r}; known links: {', '.join(LINK_NAMES)}")
    return _entry(key)
