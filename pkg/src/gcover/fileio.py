"""JSON readers for groups, complexes, actions and generating vectors.

Structural problems (bad JSON, missing keys, wrong types) raise ParseError.
Files referenced from an action file are resolved relative to it.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .complex import SComplex, from_maximal
from .errors import ParseError
from .gcomplex import GComplex, build_action
from .group import PermGroup, close_generators
from .surface import BranchingData, GeneratingVector


class Loaded:
    """Parsed JSON with the sha256 digests of every file read for it."""

    def __init__(self):
        self.digests: dict[str, str] = {}

    def read(self, path: str | Path) -> Any:
        p = Path(path)
        try:
            raw = p.read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read {p}: {exc.strerror}", path=str(p)) from None
        self.digests[str(p)] = hashlib.sha256(raw).hexdigest()
        try:
            return json.loads(raw)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise ParseError(f"{p} is not valid JSON: {exc}", path=str(p)) from None


def _field(d: Any, key: str, kind, where: str):
    if not isinstance(d, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if key not in d:
        raise ParseError(f"{where}: missing field '{key}'", field=key)
    value = d[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{where}: field '{key}' has the wrong type", field=key)
    return value


def _int_lists(value, where: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(
            isinstance(x, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in x)
            for x in value):
        raise ParseError(f"{where}: expected a list of integer lists")
    return value


def group_from_json(d: Any, cap: int | None = None) -> PermGroup:
    degree = _field(d, "degree", int, "group")
    gens = _int_lists(_field(d, "generators", list, "group"), "group generators")
    name = d.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("group: 'name' must be a string")
    return close_generators(degree, gens, name=name, cap=cap)


def complex_from_json(d: Any) -> SComplex:
    n = _field(d, "num_vertices", int, "complex")
    tops = _int_lists(_field(d, "maximal_simplices", list, "complex"), "complex simplices")
    return from_maximal(n, tops)


def _resolve(value, base: Path, loader: Loaded, what: str):
    if isinstance(value, str):
        return loader.read(base / value)
    if isinstance(value, dict):
        return value
    raise ParseError(f"action: '{what}' must be a file name or an inline object")


def action_from_json(d: Any, base: Path, loader: Loaded, cap: int | None = None) -> GComplex:
    if not isinstance(d, dict):
        raise ParseError("action: expected a JSON object")
    for key in ("complex", "group", "generator_vertex_images"):
        if key not in d:
            raise ParseError(f"action: missing field '{key}'", field=key)
    K = complex_from_json(_resolve(d["complex"], base, loader, "complex"))
    G = group_from_json(_resolve(d["group"], base, loader, "group"), cap)
    images = _int_lists(d["generator_vertex_images"], "action generator_vertex_images")
    return build_action(K, G, images)


def load_action(path: str | Path, loader: Loaded, cap: int | None = None) -> GComplex:
    p = Path(path)
    return action_from_json(loader.read(p), p.parent, loader, cap)


def load_group(path: str | Path, loader: Loaded, cap: int | None = None) -> PermGroup:
    return group_from_json(loader.read(path), cap)


def load_surface(path: str | Path, loader: Loaded) -> tuple[SComplex, list[int]]:
    """A complex file, optionally carrying ``branch_vertices``."""
    d = loader.read(path)
    K = complex_from_json(d)
    branch = d.get("branch_vertices", [])
    if not isinstance(branch, list) or not all(isinstance(v, int) for v in branch):
        raise ParseError("'branch_vertices' must be a list of integers")
    return K, branch


def gv_from_json(d: Any, G: PermGroup) -> GeneratingVector:
    hyp = _int_lists(d.get("hyperbolic", []) if isinstance(d, dict) else None, "gv hyperbolic")
    ell = _int_lists(d.get("elliptic", []), "gv elliptic")
    return GeneratingVector.from_perms(G, hyp, ell)


def branching_from_json(d: Any) -> BranchingData:
    gp = _field(d, "g_prime", int, "branching data")
    m = _field(d, "m", int, "branching data")
    periods = d.get("periods", [])
    if not isinstance(periods, list) or not all(isinstance(x, int) for x in periods):
        raise ParseError("branching data: 'periods' must be a list of integers")
    return BranchingData(gp, m, tuple(periods))
