import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

import orjson

from config.config import CORPUS_DIR
from models.model import ComplexModel, ConfigurationModel, CorpusEntry, Manifest, PolytopeModel
from utils.betti import betti_of_polytope_via_gale_links, betti_via_links, has_linear_resolution, hochster_betti
from utils.buchstaber import s_equals_one, s_real_exact
from utils.complex_core import SimplicialComplex, alexander_dual, members
from utils.errors import InputError
from utils.exact_linalg import format_rational
from utils.gale import (
    PointConfiguration,
    constellation_complex,
    covers_sphere,
    gale_diagram,
    is_good,
    is_nondegenerate,
    sphere_property_violations,
    verify_gale_alexander,
)
from utils.polytope import Polytope, f_nl, is_k_neighborly, is_pyramid, polytope_f_vector
from utils.serialization import load_model, to_complex, to_configuration, to_polytope, write_json

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"


@dataclass(frozen=True)
class LoadedEntry:
    name: str
    polytope: Polytope | None
    configuration: PointConfiguration | None
    complex: SimplicialComplex | None


def corpus_path(corpus_dir: str | Path | None = None) -> Path:
    return Path(corpus_dir or CORPUS_DIR)


def load_manifest(corpus_dir: str | Path | None = None) -> Manifest:
    return load_model(corpus_path(corpus_dir) / MANIFEST, Manifest)


def load_entry(entry: CorpusEntry, corpus_dir: str | Path | None = None) -> LoadedEntry:
    base = corpus_path(corpus_dir)
    polytope = to_polytope(load_model(base / entry.polytope, PolytopeModel)) if entry.polytope else None
    configuration = (
        to_configuration(load_model(base / entry.configuration, ConfigurationModel)) if entry.configuration else None
    )
    complex_ = to_complex(load_model(base / entry.complex, ComplexModel)) if entry.complex else None
    return LoadedEntry(entry.name, polytope, configuration, complex_)


def load_polytopes(corpus_dir: str | Path | None = None) -> list[tuple[str, Polytope]]:
    out = []
    for entry in load_manifest(corpus_dir).entries:
        if entry.polytope and not entry.configuration:
            out.append((entry.name, load_entry(entry, corpus_dir).polytope))
    return out


def _table_rows(entries: dict) -> list[list[int]]:
    return [[i, deg, value] for (i, deg), value in sorted(entries.items())]


def _needs(value, what: str, name: str):
    if value is None:
        raise InputError(f"corpus entry {name!r} has no {what}")
    return value


def _polytope(e: LoadedEntry) -> Polytope:
    return _needs(e.polytope, "polytope", e.name)


def _configuration(e: LoadedEntry) -> PointConfiguration:
    return _needs(e.configuration, "configuration", e.name)


def _complex(e: LoadedEntry) -> SimplicialComplex:
    return _needs(e.complex, "complex", e.name)


def _betti_links_match(e: LoadedEntry) -> bool:
    k = _complex(e)
    return betti_via_links(k).entries == hochster_betti(alexander_dual(k)).entries


def _linear(e: LoadedEntry) -> bool:
    x = _configuration(e)
    return has_linear_resolution(hochster_betti(constellation_complex(x)), x.r)


EXPECTATIONS: dict[str, Callable[[LoadedEntry], Any]] = {
    "facet_count": lambda e: len(_polytope(e).facets),
    "f_vector": lambda e: polytope_f_vector(_polytope(e)),
    "f_nl": lambda e: [[n, l, c] for (n, l), c in f_nl(_polytope(e)).items()],
    "pyramid_apex": lambda e: is_pyramid(_polytope(e)),
    "gale_points": lambda e: [[format_rational(c) for c in p] for p in gale_diagram(_polytope(e)).points],
    "gale_alexander": lambda e: verify_gale_alexander(_polytope(e)),
    "s_equals_one": lambda e: s_equals_one(_polytope(e)).s_is_one,
    "neighborly_2": lambda e: is_k_neighborly(_polytope(e), 2),
    "covers_sphere": lambda e: covers_sphere(_configuration(e)),
    "good": lambda e: is_good(_configuration(e)),
    "nondegenerate": lambda e: is_nondegenerate(_configuration(e)),
    "betti": lambda e: _table_rows(hochster_betti(constellation_complex(_configuration(e))).entries),
    "linear_resolution": _linear,
    "polytope_betti": lambda e: _table_rows(betti_of_polytope_via_gale_links(_configuration(e)).entries),
    "sphere_violations": lambda e: [list(members(v)) for v in sphere_property_violations(_configuration(e))],
    "s_real": lambda e: s_real_exact(_complex(e)).value,
    "betti_via_links_matches": _betti_links_match,
}


def compute_expectation(key: str, entry: LoadedEntry):
    if key not in EXPECTATIONS:
        raise InputError(f"unknown expectation {key!r} in corpus entry {entry.name!r}")
    # normalise tuples and keys the way the manifest stores them
    return orjson.loads(orjson.dumps(EXPECTATIONS[key](entry)))


def check_entry(entry: CorpusEntry, corpus_dir: str | Path | None = None) -> list[str]:
    loaded = load_entry(entry, corpus_dir)
    failures = []
    for key, expectation in entry.expected.items():
        actual = compute_expectation(key, loaded)
        if actual != expectation.value:
            failures.append(f"{entry.name}.{key} [{expectation.provenance}]: expected {expectation.value}, got {actual}")
    return failures


def regen_oracles(corpus_dir: str | Path | None = None) -> int:
    """Recompute every DERIVED expectation and rewrite the manifest; returns how many changed."""
    manifest = load_manifest(corpus_dir)
    changed = 0
    for entry in manifest.entries:
        loaded = load_entry(entry, corpus_dir)
        for key, expectation in entry.expected.items():
            if expectation.provenance != "DERIVED":
                continue
            actual = compute_expectation(key, loaded)
            if actual != expectation.value:
                logger.warning(f"{entry.name}.{key}: {expectation.value} -> {actual}")
                expectation.value = actual
                changed += 1
    if changed:
        write_json(corpus_path(corpus_dir) / MANIFEST, manifest, exclude_none=False)
    logger.info(f"regenerated derived oracles, {changed} changed")
    return changed
