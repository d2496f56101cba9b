"""Loaders for the JSON fixtures shipped in alexmod/data."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .arrangements import build_os_algebra, eta_from_multiplicities
from .complexes import fox_complex
from .io import (
    arrangement_from_json,
    cdga_from_json,
    complex_from_json,
    presentation_from_json,
    read_json,
)

KINDS = ("complexes", "presentations", "arrangements", "cdgas")


def data_dir() -> Path:
    return Path(str(resources.files("alexmod") / "data"))


def fixture_path(kind: str, name: str) -> Path:
    return data_dir() / kind / f"{name}.json"


def fixture_names(kind: str) -> list:
    return sorted(p.stem for p in (data_dir() / kind).glob("*.json"))


def load(kind: str, name: str):
    data, _ = read_json(fixture_path(kind, name))
    return {
        "complexes": complex_from_json,
        "presentations": presentation_from_json,
        "arrangements": arrangement_from_json,
        "cdgas": cdga_from_json,
    }[kind](data)


def fixture_complexes() -> dict:
    """Every shipped chain complex, including Fox complexes of presentations."""
    out = {f"complex:{n}": load("complexes", n) for n in fixture_names("complexes")}
    for n in fixture_names("presentations"):
        out[f"fox:{n}"] = fox_complex(load("presentations", n))
    return out


def fixture_thickenings() -> dict:
    """(CDGA, eta) pairs: OS algebras of shipped arrangements and raw CDGA files."""
    from .thickening import EtaClass

    out = {}
    for n in fixture_names("arrangements"):
        OS = build_os_algebra(load("arrangements", n))
        out[f"os:{n}"] = (OS.cdga, eta_from_multiplicities(OS))
    for n in fixture_names("cdgas"):
        K = load("cdgas", n)
        out[f"cdga:{n}"] = (K, EtaClass(tuple(1 for _ in K.in_degree(1))))
    return out


# Fox presentations and arrangements describing the same complement, used
# for the chain-side versus thickening-side comparison.
PAIRED = {
    "points3": "free3",
    "points4": "free4",
    "points5": "free5",
    "points6": "free6",
    "concurrent3": "concurrent3",
    "concurrent4": "concurrent4",
    "concurrent3_eps211": "concurrent3_eps211",
    "generic3": "generic3",
}
