"""Bundled example files: loaders for the .nla corpus."""

from __future__ import annotations

from importlib import resources

from .nlaformat import NlaDocument, parse_nla

def _root():
    return resources.files("nlacs") / "corpus"


def names() -> list[str]:
    """Corpus file stems, sorted."""
    return sorted(p.name[:-4] for p in _root().iterdir()
                  if p.name.endswith(".nla"))


def text(name: str) -> str:
    fname = name if name.endswith(".nla") else f"{name}.nla"
    return (_root() / fname).read_text(encoding="utf-8")


def load(name: str) -> NlaDocument:
    return parse_nla(text(name))
