"""On-disk persistence for KL tables.

Plain text, one file per datum, versioned header, records sorted so the
file is bit-stable across runs:

    heckewb-kl-table v1
    datum <label> fingerprint <hex16> cutoff <N>
    <y-word>;<w-word>;<polynomial in q>

A corrupted, version-mismatched, or wrong-fingerprint file is ignored
with a CacheWarning, never trusted. Writes go through a temporary file
and an atomic replace, so concurrent writers are idempotent.
"""

from __future__ import annotations

import os
import tempfile
import warnings
from pathlib import Path

from .errors import CacheWarning
from .ring import format_laurent, parse_laurent
from .rootdata import RootDatum

__all__ = ["kl_cache_path", "save_kl_table", "load_kl_table"]

_FORMAT = "heckewb-kl-table v1"


def kl_cache_path(cache_dir, datum: RootDatum) -> Path:
    return Path(cache_dir) / f"kl_{datum.label}.txt"


def save_kl_table(cache_dir, table) -> Path | None:
    """Write the table; returns the path, or None when the directory is
    unusable (warned, computation continues in memory)."""
    path = kl_cache_path(cache_dir, table.datum)
    lines = [_FORMAT,
             f"datum {table.datum.label} "
             f"fingerprint {table.datum.fingerprint} "
             f"cutoff {table.cutoff}"]
    for ykey, wkey, poly in table.records():
        lines.append(f"{ykey};{wkey};{format_laurent(poly)}")
    body = "\n".join(lines) + "\n"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(path.parent),
                                   prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(body)
            os.replace(tmp, path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
    except OSError as exc:
        warnings.warn(f"KL cache not written ({exc}); continuing in memory",
                      CacheWarning, stacklevel=2)
        return None
    return path


def load_kl_table(cache_dir, datum: RootDatum):
    """Load a stored table; None on any mismatch or damage (warned)."""
    from . import weyl
    from .kl import KLTable

    path = kl_cache_path(cache_dir, datum)
    if not path.exists():
        return None
    try:
        text = path.read_text()
    except OSError as exc:
        warnings.warn(f"KL cache unreadable ({exc}); ignoring",
                      CacheWarning, stacklevel=2)
        return None
    lines = text.splitlines()
    if not lines or lines[0] != _FORMAT:
        warnings.warn(f"KL cache {path} has unknown format; ignoring",
                      CacheWarning, stacklevel=2)
        return None
    head = lines[1].split() if len(lines) > 1 else []
    if (len(head) != 6 or head[0] != "datum" or head[2] != "fingerprint"
            or head[4] != "cutoff"):
        warnings.warn(f"KL cache {path} has a damaged header; ignoring",
                      CacheWarning, stacklevel=2)
        return None
    if head[1] != datum.label or head[3] != datum.fingerprint:
        warnings.warn(
            f"KL cache {path} was written for a different datum; ignoring",
            CacheWarning, stacklevel=2)
        return None
    try:
        cutoff = int(head[5])
        table = KLTable(datum)
        table.shells = weyl.elements_up_to_length(datum, cutoff)
        ok = {w for shell in table.shells for w in shell}
        polys: dict = {}
        for line in lines[2:]:
            if not line.strip():
                continue
            ykey, wkey, ptext = line.split(";")
            y = _from_key(datum, ykey)
            w = _from_key(datum, wkey)
            if y not in ok or w not in ok:
                raise ValueError(f"record outside cutoff: {line!r}")
            polys.setdefault(w, {})[y] = parse_laurent(ptext)
        from .hecke import HeckeElement
        for shell in table.shells:
            for w in shell:
                terms = {}
                for y, p in polys.get(w, {}).items():
                    terms[y] = p.shift(-w.length())
                if not terms:
                    raise ValueError(f"missing record for {w}")
                table.cp[w] = HeckeElement(datum, terms)
        table.cutoff = cutoff
    except (ValueError, KeyError) as exc:
        warnings.warn(f"KL cache {path} is corrupted ({exc}); ignoring",
                      CacheWarning, stacklevel=2)
        return None
    return table


def _from_key(datum: RootDatum, key: str):
    from . import weyl

    if key == "e":
        return weyl.identity(datum)
    letters = [int(tok[1:]) for tok in key.split(".")]
    return weyl.from_word(datum, 0, letters)
