"""Run configuration: quiver, coefficient algebra and name aliases.

Example::

    [quiver]
    vertices = 3
    arrow a = 1 -> 2
    arrow b = 2 -> 3

    [coefficients]
    type = truncated_polynomial
    t = 2

    [aliases]
    M = Ind(S2)

For ``type = structure_constants`` give ``dim = d`` and one line per
nonzero product, ``product i j = k:c, k:c``; basis element 0 is the unit
and its products are filled in automatically.
"""
from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from gmpy2 import mpq

from .algebra import LocalCoefficientAlgebra, Quiver


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    quiver: Quiver
    coefficients: Optional[LocalCoefficientAlgebra]
    aliases: dict = field(default_factory=dict)
    source: str = ""


_ARROW = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*$")
_PRODUCT = re.compile(r"^product\s+(\d+)\s+(\d+)$")


def parse_config(text: str, source: str = "<string>") -> RunConfig:
    cp = configparser.ConfigParser(delimiters=("=",), comment_prefixes=("#", ";"),
                                   inline_comment_prefixes=("#",))
    cp.optionxform = str  # keep case of arrow and alias names
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from exc
    if "quiver" not in cp:
        raise ConfigError(f"{source}: missing [quiver] section")
    q = cp["quiver"]
    try:
        n = int(q["vertices"])
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"{source}: [quiver] needs an integer 'vertices'") from exc
    if n < 1:
        raise ConfigError(f"{source}: vertices must be positive")
    edges = []
    for key, value in q.items():
        if key == "vertices":
            continue
        parts = key.split()
        if len(parts) != 2 or parts[0] != "arrow":
            raise ConfigError(f"{source}: unrecognised [quiver] entry '{key}'")
        m = _ARROW.match(value)
        if not m:
            raise ConfigError(f"{source}: arrow '{parts[1]}' must look like 'i -> j'")
        s, t = int(m.group(1)), int(m.group(2))
        if not (1 <= s <= n and 1 <= t <= n):
            raise ConfigError(f"{source}: arrow '{parts[1]}' has a vertex outside 1..{n}")
        edges.append((parts[1], s - 1, t - 1))
    quiver = Quiver.from_edges(n, edges)
    coeffs = None
    if "coefficients" in cp:
        coeffs = _parse_coefficients(cp["coefficients"], source)
    aliases = dict(cp["aliases"].items()) if "aliases" in cp else {}
    return RunConfig(quiver, coeffs, aliases, source)


def _parse_coefficients(sec, source: str) -> LocalCoefficientAlgebra:
    kind = sec.get("type", "truncated_polynomial").strip()
    if kind == "truncated_polynomial":
        try:
            t = int(sec["t"])
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"{source}: truncated_polynomial needs an integer 't'") from exc
        if t < 1:
            raise ConfigError(f"{source}: t must be at least 1")
        return LocalCoefficientAlgebra.truncated_polynomial(t)
    if kind == "structure_constants":
        try:
            d = int(sec["dim"])
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"{source}: structure_constants needs an integer 'dim'") from exc
        consts = [[[mpq(0)] * d for _ in range(d)] for _ in range(d)]
        for j in range(d):
            consts[0][j][j] = consts[j][0][j] = mpq(1)
        for key, value in sec.items():
            if key in ("type", "dim"):
                continue
            m = _PRODUCT.match(key)
            if not m:
                raise ConfigError(f"{source}: unrecognised [coefficients] entry '{key}'")
            i, j = int(m.group(1)), int(m.group(2))
            if not (0 <= i < d and 0 <= j < d):
                raise ConfigError(f"{source}: product index out of range in '{key}'")
            row = [mpq(0)] * d
            for term in filter(None, (x.strip() for x in value.split(","))):
                k, _, c = term.partition(":")
                row[int(k)] += mpq(c or 1)
            consts[i][j] = row
        try:
            return LocalCoefficientAlgebra.from_dense(consts)
        except (ValueError, AssertionError) as exc:
            raise ConfigError(f"{source}: {exc}") from exc
    raise ConfigError(f"{source}: unknown coefficient type '{kind}'")


def load_config(path) -> RunConfig:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {p}: {exc}") from exc
    return parse_config(text, str(p))
