"""Configuration file parsing.

The format is a flat key-value file with sections:

    [algebra]
    name = A_F              # A_F | B_F | A_ev

    [grading]
    kind = nonstandard      # standard | nonstandard | none

    [dirac]
    type = CC               # zero | CC | CC_plus_Gamma | custom
    ups_nu = [1.1, 0.0]     # complex values as [re, im]
    delta = 1.2             # real values as plain numbers
    gamma = 0.8             # only for CC_plus_Gamma
    matrix_file = d.json    # only for custom: 32x32 array of [re, im] pairs

    [run]
    tol = 1e-9

An empty or missing [dirac] section selects the zero Dirac operator.  Every
error carries the offending line number.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .catalog import DiracParams, TripleConfig

_SECTIONS = ("algebra", "grading", "dirac", "run")
_COMPLEX_KEYS = ("ups_nu", "ups_e", "ups_u", "ups_d", "ups_R", "omega")
_REAL_KEYS = ("delta", "gamma")


class ConfigError(ValueError):
    """Malformed configuration; message carries the line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _parse_sections(text):
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ConfigError(lineno, f"unknown section [{name}]")
            if name in sections:
                raise ConfigError(lineno, f"duplicate section [{name}]")
            sections[name] = {}
            current = name
            continue
        if current is None:
            raise ConfigError(lineno, "key-value pair before any section header")
        if "=" not in line:
            raise ConfigError(lineno, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(lineno, "empty key")
        if key in sections[current]:
            raise ConfigError(lineno, f"duplicate key {key!r} in [{current}]")
        sections[current][key] = (lineno, value)
    return sections


def _parse_complex(lineno, value):
    try:
        pair = json.loads(value)
    except json.JSONDecodeError as exc:
        raise ConfigError(lineno, f"malformed complex value {value!r}: {exc.msg}") from None
    if (not isinstance(pair, list) or len(pair) != 2
            or not all(isinstance(x, (int, float)) for x in pair)):
        raise ConfigError(lineno, f"complex value must be [re, im], got {value!r}")
    return complex(pair[0], pair[1])


def _parse_real(lineno, value):
    try:
        return float(value)
    except ValueError:
        raise ConfigError(lineno, f"malformed number {value!r}") from None


def _load_custom_matrix(lineno, path):
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(lineno, f"cannot read matrix file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(lineno, f"matrix file {path} is not valid JSON: {exc.msg}") from None
    arr = np.asarray(data, dtype=float)
    if arr.shape != (32, 32, 2):
        raise ConfigError(lineno, f"matrix file must hold a 32x32 array of [re, im] pairs, "
                                  f"got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def parse_config(text, base_dir=None):
    """Parse a configuration file into a TripleConfig."""
    sections = _parse_sections(text)

    algebra_section = sections.get("algebra", {})
    for key in algebra_section:
        if key != "name":
            raise ConfigError(algebra_section[key][0], f"unknown key {key!r} in [algebra]")
    if "name" not in algebra_section:
        raise ConfigError(0, "missing [algebra] name")
    lineno, algebra = algebra_section["name"]
    if algebra not in ("A_F", "B_F", "A_ev"):
        raise ConfigError(lineno, f"unknown algebra {algebra!r} (expected A_F, B_F or A_ev)")

    grading_section = sections.get("grading", {})
    for key in grading_section:
        if key != "kind":
            raise ConfigError(grading_section[key][0], f"unknown key {key!r} in [grading]")
    grading = "none"
    grading_line = 0
    if "kind" in grading_section:
        grading_line, grading = grading_section["kind"]
        if grading not in ("standard", "nonstandard", "none"):
            raise ConfigError(grading_line, f"unknown grading {grading!r}")

    dirac_section = dict(sections.get("dirac", {}))
    if "type" in dirac_section:
        type_line, dirac_kind = dirac_section.pop("type")
    elif dirac_section:
        first = min(line for line, _ in dirac_section.values())
        raise ConfigError(first, "dirac section has parameters but no type")
    else:
        type_line, dirac_kind = 0, "zero"
    if dirac_kind not in ("zero", "CC", "CC_plus_Gamma", "custom"):
        raise ConfigError(type_line, f"unknown dirac type {dirac_kind!r}")

    params_kwargs = {}
    custom_matrix = None
    for key, (lineno, value) in dirac_section.items():
        if key == "matrix_file":
            if dirac_kind != "custom":
                raise ConfigError(lineno, "matrix_file requires dirac type custom")
            base = Path(base_dir) if base_dir is not None else Path(".")
            custom_matrix = _load_custom_matrix(lineno, base / value)
        elif key in _COMPLEX_KEYS:
            if dirac_kind not in ("CC", "CC_plus_Gamma"):
                raise ConfigError(lineno, f"{key} requires dirac type CC or CC_plus_Gamma")
            params_kwargs[key.lower()] = _parse_complex(lineno, value)
        elif key in _REAL_KEYS:
            if key == "gamma" and dirac_kind != "CC_plus_Gamma":
                raise ConfigError(lineno, "gamma requires dirac type CC_plus_Gamma")
            if dirac_kind not in ("CC", "CC_plus_Gamma"):
                raise ConfigError(lineno, f"{key} requires dirac type CC or CC_plus_Gamma")
            params_kwargs[key] = _parse_real(lineno, value)
        else:
            raise ConfigError(lineno, f"unknown key {key!r} in [dirac]")
    if dirac_kind == "custom" and custom_matrix is None:
        raise ConfigError(type_line, "dirac type custom requires matrix_file")

    run_section = sections.get("run", {})
    tol = 1e-9
    for key, (lineno, value) in run_section.items():
        if key != "tol":
            raise ConfigError(lineno, f"unknown key {key!r} in [run]")
        tol = _parse_real(lineno, value)
        if not (0 < tol < 1):
            raise ConfigError(lineno, f"tol must be in (0, 1), got {value}")

    try:
        return TripleConfig(
            algebra=algebra,
            grading=grading,
            dirac=dirac_kind,
            params=DiracParams(**params_kwargs),
            custom_matrix=custom_matrix,
            tol=tol,
        )
    except ValueError as exc:
        raise ConfigError(grading_line or 0, str(exc)) from None


def parse_config_file(path):
    path = Path(path)
    return parse_config(path.read_text(), base_dir=path.parent)
