#!/usr/bin/env python3
"""Regenerate the committed golden reports (timing fields normalized)."""

import sys
from pathlib import Path

from fintriple.config import parse_config_file
from fintriple.report import render_json, run_all

GOLDEN_CONFIGS = ("thm2", "original_cc", "pati_salam")


def main():
    config_dir = Path(__file__).resolve().parent.parent / "configs"
    for name in GOLDEN_CONFIGS:
        cfg = parse_config_file(config_dir / f"{name}.cfg")
        text = render_json(run_all(cfg), normalize_timing=True)
        (config_dir / f"{name}.golden.json").write_text(text)
        print(f"wrote {name}.golden.json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
