"""Experiment configuration: a flat ``key = value`` text file.

Example::

    # compare the drivers on 20 Othello openings
    domain = othello6
    positions = 20
    algorithms = alpha_beta_tt, aspiration_negascout, mtd_sss, mtd_dual, mtd_f
    depth = 6
    tt_log2 = 18
    output = compare.csv

Keys:

``domain``       domain spec (``fixture``, ``tictactoe``, ``othello6``,
                 ``synth:w=3,d=5,...``, ``tree:<file>``)
``positions``    Othello only: run on the first N seeded openings
``suite_seed``   seed of the opening suite (default 1)
``seeds``        synth only: list of tree seeds
``algorithms``   comma-separated registered names
``depth``        maximum iterative-deepening depth
``step``         deepening step, 1 or 2
``tt_log2``      table size(s); a list or range ``6..18`` for sweeps
``replacement``  ``deep`` (default) or ``always``
``delta``        aspiration half-width
``stepsize``     MTD(step) step
``output``       CSV path (optional)

Lists are comma-separated; ``a..b`` expands to every integer in between.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .registry import ALGORITHMS


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    domain: str = "fixture"
    algorithms: list[str] = field(default_factory=lambda: ["alpha_beta_tt"])
    depth: int = 4
    tt_log2: list[int] = field(default_factory=lambda: [20])
    seeds: list[int] = field(default_factory=list)
    positions: int = 0
    suite_seed: int = 1
    step: int = 1
    replacement: str = "deep"
    delta: int | None = None
    stepsize: int | None = None
    output: str | None = None

    def validate(self):
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {a!r}")
        for k in self.tt_log2:
            if not 6 <= k <= 26:
                raise ConfigError(f"tt_log2 {k} outside [6, 26]")
        if not self.tt_log2:
            raise ConfigError("tt_log2 list is empty")
        if self.depth < 1 or self.step not in (1, 2):
            raise ConfigError("need depth >= 1 and step in {1, 2}")
        if self.replacement not in ("deep", "always"):
            raise ConfigError(f"unknown replacement {self.replacement!r}")
        return self


def int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            a, b = part.split("..")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def parse_config(text: str) -> ExperimentConfig:
    cfg = ExperimentConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key in ("domain", "output", "replacement"):
                setattr(cfg, key, value)
            elif key == "algorithms":
                cfg.algorithms = [a.strip() for a in value.split(",") if a.strip()]
            elif key in ("tt_log2", "seeds"):
                setattr(cfg, key, int_list(value))
            elif key in ("depth", "positions", "suite_seed", "step", "delta", "stepsize"):
                setattr(cfg, key, int(value))
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value {value!r} for {key}") from exc
    return cfg.validate()


def load_config(path: str) -> ExperimentConfig:
    with open(path) as fh:
        return parse_config(fh.read())
