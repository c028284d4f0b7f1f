from __future__ import annotations
from dataclasses import dataclass, asdict, fields
from typing import TYPE_CHECKING, Any
from json import loads, dumps
from logging import getLogger
from pathlib import Path

from human_readable import listing

from .errors import UsageError

if TYPE_CHECKING:
    from typing import Self


_CONFIG_LOG: str = "Config"
DEFAULT_CONFIG_FILE = Path.home() / ".config" / "drgdist.json"


# pylint: disable=too-many-instance-attributes
@dataclass(kw_only=True, frozen=True, slots=True)
class Tolerances:
    """
    Numerical tolerances shared by every computation
    """

    certify_rel: float = 1e-9  #      Lower bound vs embedding agreement, conjecture ties
    infinity_abs: float = 1e-9  #     Denominators at or below this are treated as +inf
    separation_rel: float = 1e-7  #   Minimum eigenvalue gap, relative to k
    match_rel: float = 1e-6  #        Matching a value to a computed eigenvalue, relative to k
    residual_rel: float = 1e-9  #     Cosine recurrence residual, relative to k
    multiplicity_abs: float = 1e-6  # Distance of a multiplicity from an integer
    cluster_rel: float = 1e-6  #      Eigenvalue clustering of explicit graphs, relative to k
    max_denominator: int = 10**6  #   Rational reconstruction bound
    max_vertices: int = 2000  #       Explicit graph size cap

    def __post_init__(self):
        if bad := [i.name for i in fields(self) if getattr(self, i.name) <= 0]:
            raise UsageError(f"Tolerances must be positive: {listing(bad, ',', 'and')}")

    @classmethod
    def keys(cls) -> list[str]:
        return [i.name for i in fields(cls)]

    @classmethod
    def load(cls, cli: dict[str, Any], file: Path | None) -> Self:
        """
        Preference: CLI > Config file > Default
        """
        log = getLogger(_CONFIG_LOG)
        conf = asdict(cls())
        if file is not None and file.exists():
            log.debug("Loading config file %s", file)
            try:
                loaded = loads(file.read_text(encoding="utf-8"))
            except (OSError, ValueError) as e:
                raise UsageError(f"Cannot read config file {file}: {e}") from e
            if not isinstance(loaded, dict):
                raise UsageError(f"Config file {file} must hold a JSON object")
            if unknown := sorted(set(loaded) - set(conf)):
                raise UsageError(f"Unknown tolerance keys in {file}: {listing(unknown, ',', 'and')}")
            conf.update(loaded)
        elif file is not None:
            log.info("Config file does not exist: %s", file)
        conf.update({i: k for i, k in cli.items() if k is not None and i in conf})
        return cls(**conf)

    def __str__(self) -> str:
        return "Tolerances:\n  " + "\n  ".join(f"{i}: {k}" for i, k in asdict(self).items())

    def dumps(self) -> str:
        return dumps(asdict(self), indent=4)


TOL = Tolerances()
