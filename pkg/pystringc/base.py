"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module defines run-time configuration shared by the library and the command-line front end.

:see: https://github.com/hunyadi/pystringc
"""

import dataclasses
import enum
import json
import logging
import os
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from strong_typing.core import JsonType
from strong_typing.serialization import object_to_json

LOGGER = logging.getLogger("pystringc")

_JSON_ENCODER = json.JSONEncoder(
    ensure_ascii=False,
    check_circular=False,
    allow_nan=False,
    indent=None,
    separators=(",", ":"),
)

ENV_PREFIX = "PYSTRINGC_"


class OutputFormat(enum.Enum):
    "Determines how command results are rendered."

    TEXT = "text"
    "Human-readable report lines."

    JSON = "json"
    "A single compact JSON document."


class ConfigurationError(ValueError):
    "Raised when a configuration value is out of range."

    field: str

    def __init__(self, field: str, value: Any) -> None:
        super().__init__(value)
        self.field = field

    def __str__(self) -> str:
        return f"invalid configuration value for `{self.field}`: {self.args[0]!r}"


@dataclass(frozen=True)
class Config:
    """
    Resource limits and output options.

    :param intersection_cap: Groups up to this order are intersected by enumerating their elements.
    :param search_cap: Largest group order on which a backtrack intersection is attempted.
    :param max_degree: Largest degree accepted by exhaustive classification.
    :param workers: Number of threads used by exhaustive classification.
    :param output: Rendering of command results.
    :param recheck_prunes: Re-examine every pruned branch of a classification on at most six points and fail if a
        string C-group was cut off.
    """

    intersection_cap: int = 10**6
    search_cap: int = 10**13
    max_degree: int = 9
    workers: int = 1
    output: OutputFormat = OutputFormat.TEXT
    recheck_prunes: bool = False

    def validate(self) -> "Config":
        for field in ("intersection_cap", "search_cap", "max_degree", "workers"):
            value = getattr(self, field)
            if not isinstance(value, int) or value < 1:
                raise ConfigurationError(field, value)
        return self

    def replace(self, **changes: Any) -> "Config":
        "Returns a copy with the given fields changed, ignoring `None` values."

        return dataclasses.replace(
            self, **{key: value for key, value in changes.items() if value is not None}
        ).validate()

    @classmethod
    def from_environment(
        cls, base: Optional["Config"] = None, environ: Optional[Mapping[str, str]] = None
    ) -> "Config":
        """
        Overrides configuration values from environment variables.

        Recognized variables are `PYSTRINGC_CAP`, `PYSTRINGC_SEARCH_CAP`, `PYSTRINGC_MAX_DEGREE`,
        `PYSTRINGC_WORKERS`, `PYSTRINGC_JSON` and `PYSTRINGC_RECHECK_PRUNES`.

        :param base: Configuration to start from.
        :param environ: Environment mapping, `os.environ` by default.
        """

        if base is None:
            base = cls()
        if environ is None:
            environ = os.environ

        changes: dict[str, Any] = {}
        for name, field in (
            ("CAP", "intersection_cap"),
            ("SEARCH_CAP", "search_cap"),
            ("MAX_DEGREE", "max_degree"),
            ("WORKERS", "workers"),
        ):
            text = environ.get(f"{ENV_PREFIX}{name}")
            if text is None:
                continue
            try:
                changes[field] = int(text)
            except ValueError:
                raise ConfigurationError(field, text)

        flag = environ.get(f"{ENV_PREFIX}JSON")
        if flag is not None:
            changes["output"] = (
                OutputFormat.JSON if flag not in ("", "0") else OutputFormat.TEXT
            )

        flag = environ.get(f"{ENV_PREFIX}RECHECK_PRUNES")
        if flag is not None:
            changes["recheck_prunes"] = flag not in ("", "0")

        if changes:
            LOGGER.debug(f"configuration overrides from environment: {changes}")
        return base.replace(**changes)


def to_json(obj: Any) -> JsonType:
    "Converts a data-class instance (or any supported value) into a JSON object tree."

    return object_to_json(obj)


def dump_json(obj: Any) -> str:
    "Serializes a value to a compact, deterministic JSON string."

    return _JSON_ENCODER.encode(to_json(obj))
