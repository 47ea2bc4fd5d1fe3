"""Flat JSON documents describing a system: gamma, Gamma, L, C, R, xi."""

import json
from dataclasses import dataclass

from .background import BackgroundSpec
from .ca import CAParams, CASystem
from .errors import SpecValidationError
from .takeaway import GameSpec

_FIELDS = ("gamma", "Gamma", "L", "C", "R", "xi")
_BITS = frozenset("01")


@dataclass(frozen=True)
class SpecDocument:
    gamma: int
    Gamma: int
    L: str
    C: str
    R: str
    xi: int

    def to_dict(self) -> dict:
        return {f: getattr(self, f) for f in _FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def ca_params(self) -> CAParams:
        return CAParams(gamma=self.gamma, Gamma=self.Gamma)

    def background(self) -> BackgroundSpec:
        return BackgroundSpec(left=self.L, center=self.C, right=self.R, shift=self.xi)

    def ca_system(self) -> CASystem:
        return CASystem(params=self.ca_params(), background=self.background())

    def game_spec(self) -> GameSpec:
        return GameSpec(params=self.ca_params(), background=self.background())


def _require_int(value, name: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecValidationError(f"field {name!r} must be an integer", field=name)
    if minimum is not None and value < minimum:
        raise SpecValidationError(f"field {name!r} must be >= {minimum}", field=name)
    return value


def _require_bits(value, name: str, min_len: int) -> str:
    if not isinstance(value, str):
        raise SpecValidationError(f"field {name!r} must be a string", field=name)
    if len(value) < min_len:
        raise SpecValidationError(
            f"field {name!r} must have length >= {min_len}", field=name
        )
    if not _BITS.issuperset(value):
        raise SpecValidationError(
            f"field {name!r} may only contain '0' and '1'", field=name
        )
    return value


def parse_spec_document(data) -> SpecDocument:
    """Validate a dict (or JSON text) into a SpecDocument.

    Unknown keys are rejected so typos surface as errors rather than as
    silently ignored defaults.
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SpecValidationError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecValidationError("spec document must be a JSON object")
    unknown = set(data) - set(_FIELDS)
    if unknown:
        raise SpecValidationError(
            f"unknown fields: {sorted(unknown)}", fields=sorted(unknown)
        )
    missing = set(_FIELDS) - set(data)
    if missing:
        raise SpecValidationError(
            f"missing fields: {sorted(missing)}", fields=sorted(missing)
        )
    return SpecDocument(
        gamma=_require_int(data["gamma"], "gamma", minimum=0),
        Gamma=_require_int(data["Gamma"], "Gamma", minimum=0),
        L=_require_bits(data["L"], "L", 1),
        C=_require_bits(data["C"], "C", 0),
        R=_require_bits(data["R"], "R", 1),
        xi=_require_int(data["xi"], "xi"),
    )


def load_spec_document(path: str) -> SpecDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec_document(fh.read())


def rule60_step_document() -> SpecDocument:
    """gamma=Gamma=0 over the step background: the introductory system."""
    return SpecDocument(gamma=0, Gamma=0, L="0", C="", R="1", xi=0)


def rule110_game_document(center: str = "11010011101100") -> SpecDocument:
    """gamma=1, Gamma=0 over a finite center word on a zero background."""
    return SpecDocument(gamma=1, Gamma=0, L="0", C=center, R="0", xi=0)
