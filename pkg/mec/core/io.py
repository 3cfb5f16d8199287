"""Instance and coupling files."""

import json
import logging
from pathlib import Path

from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from mec.core.models import Coupling, CouplingEntry, InstanceSet
from mec.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


class InstanceFile(BaseModel):
    """Instance file schema."""

    distributions: list[list[float]] = Field(min_length=1)
    normalize: bool = False


class CouplingEntryModel(BaseModel):
    indices: list[int] = Field(min_length=1)
    mass: float = Field(gt=0)


_entries_adapter = TypeAdapter(list[CouplingEntryModel])


def _read_json(path: str | Path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"malformed JSON in {path}: {e}") from e


def parse_instance(raw: object, normalize: bool | None = None) -> InstanceSet:
    """Build an InstanceSet from decoded JSON (object or bare array form)."""
    if isinstance(raw, list):
        raw = {"distributions": raw}
    try:
        parsed = InstanceFile.model_validate(raw)
    except ValidationError as e:
        raise InvalidInputError(f"malformed instance: {e.errors()[0]['msg']}") from e
    do_normalize = parsed.normalize if normalize is None else normalize
    return InstanceSet.from_lists(parsed.distributions, normalize=do_normalize)


def load_instance(path: str | Path, normalize: bool | None = None) -> InstanceSet:
    """Read an instance file; `normalize` overrides the file's own flag."""
    instance = parse_instance(_read_json(path), normalize=normalize)
    logger.debug(f"Loaded instance from {path}: m={instance.m}, n={instance.n}")
    return instance


def save_instance(path: str | Path, s: InstanceSet) -> None:
    payload = InstanceFile(distributions=[list(d.masses) for d in s.dists])
    Path(path).write_text(payload.model_dump_json(indent=2), encoding="utf-8")


def save_coupling(path: str | Path, c: Coupling) -> None:
    entries = [CouplingEntryModel(indices=list(e.indices), mass=e.mass) for e in c.entries]
    Path(path).write_bytes(_entries_adapter.dump_json(entries, indent=2))
    logger.debug(f"Wrote {len(entries)} coupling entries to {path}")


def load_coupling(path: str | Path) -> Coupling:
    try:
        entries = _entries_adapter.validate_python(_read_json(path))
    except ValidationError as e:
        raise InvalidInputError(f"malformed coupling: {e.errors()[0]['msg']}") from e
    return Coupling(tuple(CouplingEntry(tuple(e.indices), e.mass) for e in entries))
