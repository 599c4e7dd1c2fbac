"""
Atlas storage: one JSON document per structure plus a manifest.

Layout::

    atlas/
        manifest.json
        k3/G3.1.json
        k3/G3.2.json
"""

import hashlib
import json
from pathlib import Path
from typing import Dict, List, Optional, Union

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from src.algebra.magma import BinaryPartialGroup, PartialMagma
from src.atlas.enumerate import Atlas, AtlasProvenance
from src.core.config import get_settings
from src.core.exceptions import DocumentError, IntegrityError, NotABinaryPartialGroupError

MANIFEST_NAME = "manifest.json"


class ManifestEntry(BaseModel):
    """One stored structure"""
    label: str
    path: str
    sha256: str


class SizeRecord(BaseModel):
    """Counts and files for one size"""

    size: int
    count: int
    provenance: AtlasProvenance
    entries: List[ManifestEntry] = Field(default_factory=list)


class AtlasManifest(BaseModel):
    """Index of a stored atlas"""

    generator: str
    version: str
    parameters: Dict[str, Union[int, str, bool]] = Field(default_factory=dict)
    sizes: List[SizeRecord] = Field(default_factory=list)

    def counts(self) -> Dict[int, int]:
        return {record.size: record.count for record in self.sizes}


def _dumps(data: Dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def save_atlas(atlases: Dict[int, Atlas], directory: Optional[Union[str, Path]] = None) -> AtlasManifest:
    """
    Write every structure and the manifest under ``directory``.

    Documents are written with sorted keys so identical atlases hash
    identically.
    """
    settings = get_settings()
    root = Path(directory or settings.enumeration.atlas_dir)
    root.mkdir(parents=True, exist_ok=True)
    manifest = AtlasManifest(
        generator=settings.app_name,
        version=settings.app_version,
        parameters={
            "max_size": max(atlases, default=0),
            "workers": settings.enumeration.workers,
        },
    )
    for k in sorted(atlases):
        atlas = atlases[k]
        record = SizeRecord(size=k, count=len(atlas), provenance=atlas.provenance)
        size_dir = root / f"k{k}"
        size_dir.mkdir(exist_ok=True)
        for G in atlas:
            text = _dumps(G.magma.to_document())
            relative = f"k{k}/{G.label}.json"
            (root / relative).write_text(text, encoding="utf-8")
            record.entries.append(ManifestEntry(label=G.label, path=relative, sha256=_digest(text)))
        manifest.sizes.append(record)
    (root / MANIFEST_NAME).write_text(_dumps(manifest.model_dump(mode="json")), encoding="utf-8")
    logger.info(f"Saved atlas with counts {manifest.counts()} to {root}")
    return manifest


def load_manifest(directory: Union[str, Path]) -> AtlasManifest:
    path = Path(directory) / MANIFEST_NAME
    if not path.exists():
        raise DocumentError(f"No atlas manifest at {path}")
    try:
        return AtlasManifest.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise DocumentError(f"Malformed atlas manifest {path}: {e}") from e


def load_atlas(directory: Union[str, Path], verify: bool = True) -> Dict[int, Atlas]:
    """
    Read a stored atlas back.

    Raises:
        IntegrityError: a file's hash differs from the manifest, or a stored
            structure is no longer a binary partial group
    """
    root = Path(directory)
    manifest = load_manifest(root)
    atlases: Dict[int, Atlas] = {}
    for record in manifest.sizes:
        structures = []
        for entry in record.entries:
            path = root / entry.path
            if not path.exists():
                raise IntegrityError(f"Atlas file missing: {path}")
            text = path.read_text(encoding="utf-8")
            if verify and _digest(text) != entry.sha256:
                raise IntegrityError(f"Hash mismatch for {path}")
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise DocumentError(f"{path} is not valid JSON: {e}") from e
            magma = PartialMagma.from_document(data, label=entry.label)
            try:
                structures.append(BinaryPartialGroup.from_magma(magma))
            except NotABinaryPartialGroupError as e:
                raise IntegrityError(f"{path} no longer holds a binary partial group") from e
        if len(structures) != record.count:
            raise IntegrityError(f"Size {record.size}: manifest counts {record.count}, found {len(structures)}")
        atlases[record.size] = Atlas(size=record.size, structures=structures, provenance=record.provenance)
    logger.info(f"Loaded atlas with counts {manifest.counts()} from {root}")
    return atlases
