"""
Unit tests for atlas storage.
"""

import json

import pytest

from src.atlas.enumerate import build_atlas
from src.atlas.persistence import MANIFEST_NAME, load_atlas, load_manifest, save_atlas
from src.core.exceptions import DocumentError, IntegrityError


class TestAtlasStorage:
    """Test save and load of stored atlases"""

    @pytest.fixture
    def stored(self, tmp_path):
        """Atlas through size 3 written under tmp_path"""
        atlases = build_atlas(3)
        manifest = save_atlas(atlases, tmp_path)
        return tmp_path, atlases, manifest

    def test_layout(self, stored):
        """Test one file per structure plus the manifest"""
        root, atlases, manifest = stored
        assert (root / MANIFEST_NAME).exists()
        assert (root / "k2" / "G2.1.json").exists()
        assert manifest.counts() == {k: len(atlas) for k, atlas in atlases.items()}
        assert manifest.counts()[1] == 1
        assert manifest.counts()[2] == 1

    def test_round_trip(self, stored):
        """Test loaded tables and labels match"""
        root, atlases, _ = stored
        loaded = load_atlas(root)
        assert sorted(loaded) == [1, 2, 3]
        for k in atlases:
            assert [G.table for G in loaded[k]] == [G.table for G in atlases[k]]
            assert [G.label for G in loaded[k]] == [G.label for G in atlases[k]]
            assert loaded[k].provenance == atlases[k].provenance

    def test_files_are_deterministic(self, stored, tmp_path_factory):
        """Test identical atlases hash identically"""
        _, atlases, manifest = stored
        again = save_atlas(atlases, tmp_path_factory.mktemp("again"))
        first = [e.sha256 for record in manifest.sizes for e in record.entries]
        second = [e.sha256 for record in again.sizes for e in record.entries]
        assert first == second

    def test_manifest_is_deterministic(self, stored, tmp_path_factory):
        """Test saving the same atlas twice writes the same manifest bytes"""
        root, atlases, _ = stored
        again = tmp_path_factory.mktemp("again")
        save_atlas(atlases, again)
        assert (again / MANIFEST_NAME).read_bytes() == (root / MANIFEST_NAME).read_bytes()

    def test_tampered_file(self, stored):
        """Test a hash mismatch is an integrity error"""
        root, _, _ = stored
        path = root / "k2" / "G2.1.json"
        data = json.loads(path.read_text(encoding="utf-8"))
        data["products"] = []
        path.write_text(json.dumps(data), encoding="utf-8")
        with pytest.raises(IntegrityError):
            load_atlas(root)

    def test_tampered_file_without_verify(self, stored):
        """Test a stored structure that lost its dagger"""
        root, _, _ = stored
        path = root / "k2" / "G2.1.json"
        data = json.loads(path.read_text(encoding="utf-8"))
        data["products"] = []
        path.write_text(json.dumps(data), encoding="utf-8")
        with pytest.raises(IntegrityError):
            load_atlas(root, verify=False)

    def test_missing_file(self, stored):
        """Test a file named in the manifest must exist"""
        root, _, _ = stored
        (root / "k1" / "G1.1.json").unlink()
        with pytest.raises(IntegrityError):
            load_atlas(root)

    def test_missing_manifest(self, tmp_path):
        """Test an empty directory"""
        with pytest.raises(DocumentError):
            load_manifest(tmp_path)

    def test_malformed_manifest(self, tmp_path):
        """Test a manifest without required fields"""
        (tmp_path / MANIFEST_NAME).write_text("{}", encoding="utf-8")
        with pytest.raises(DocumentError):
            load_manifest(tmp_path)
