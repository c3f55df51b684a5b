import json

import pytest

from heartrules.artifact import RuleBaseArtifact
from heartrules.errors import DataError
from heartrules.pipeline import PipelineConfig, train


@pytest.fixture(scope="module")
def tiny_artifact(tmp_path_factory):
    root = tmp_path_factory.mktemp("tiny")
    data = root / "t0.csv"
    data.write_text("0,0,0\n0,1,1\n1,0,1\n1,1,1\n")
    schema = root / "schema.json"
    schema.write_text(json.dumps([
        {"name": "a", "kind": "binary"},
        {"name": "b", "kind": "binary"},
        {"name": "d", "kind": "binary", "role": "decision"},
    ]))
    config = PipelineConfig(data=(str(data),), schema=str(schema),
                            min_support=1, selection_table="training")
    artifact, counts = train(config)
    return artifact, counts, root


def test_train_t0_artifact_small(tiny_artifact):
    artifact, counts, _ = tiny_artifact
    assert counts["rules_generated"] == 3
    assert counts["rules_selected"] <= 3
    assert len(artifact.crisp_rules.rules) == counts["rules_selected"]


def test_artifact_roundtrip_memory_equality(tiny_artifact):
    artifact, _, root = tiny_artifact
    path = root / "model.json"
    artifact.save(path)
    loaded = RuleBaseArtifact.load(path)
    assert loaded.rulebase == artifact.rulebase
    assert loaded.crisp_rules.rules == artifact.crisp_rules.rules
    assert loaded.cuts == artifact.cuts
    assert loaded.schema == artifact.schema
    assert loaded.fingerprint == artifact.fingerprint
    assert loaded.config == artifact.config


def test_artifact_roundtrip_byte_identity(tiny_artifact):
    artifact, _, root = tiny_artifact
    path1 = root / "m1.json"
    path2 = root / "m2.json"
    artifact.save(path1)
    RuleBaseArtifact.load(path1).save(path2)
    assert path1.read_bytes() == path2.read_bytes()


def test_artifact_version_check(tiny_artifact):
    artifact, _, _ = tiny_artifact
    doc = artifact.to_dict()
    doc["format_version"] = "827"
    with pytest.raises(DataError, match="827"):
        RuleBaseArtifact.from_dict(doc)


def test_artifact_rejects_non_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("not json {")
    with pytest.raises(DataError):
        RuleBaseArtifact.load(bad)


def test_infinite_breakpoints_survive_json(tiny_artifact):
    artifact, _, root = tiny_artifact
    text = artifact.dumps()
    json.loads(text)  # strict JSON: would fail on bare Infinity literals
    assert "Infinity" not in text


def test_identical_config_trains_identical_artifact(tiny_artifact):
    artifact, _, root = tiny_artifact
    config = PipelineConfig(**{**artifact.config,
                               "data": tuple(artifact.config["data"]),
                               "spread_overrides": tuple(
                                   artifact.config["spread_overrides"].items())})
    again, _ = train(config)
    assert again.dumps() == artifact.dumps()
