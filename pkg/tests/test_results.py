import json
from pathlib import Path

import pytest

from mindist.codes import build_qr
from mindist.genetic import GaConfig, run_variant_b
from mindist.mim import MimConfig, run
from mindist.results import SCHEMA_VERSION, validate_result


@pytest.fixture(scope="module")
def sample_ga_doc(hamming7):
    cfg = GaConfig.variant_b(population_size=20, max_generations=4, rng_seed=0)
    return run_variant_b(hamming7, cfg).to_dict()


@pytest.fixture(scope="module")
def sample_mim_doc(hamming7):
    return run(hamming7, MimConfig.for_code(hamming7, nb_test=2, rng_seed=0)).to_dict()


class TestValidateResult:
    def test_ga_document_passes(self, sample_ga_doc):
        validate_result(sample_ga_doc)

    def test_mim_document_passes(self, sample_mim_doc):
        validate_result(sample_mim_doc)

    def test_json_round_trip_stays_valid(self, sample_ga_doc):
        validate_result(json.loads(json.dumps(sample_ga_doc)))

    def test_version_pinned(self, sample_ga_doc):
        assert sample_ga_doc["schema_version"] == SCHEMA_VERSION == 1

    def test_missing_field_rejected(self, sample_ga_doc):
        doc = dict(sample_ga_doc)
        del doc["bounds"]
        with pytest.raises(ValueError, match="missing"):
            validate_result(doc)

    def test_extra_field_rejected(self, sample_ga_doc):
        doc = dict(sample_ga_doc)
        doc["surprise"] = 1
        with pytest.raises(ValueError, match="unexpected"):
            validate_result(doc)

    def test_wrong_version_rejected(self, sample_ga_doc):
        doc = dict(sample_ga_doc)
        doc["schema_version"] = 2
        with pytest.raises(ValueError, match="schema_version"):
            validate_result(doc)

    def test_witness_weight_mismatch_rejected(self, sample_ga_doc):
        doc = json.loads(json.dumps(sample_ga_doc))
        doc["witness_weight"] = doc["witness_weight"] + 1
        with pytest.raises(ValueError, match="witness_weight"):
            validate_result(doc)

    def test_bad_witness_symbols_rejected(self, sample_ga_doc):
        doc = json.loads(json.dumps(sample_ga_doc))
        doc["witness"] = "10a1" + doc["witness"][4:]
        with pytest.raises(ValueError):
            validate_result(doc)

    def test_qr_bounds_serialized(self):
        code = build_qr(17)
        est = run(code, MimConfig.for_code(code, nb_test=2, rng_seed=0))
        doc = est.to_dict()
        validate_result(doc)
        assert doc["bounds"]["sqrt_lower"] is not None

    def test_shipped_schema_agrees_on_required_fields(self, sample_ga_doc):
        schema_path = (
            Path(__file__).resolve().parents[1]
            / "src" / "mindist" / "schemas" / "result-v1.json"
        )
        schema = json.loads(schema_path.read_text())
        assert sorted(schema["required"]) == sorted(sample_ga_doc.keys())
        assert sorted(schema["properties"]["bounds"]["required"]) == sorted(
            sample_ga_doc["bounds"].keys()
        )
        assert sorted(schema["properties"]["code"]["required"]) == sorted(
            sample_ga_doc["code"].keys()
        )

    def test_sorted_stable_json(self, sample_ga_doc, hamming7):
        cfg = GaConfig.variant_b(population_size=20, max_generations=4, rng_seed=0)
        a = run_variant_b(hamming7, cfg).to_json()
        b = run_variant_b(hamming7, cfg).to_json()
        strip = lambda s: [l for l in s.splitlines() if "wall_time" not in l and '"time"' not in l]
        assert strip(a) == strip(b)
