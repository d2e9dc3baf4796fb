import json
from fractions import Fraction
from pathlib import Path

import pytest

from src.data.profile_store import dump_profile, load_profile, profile_from_document, profile_to_document
from src.models.profiles import ProfileC, ProfileD, ProfileF
from src.utils.errors import ProfileFormatError

DEMO_DIR = Path(__file__).parent.parent / "data" / "demo"


def test_load_bundled_demo_pair(demo_profiles):
    a = load_profile(DEMO_DIR / "profile_a.json")
    b = load_profile(DEMO_DIR / "profile_b.json")
    assert a == demo_profiles[0]
    assert b == demo_profiles[1]


def test_document_shape():
    profile = ProfileF(depth="5/2", top=1.0, support={"1/2": 1.0, 1: -0.5})
    assert profile_to_document(profile) == {
        "kind": "F",
        "depth": "5/2",
        "top": 1.0,
        "support": [["1/2", 1.0], ["1", -0.5]],
    }


@pytest.mark.parametrize(
    "profile",
    [
        ProfileD(depth=3, support={"1/3": Fraction(7, 2), 2: -1}),
        ProfileC(depth="3/2", breakpoints=[(0, 0), ("1/2", "-1/4"), ("3/2", 2)]),
        ProfileF(depth=0, top=4.0),
    ],
)
def test_dump_then_load(tmp_path, profile):
    path = tmp_path / "profile.json"
    dump_profile(profile, path)
    assert load_profile(path) == profile


def test_exact_values_survive_json():
    document = {"kind": "D", "depth": "1", "support": [["1/2", "1/3"], ["1", 2]]}
    profile = profile_from_document(document)
    assert profile.support == ((Fraction(1, 2), Fraction(1, 3)), (Fraction(1), Fraction(2)))


@pytest.mark.parametrize(
    "document",
    [
        {"depth": "1"},
        {"kind": "X", "depth": "1"},
        {"kind": "D", "depth": "one"},
        {"kind": "D", "depth": "1", "support": [["2", 1]]},
        {"kind": "D", "depth": "1", "top": 0.5},
        {"kind": "C", "depth": "1", "support": [["0", 1], ["1", 0]]},
        {"kind": "F", "depth": "1", "support": [["1/0", 1.0]]},
        ["not", "an", "object"],
    ],
)
def test_invalid_documents(document):
    with pytest.raises(ProfileFormatError):
        profile_from_document(document)


def test_invalid_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"kind\": ", encoding="utf-8")
    with pytest.raises(ProfileFormatError):
        load_profile(path)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_profile(tmp_path / "absent.json")


def test_dumped_file_is_plain_json(tmp_path):
    path = tmp_path / "d.json"
    dump_profile(ProfileD(depth=2, support={1: 1}), path)
    assert json.loads(path.read_text()) == {"kind": "D", "depth": "2", "support": [["1", 1]]}
