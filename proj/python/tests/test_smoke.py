import math
from pathlib import Path

import pytest

import aspectminer as am

SAMPLE = Path(am.data_dir()) / "sample"


@pytest.fixture(scope="module")
def pipeline():
    return am.Pipeline()


def test_tokenize():
    assert am.tokenize("it's razor-sharp.") == ["it's", "razor", "-", "sharp", "."]
    assert am.tokenize("") == []


def test_parse_pretagged():
    assert am.parse_pretagged("my/PRP$ camera/NN") == [("my", "PRP$"), ("camera", "NN")]
    with pytest.raises(am.ParseError):
        am.parse_pretagged("camera/XX")


def test_tag(pipeline):
    assert pipeline.tag("sound is wonderful") == [
        ("sound", "NN"), ("is", "VBZ"), ("wonderful", "JJ")]


def test_extract(pipeline):
    pairs = pipeline.extract("earpiece/NN is/VBZ very/RB comfortable/JJ\n")
    assert len(pairs) == 1
    assert pairs[0]["aspect"] == "earpiece"
    assert pairs[0]["opinion"] == "comfortable"
    assert pairs[0]["polarity"] == "positive"


def test_weight(pipeline):
    assert pipeline.weight("earpiece/NN is/VBZ very/RB comfortable/JJ") == 2


def test_summarize_sample(pipeline):
    corpus = (SAMPLE / "camera-reviews.txt").read_text()
    pos = (SAMPLE / "camera-reviews.pos").read_text()
    out = pipeline.summarize(corpus, pos, product="camera", format="machine")
    assert out.startswith("summary\tcamera\t")
    assert out == pipeline.summarize(corpus, pos, product="camera", format="machine")
    with pytest.raises(am.InvalidArgument):
        pipeline.summarize(corpus, pos, format="html")


def test_evaluate_mismatch(pipeline):
    corpus = (SAMPLE / "mp3-mini.txt").read_text()
    scores = pipeline.evaluate(corpus, (SAMPLE / "mp3-mini.pos").read_text())
    assert 0.0 <= scores["subset"]["aspect_precision"] <= 1.0
    with pytest.raises(am.ParseError):
        pipeline.evaluate(corpus, "a/DT\n")


def test_metrics():
    assert math.isclose(am.f_measure(0.70, 0.79), 0.7423, abs_tol=1e-4)
    assert not am.f_consistent_with_rounding(0.56, 0.61, 0.60)
    r = am.paired_t_test([1, 2, 3, 4, 5], [0, 0, 0, 0, 0])
    assert math.isclose(r["t"], 4.242640687119285, rel_tol=1e-9)
    assert r["df"] == 4
    assert math.isclose(r["p"], 0.013235599563682695, rel_tol=1e-6)
    assert am.percent_half_up(3, 8) == 38


def test_mine():
    got = am.mine("a/NN b/VBZ c/JJ\na/NN b/VBZ c/RB d/JJ\na/DT b/NN c/VBZ d/JJ\n", 2, 6)
    assert got[0] == (("NN", "VBZ"), 3, 1.0)
    assert {g[0] for g in got} == {("NN", "VBZ"), ("NN", "VBZ", "JJ"), ("VBZ", "JJ")}


def test_missing_resources():
    with pytest.raises(am.ResourceError):
        am.Pipeline("/nonexistent")
