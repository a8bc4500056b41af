import json
from pathlib import Path

import pytest

from rootposets import build_root_system
from rootposets.affine import AffineWeylElement, element_from_json

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name", ["C2", "G2"])
def test_root_system_text(name):
    assert build_root_system(name).to_text() == (GOLDEN / f"{name}.txt").read_text()


def test_element_json():
    rs = build_root_system("C2")
    data = json.loads((GOLDEN / "C2_s0s1s0.json").read_text())
    w = element_from_json(rs, data)
    assert w == AffineWeylElement.from_word(rs, [0, 1, 0])
    assert w.to_json() == data
    assert w.length() == 3
