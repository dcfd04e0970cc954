import json
import math

import pytest

from affine_spectra import (
    DiagonalMap,
    DiagonalSystem,
    SystemDefinitionError,
    detect_swap_family,
    load_system,
    swap_family,
    system_from_document,
    system_to_document,
    validate_system,
)
from affine_spectra.system import ROSC_FAILS, ROSC_HOLDS, ROSC_UNKNOWN


def test_map_invariants():
    with pytest.raises(SystemDefinitionError):
        DiagonalMap(0.0, 0.5)
    with pytest.raises(SystemDefinitionError):
        DiagonalMap(0.5, 1.0)
    with pytest.raises(SystemDefinitionError):
        DiagonalMap(0.5, 0.5, sign_c=2)


def test_system_invariants():
    m = DiagonalMap(0.5, 0.5)
    with pytest.raises(SystemDefinitionError):
        DiagonalSystem((m,), (1.0,))  # N >= 2
    with pytest.raises(SystemDefinitionError):
        DiagonalSystem((m, m), (0.5, 0.6))  # sums to 1.1
    with pytest.raises(SystemDefinitionError):
        DiagonalSystem((m, m), (1.0, 0.0))  # p_i in (0,1)
    # within-tolerance drift is renormalised exactly
    eps = 4e-13
    sys = DiagonalSystem((m, m), (0.5 + eps, 0.5))
    assert math.fsum(sys.probabilities) == pytest.approx(1.0, abs=1e-15)


def test_validate_counterexample_rosc_holds(counterexample):
    rep = validate_system(counterexample)
    assert rep.ok
    assert rep.rosc == ROSC_HOLDS
    # images of the open unit square, from direct map arithmetic
    assert rep.images[0] == ((0.0, 0.75), (0.0, 0.25))
    assert rep.images[1] == ((0.75, 1.0), (0.25, 1.0))


def test_validate_bad_probabilities_reported():
    doc = {
        "maps": [{"c": 0.5, "d": 0.5}, {"c": 0.4, "d": 0.4, "tx": 0.5, "ty": 0.5}],
        "probabilities": [0.5, 0.6],
    }
    rep = validate_system(doc)
    assert not rep.probabilities_ok
    assert any("sum to" in msg for msg in rep.issues)


def test_validate_identical_maps_fail_sufficient_check():
    doc = {
        "maps": [{"c": 0.5, "d": 0.5}, {"c": 0.5, "d": 0.5}],
        "probabilities": [0.5, 0.5],
    }
    rep = validate_system(doc)
    assert rep.rosc == ROSC_FAILS


def test_validate_escaping_image_is_unknown():
    doc = {
        "maps": [{"c": 0.5, "d": 0.5, "tx": 0.9}, {"c": 0.3, "d": 0.3}],
        "probabilities": [0.5, 0.5],
    }
    rep = validate_system(doc)
    assert rep.rosc == ROSC_UNKNOWN


def test_swap_family_structure():
    sys = swap_family(0.6, 0.2)
    assert detect_swap_family(sys) == (0.6, 0.2)
    assert sys.maps[1].tx == pytest.approx(0.8)
    assert sys.maps[1].ty == pytest.approx(0.4)
    with pytest.raises(SystemDefinitionError):
        swap_family(0.2, 0.6)
    with pytest.raises(SystemDefinitionError):
        swap_family(0.7, 0.5)  # c + d > 1


def test_detect_swap_family_rejects_near_misses(miao3):
    assert detect_swap_family(miao3) is None
    m = DiagonalMap(0.5, 0.5)
    sq = DiagonalSystem((m, m), (0.5, 0.5))
    assert detect_swap_family(sq) is None  # c == d is not a swap pair


def test_mirrored():
    sys = swap_family(0.75, 0.25).mirrored()
    assert sys.maps[0].c == 0.25 and sys.maps[0].d == 0.75
    # translations swap coordinates along with the axes
    assert (sys.maps[1].tx, sys.maps[1].ty) == (0.25, 0.75)


def test_json_roundtrip(tmp_path, miao3):
    doc = system_to_document(miao3)
    again = system_from_document(doc)
    assert again == miao3
    p = tmp_path / "sys.json"
    p.write_text(json.dumps(doc))
    assert load_system(p) == miao3


def test_json_error_carries_path_and_line(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "maps": [,]\n}\n')
    with pytest.raises(SystemDefinitionError) as exc:
        load_system(p)
    assert "broken.json:2" in str(exc.value)


def test_document_schema_errors():
    with pytest.raises(SystemDefinitionError):
        system_from_document({"maps": []})
    with pytest.raises(SystemDefinitionError):
        system_from_document({"maps": [{"c": 0.5}], "probabilities": [1.0]})
