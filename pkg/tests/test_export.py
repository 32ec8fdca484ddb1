import json
import math

from gelliptic import export
from gelliptic.scmap import GridImage, QuadVertices


def small_grid():
    v = QuadVertices(0j, 1 + 0j, 1 + 1j, 1j, (0.5, 0.5, 0.5, 0.5))
    return GridImage([[0j, 0.5 + 0.5j], [1j, 1 + 1j]], {}, v)


def test_csv():
    text = export.grid_to_csv(small_grid())
    assert text.splitlines() == ["line_id,point_index,re,im", "0,0,0,0", "0,1,0.5,0.5",
                                 "1,0,0,1", "1,1,1,1"]


def test_svg_viewbox_and_flip():
    text = export.grid_to_svg(small_grid())
    assert 'viewBox="-0.05 -1.05 1.1 1.1"' in text
    assert "M0,-1 L1,-1" in text
    assert text.count("<path") == 3


def test_table_csv():
    assert export.table_to_csv([[1.0, 1.2792615]]) == "m,n,modulus\n1,1,1.000000\n1,2,1.279262\n"


def test_json_number():
    assert export.json_number(1 / 3) == 0.333333333333333
    assert export.json_number(complex(1, -2)) == {"re": 1.0, "im": -2.0}
    assert export.json_number(math.inf) == "inf"
    assert json.dumps(export.json_number(7)) == "7"
