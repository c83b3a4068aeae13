import pandas as pd
import pytest

import noisyoneway  # noqa: F401  (registers df.sweep)


@pytest.fixture
def table():
    return pd.DataFrame({
        "t": [0.0, 0.5, 1.0],
        "F_pf": [1.0, 0.8, 0.7],
        "F_w": [1.0, 0.7, 0.6],
        "C_pf": [1.0, 0.4, 0.1]
    })


class TestSweepAccessor:

    def test_needs_a_time_column(self):
        with pytest.raises(AttributeError):
            pd.DataFrame({"F_pf": [1.0]}).sweep

    def test_schema(self, table):
        schema = table.sweep.schema()
        assert schema[0] == {"name": "t", "measure": "time", "label": "", "dtype": "float64"}
        assert schema[1]["measure"] == "fidelity"
        assert schema[3] == {"name": "C_pf", "measure": "concurrence", "label": "pf", "dtype": "float64"}

    def test_dominates_ignores_the_origin(self, table):
        assert table.sweep.dominates("F_pf", "F_w")
        assert not table.sweep.dominates("F_w", "F_pf")
        equal = table.assign(F_w = table["F_pf"])
        assert equal.sweep.dominates("F_w", "F_pf")

    def test_value_at_interpolates(self, table):
        assert table.sweep.value_at("F_pf", 0.75) == pytest.approx(0.75)
        assert table.sweep.value_at("C_pf", 1.0) == pytest.approx(0.1)

    def test_write(self, table, tmp_path):
        path = table.sweep.write(tmp_path / "sweep.csv")
        text = path.read_text()
        assert text.splitlines()[0] == "t,F_pf,F_w,C_pf"
        assert "\r" not in text
        pd.testing.assert_frame_equal(pd.read_csv(path), table)
