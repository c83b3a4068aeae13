import numpy as np
import pandas as pd
from pandas.api.extensions import register_dataframe_accessor

from pathlib import Path
from typing import Dict, List, Union

from ..exceptions import ConfigurationException

CSV_FORMAT = "%.12g"

MEASURE_PREFIXES = {
    "F": "fidelity",
    "C": "concurrence",
    "N": "negativity",
    "Q": "discord",
    "MEP": "mep",
    "bound": "bound",
    "closed": "closed form"
}


def split_column(name: str):
    """``"F_pf"`` -> ``("F", "pf")``; columns without a label return an empty label."""
    prefix, _, label = name.partition("_")
    return prefix, label


@register_dataframe_accessor("sweep")
class SweepAccessor:
    """
    Helpers on sweep tables: a ``t`` column followed by ``<measure>_<label>`` columns.
    """

    def __init__(self, pandas_obj):
        if "t" not in pandas_obj.columns:
            raise AttributeError("A sweep table needs a 't' column.")
        self._df = pandas_obj

    # ------------------------------------
    #               Output
    # ------------------------------------

    def write(self, path: Union[str, Path]) -> Path:
        """
        Write the table as CSV ('.' decimals, '\\n' line endings, header row).

        :param path: Destination file.
        :return: The path written.
        """
        path = Path(path)
        try:
            self._df.to_csv(path, index = False, lineterminator = "\n", float_format = CSV_FORMAT)
        except OSError as error:
            raise ConfigurationException(
                error_code = "CON007",
                method = "SweepAccessor.write",
                parameter = str(path),
                suggestion = str(error)
            ) from error
        return path

    def schema(self) -> List[Dict[str, str]]:
        """
        One entry per column with its measure and label.

        :return: List of ``{"name", "measure", "label", "dtype"}`` dictionaries.
        """
        entries = []
        for column in self._df.columns:
            prefix, label = split_column(column)
            measure = "time" if column == "t" else MEASURE_PREFIXES.get(prefix, prefix)
            entries.append({
                "name": column,
                "measure": measure,
                "label": label,
                "dtype": str(self._df[column].dtype)
            })
        return entries

    # ------------------------------------
    #             Comparisons
    # ------------------------------------

    def dominates(self, upper: str, lower: str, *, tol: float = 0.0, positive_t: bool = True) -> bool:
        """
        Whether ``upper >= lower - tol`` on every row (only ``t > 0`` rows by default).

        :param upper: Column expected to be larger.
        :param lower: Column expected to be smaller.
        :param tol: Allowed violation.
        """
        rows = self._df[self._df["t"] > 0] if positive_t else self._df
        return bool(np.all(rows[upper].to_numpy() >= rows[lower].to_numpy() - tol))

    def value_at(self, column: str, t: float) -> float:
        """
        Value of ``column`` at ``t``, linearly interpolated between sweep points.
        """
        ordered = self._df.sort_values("t")
        return float(np.interp(t, ordered["t"].to_numpy(), ordered[column].to_numpy()))
