"""
Table output
"""
from pathlib import Path
from typing import Union

import pandas as pd

from ..exceptions import ConfigurationError

FORMATS = ("csv", "json")
FLOAT_FORMAT = "%.17g"


def write_table(df: pd.DataFrame, output_path: Union[str, Path], format: str = "csv",
                float_format: str = FLOAT_FORMAT) -> Path:
    """
    Write a result table.

    CSV floats use 17 significant digits so identical inputs give
    byte-identical files; JSON is written record-oriented with 15 digits
    (the pandas maximum).

    Parameters
    ----------
    df : pandas.DataFrame
        Table to write
    output_path : str or Path
        Destination; parent directories are created
    format : str
        'csv' or 'json'

    Returns
    -------
    Path
        The written path
    """
    if format not in FORMATS:
        raise ConfigurationError(f"Unknown output format '{format}' (expected one of {FORMATS})")
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)

    if format == "csv":
        df.to_csv(output_path, index=False, float_format=float_format, lineterminator="\n")
    else:
        df.to_json(output_path, orient="records", double_precision=15, indent=1)
    return output_path
