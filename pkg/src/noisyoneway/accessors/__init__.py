from .dataframe import SweepAccessor, split_column

__all__ = [
    "SweepAccessor",
    "split_column"
]
