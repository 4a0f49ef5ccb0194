import csv
from pathlib import Path
from typing import Union

from core import TransverseField

SNAPSHOT_HEADER = ("x", "re_e_u", "im_e_u", "re_e_l", "im_e_l")


def write_field_snapshot(field: TransverseField, path: Union[str, Path]) -> None:
    """
    Write a field pair as CSV with columns x, Re E_u, Im E_u, Re E_l, Im E_l.

    Args:
        field: The field to write
        path: Destination file, overwritten if it exists
    """
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SNAPSHOT_HEADER)
        for x, e_u, e_l in zip(field.grid.x, field.e_u, field.e_l):
            writer.writerow(
                format(float(value), ".12g") for value in (x, e_u.real, e_u.imag, e_l.real, e_l.imag)
            )
