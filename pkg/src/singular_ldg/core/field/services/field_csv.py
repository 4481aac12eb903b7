import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import ClassVar

import numpy as np

from singular_ldg.core.field.constraints.csv_schema import (
    CSV_FLOAT_FORMAT,
    CSV_HEADER,
    CSV_SPACING_RTOL,
)
from singular_ldg.core.field.constraints.grid import EXTENT_RTOL, MIN_NODES_PER_AXIS
from singular_ldg.core.field.dtos.grid_spec import GridSpec
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.field_format import FieldFormatError
from singular_ldg.core.field.exceptions.grid_mismatch import GridMismatchError
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)

# The header is row 1; data rows are numbered from 2.
_FIRST_DATA_ROW = 2


@dataclass(kw_only=True)
class FieldCsvService(BaseService):
    """Read and write fields as ``x,y,v1,...,v5`` tables, one row per node, x fastest."""

    FIELD_FORMAT_ERROR: ClassVar = FieldFormatError  # noqa: WPS115
    GRID_MISMATCH_ERROR: ClassVar = GridMismatchError  # noqa: WPS115
    INVALID_NUMBER_ERROR: ClassVar = ValueError  # noqa: WPS115

    def save_csv(self, *, field: Field, path: Path) -> None:
        """Write ``field`` with 17 significant digits per value."""
        x, y = field.node_coordinates()
        table = np.concatenate(
            [x[..., np.newaxis], y[..., np.newaxis], field.values],
            axis=-1,
        ).transpose(1, 0, 2)
        with path.open("w", newline="", encoding="utf-8") as stream:
            writer = csv.writer(stream)
            writer.writerow(CSV_HEADER)
            writer.writerows(
                [format(value, CSV_FLOAT_FORMAT) for value in row]
                for row in table.reshape(-1, len(CSV_HEADER)).tolist()
            )

        logger.debug("Wrote %dx%d field to %s", field.nx, field.ny, path)

    def load_csv(self, *, path: Path, expected_grid: GridSpec | None = None) -> Field:
        """Read a field written by :meth:`save_csv`, optionally pinned to ``expected_grid``.

        Returns:
            The field, with extents taken from the last node's coordinates.
        """
        with path.open(newline="", encoding="utf-8") as stream:
            rows = list(csv.reader(stream))

        if not rows or tuple(cell.strip() for cell in rows[0]) != CSV_HEADER:
            raise self.FIELD_FORMAT_ERROR(
                path=path,
                row=1,
                reason=f"expected header {','.join(CSV_HEADER)}",
            )

        table = self._parse_rows(path=path, rows=rows[1:])
        nx, ny = self._grid_shape(path=path, table=table)
        grid = table.reshape(ny, nx, len(CSV_HEADER)).transpose(1, 0, 2)
        self._check_coordinates(path=path, grid=grid)
        self._check_spacing(path=path, grid=grid)
        field = Field(
            width=float(grid[-1, 0, 0] - grid[0, 0, 0]),
            height=float(grid[0, -1, 1] - grid[0, 0, 1]),
            values=grid[..., 2:],
        )
        if expected_grid is not None:
            self._check_grid(path=path, field=field, expected_grid=expected_grid)

        return field

    def _parse_rows(self, *, path: Path, rows: list[list[str]]) -> FloatArray:
        parsed: list[list[float]] = []
        for offset, row in enumerate(rows):
            number = offset + _FIRST_DATA_ROW
            if len(row) != len(CSV_HEADER):
                raise self.FIELD_FORMAT_ERROR(
                    path=path,
                    row=number,
                    reason=f"expected {len(CSV_HEADER)} cells, found {len(row)}",
                )
            parsed.append(
                [
                    self._parse_cell(path=path, row=number, column=column, cell=cell)
                    for column, cell in zip(CSV_HEADER, row, strict=True)
                ],
            )

        return np.array(parsed, dtype=np.float64).reshape(-1, len(CSV_HEADER))

    def _parse_cell(self, *, path: Path, row: int, column: str, cell: str) -> float:
        try:
            value = float(cell)
        except self.INVALID_NUMBER_ERROR:
            raise self.FIELD_FORMAT_ERROR(
                path=path,
                row=row,
                column=column,
                reason=f"{cell!r} is not a number",
            ) from None

        if not np.isfinite(value):
            raise self.FIELD_FORMAT_ERROR(
                path=path,
                row=row,
                column=column,
                reason=f"{cell!r} is not finite",
            )

        return value

    def _grid_shape(self, *, path: Path, table: FloatArray) -> tuple[int, int]:
        count = table.shape[0]
        if count == 0:
            raise self.FIELD_FORMAT_ERROR(path=path, row=_FIRST_DATA_ROW, reason="no data rows")

        first_line = table[:, 1] == table[0, 1]
        nx = count if first_line.all() else int(np.argmin(first_line))
        if nx < MIN_NODES_PER_AXIS or count % nx != 0 or count // nx < MIN_NODES_PER_AXIS:
            raise self.FIELD_FORMAT_ERROR(
                path=path,
                row=count + 1,
                reason=f"{count} rows do not form a grid of at least 3 x 3 nodes",
            )

        return nx, count // nx

    def _check_coordinates(self, *, path: Path, grid: FloatArray) -> None:
        x_mismatch = grid[:, :, 0] != grid[:, :1, 0]
        y_mismatch = grid[:, :, 1] != grid[:1, :, 1]
        for column, mismatch in (("x", x_mismatch), ("y", y_mismatch)):
            if mismatch.any():
                i, j = np.argwhere(mismatch.T)[0][::-1]
                raise self.FIELD_FORMAT_ERROR(
                    path=path,
                    row=int(j * grid.shape[0] + i) + _FIRST_DATA_ROW,
                    column=column,
                    reason="coordinates are not a tensor-product grid",
                )

    def _check_spacing(self, *, path: Path, grid: FloatArray) -> None:
        nx = grid.shape[0]
        for column, nodes, row_stride in (("x", grid[:, 0, 0], 1), ("y", grid[0, :, 1], nx)):
            steps = np.diff(nodes)
            mean_step = (nodes[-1] - nodes[0]) / steps.size
            irregular = (steps <= 0) | (np.abs(steps - mean_step) > CSV_SPACING_RTOL * mean_step)
            if irregular.any():
                node = int(np.argmax(irregular)) + 1
                raise self.FIELD_FORMAT_ERROR(
                    path=path,
                    row=node * row_stride + _FIRST_DATA_ROW,
                    column=column,
                    reason=f"{column} nodes are not increasing with uniform spacing",
                )

    def _check_grid(self, *, path: Path, field: Field, expected_grid: GridSpec) -> None:
        expected = (expected_grid.nx, expected_grid.ny, expected_grid.width, expected_grid.height)
        actual = (field.nx, field.ny, field.width, field.height)
        same_extent = all(
            abs(left - right) <= EXTENT_RTOL * max(abs(left), 1.0)
            for left, right in zip(expected[2:], actual[2:], strict=True)
        )
        if expected[:2] != actual[:2] or not same_extent:
            raise self.GRID_MISMATCH_ERROR(path=path, expected=expected, actual=actual)
