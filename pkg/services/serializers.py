# serializers.py
import csv
import io
import json
import logging

from backend.compositions import format_composition
from backend.words import format_word

logger = logging.getLogger(__name__)

LAYOUTS = ("paper", "theorem")
FORMATS = ("text", "csv", "json")


def matrix_text(matrix, layout="paper"):
    """Rows of the matrix, "." for zero, right-justified and space-separated."""
    cells = [["." if value == 0 else str(value) for value in row] for row in matrix.rows(layout)]
    width = max(len(cell) for row in cells for cell in row)
    return "".join(" ".join(cell.rjust(width) for cell in row) + "\n" for row in cells)


def matrix_csv(matrix, layout="paper"):
    """Header row and column of composition labels; zeros written as 0."""
    labels = [format_composition(composition) for composition in matrix.order]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([f"{matrix.pair.value}/{layout}"] + labels)
    for label, row in zip(labels, matrix.rows(layout)):
        writer.writerow([label] + row)
    return buffer.getvalue()


def _witness_cells(matrix, layout):
    cells = []
    for (row, column), words in sorted(matrix.witnesses.items(), reverse=True):
        if layout == "paper":
            row, column = column, row
        cells.append({
            "row": format_composition(row),
            "column": format_composition(column),
            "words": [format_word(word) for word in words],
        })
    return cells


def matrix_record(matrix, layout="paper", witnesses=False):
    record = {
        "degree": matrix.n,
        "pair": matrix.pair.value,
        "layout": layout,
        "order": [format_composition(composition) for composition in matrix.order],
        "entries": matrix.rows(layout),
    }
    if witnesses:
        record["witnesses"] = _witness_cells(matrix, layout)
    return record


def matrix_json(matrix, layout="paper", witnesses=False):
    return json.dumps(matrix_record(matrix, layout, witnesses), indent=2)


def witness_text(matrix, layout="paper"):
    """One line per nonempty cell: "row | column: w1 w2 ..."."""
    lines = []
    for cell in _witness_cells(matrix, layout):
        lines.append(f"{cell['row']} | {cell['column']}: {' '.join(cell['words'])}")
    return "\n".join(lines) + "\n"


def render_matrix(matrix, layout="paper", fmt="text", witnesses=False):
    logger.debug(f"rendering {matrix!r} as {fmt} in {layout} layout")
    if fmt == "csv":
        return matrix_csv(matrix, layout)
    if fmt == "json":
        return matrix_json(matrix, layout, witnesses) + "\n"
    text = matrix_text(matrix, layout)
    if witnesses:
        text += "\n" + witness_text(matrix, layout)
    return text


def expansion_record(expression, basis, terms, text):
    return {
        "expression": expression,
        "basis": basis,
        "terms": [
            {"index": format_composition(key), "coefficient": str(value)}
            for key, value in sorted(terms.items(), reverse=True)
        ],
        "text": text,
    }
