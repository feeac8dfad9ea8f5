import csv
import io
import json
import os

from backend.statistics_matrices import Pair, transition_matrix
from services.serializers import (
    expansion_record,
    matrix_csv,
    matrix_record,
    matrix_text,
    render_matrix,
    witness_text,
)

def read_golden(golden_dir, name):
    with open(os.path.join(golden_dir, name)) as handle:
        return handle.read()

def test_matrix_text_matches_golden_files(golden_dir):
    """Test the text rendering against the published matrices"""
    for pair in (Pair.RL, Pair.RPSI):
        for n in (3, 4):
            expected = read_golden(golden_dir, f"M{n}_{pair.value}.txt")
            assert matrix_text(transition_matrix(pair, n)) == expected

def test_matrix_text_theorem_layout():
    """Test the transposed rendering"""
    text = matrix_text(transition_matrix(Pair.RPSI, 3), "theorem")
    assert text.splitlines()[0] == "1 1 1 1"

def test_matrix_csv():
    """Test the CSV header, labels and zeros"""
    text = matrix_csv(transition_matrix(Pair.RL, 3))
    assert text.splitlines()[0] == 'RL/paper,[3],"[2,1]","[1,2]","[1,1,1]"'
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["RL/paper", "[3]", "[2,1]", "[1,2]", "[1,1,1]"]
    assert rows[1] == ["[3]", "1", "0", "0", "0"]
    assert rows[2] == ["[2,1]", "0", "2", "1", "0"]
    assert len(rows) == 5

def test_matrix_record():
    """Test the JSON record"""
    record = matrix_record(transition_matrix(Pair.RPSI, 3))
    assert record["degree"] == 3
    assert record["pair"] == "RPsi"
    assert record["layout"] == "paper"
    assert record["order"] == ["[3]", "[2,1]", "[1,2]", "[1,1,1]"]
    assert record["entries"][3] == [1, 2, 2, 1]
    assert "witnesses" not in record

def test_witnesses_in_paper_orientation():
    """Test that witness cells are listed in the requested layout"""
    matrix = transition_matrix(Pair.RL, 3, witnesses=True)
    record = json.loads(render_matrix(matrix, "paper", "json", witnesses=True))
    cells = {(cell["row"], cell["column"]): cell["words"] for cell in record["witnesses"]}
    assert cells[("[2,1]", "[1,2]")] == ["231"]
    assert cells[("[2,1]", "[2,1]")] == ["132", "312"]
    theorem = witness_text(matrix, "theorem")
    assert "[1,2] | [2,1]: 231" in theorem.splitlines()

def test_render_matrix_text_with_witnesses(golden_dir):
    """Test that witnesses follow the matrix in text output"""
    matrix = transition_matrix(Pair.RPSI, 3, witnesses=True)
    text = render_matrix(matrix, witnesses=True)
    assert text.startswith(read_golden(golden_dir, "M3_RPsi.txt") + "\n")
    assert "[2,1] | [2,1]: 121 221" in text.splitlines()

def test_expansion_record():
    """Test the JSON record of an expansion"""
    record = expansion_record("R[1,1]", "Psi", {(1, 1): 1}, "1*Psi[1,1]")
    assert record == {
        "expression": "R[1,1]",
        "basis": "Psi",
        "terms": [{"index": "[1,1]", "coefficient": "1"}],
        "text": "1*Psi[1,1]",
    }
