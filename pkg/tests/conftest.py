import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


def cartan(kind: str, r: int) -> list[list[int]]:
    """Cartan matrix with a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    if kind in "ABC":
        for i in range(r - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if kind == "B" and r >= 2:
            a[r - 1][r - 2] = -2
        if kind == "C" and r >= 2:
            a[r - 2][r - 1] = -2
    elif kind == "D":
        for i in range(r - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif kind == "E":
        # 1-3-4-5-...-r chain with 2 attached to 4
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, r - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    elif kind == "F":
        a[0][1] = a[1][0] = -1
        a[1][2], a[2][1] = -1, -2
        a[2][3] = a[3][2] = -1
    elif kind == "G":
        a[0][1], a[1][0] = -1, -3
    else:
        raise ValueError(kind)
    return a


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
