from locally_stable.qstate import StateSet, is_stopper

EMPTY = "."
CLASH = "*"

Cell = tuple[int, int]


def label_grid(s: StateSet) -> dict[Cell, str]:
    """Cells of a bipartite set marked with the subscript of the state covering them"""
    if s.shape.n != 2:
        raise ValueError(f"label grids need two parties, got {s.shape.n}")
    grid: dict[Cell, str] = {}
    for name, state in zip(s.names, s.states):
        if is_stopper(state):
            continue
        mark = name.removeprefix("phi_")
        for term in state.terms:
            cell = (term.labels[0], term.labels[1])
            grid[cell] = CLASH if cell in grid else mark
    return grid


def grid_repr(grid: dict[Cell, str], rows: int, columns: int) -> str:
    """Rows are labels of the first party"""
    width = max((len(mark) for mark in grid.values()), default=1)
    text = ""
    for x in range(rows):
        row = " ".join(grid.get((x, y), EMPTY).rjust(width) for y in range(columns))
        text += f"{x:>3d}: {row}\n"
    return text
