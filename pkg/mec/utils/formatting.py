"""Plain-text formatting for CLI output."""

from collections.abc import Iterable, Sequence


def format_masses(masses: Iterable[float], precision: int = 6, limit: int = 20) -> str:
    """Format a mass list as [a, b, ...], eliding past `limit` entries."""
    values = list(masses)
    shown = ", ".join(f"{m:.{precision}f}" for m in values[:limit])
    if len(values) > limit:
        shown += f", ... (+{len(values) - limit} more)"
    return f"[{shown}]"


def format_bits(value: float, precision: int = 6) -> str:
    """Format an entropy value in bits."""
    return f"{value:.{precision}f} bits"


def format_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Left-aligned fixed-width table."""
    cells = [[str(h) for h in headers]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(line.rstrip() for line in lines)


def _cell(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    if value is None:
        return "-"
    return str(value)
