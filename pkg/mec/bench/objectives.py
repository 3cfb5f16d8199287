"""Named entropy quantities and gap objectives between them."""

from collections.abc import Callable

from mec.bounds.registry import lower_bound
from mec.core.entropy import entropy
from mec.core.models import InstanceSet
from mec.exact.dp import dp_exact
from mec.greedy.coupler import greedy_sizes
from mec.utils.errors import InvalidInputError, UnsupportedError


def _greedy(s: InstanceSet) -> float:
    return entropy(greedy_sizes(s))


def _opt(s: InstanceSet) -> float:
    if s.m != 2:
        raise UnsupportedError(f"the optimum is computed for m=2 only, got m={s.m}")
    return dp_exact(s.dists[0], s.dists[1], reconstruct=False).value


QUANTITIES: dict[str, Callable[[InstanceSet], float]] = {
    "greedy": _greedy,
    "opt": _opt,
    "meet": lambda s: lower_bound(s, "meet"),
    "profile": lambda s: lower_bound(s, "profile"),
    "major-profile": lambda s: lower_bound(s, "major-profile"),
}


def parse_objective(text: str) -> tuple[str, str]:
    """Split "a-b" into two known quantities; names may contain hyphens."""
    key = text.strip().lower()
    for cut in range(1, len(key)):
        if key[cut] != "-":
            continue
        left, right = key[:cut], key[cut + 1 :]
        if left in QUANTITIES and right in QUANTITIES:
            return left, right
    raise InvalidInputError(
        f"bad objective {text!r}; use <a>-<b> with a, b in {', '.join(QUANTITIES)}"
    )


def evaluate_gap(s: InstanceSet, objective: str) -> float:
    left, right = parse_objective(objective)
    return QUANTITIES[left](s) - QUANTITIES[right](s)
