"""Fixed instances with known gaps between the greedy, the optimum and the bounds."""

from dataclasses import dataclass

from mec.core.models import LG_E_OVER_E, InstanceSet

_FLAT_PAIR = (
    (0.3199940773, 0.3199844734, 0.1200540976, 0.1200022716, 0.1199650801),
    (0.2000218248, 0.2000211548, 0.2000202369, 0.1999737730, 0.1999630105),
)

_PROFILE_PAIR = (
    (0.2128275903, 0.2122898591, 0.2119627146, 0.2119384365, 0.1509813995),
    (0.2747693214, 0.2739951951, 0.2739769942, 0.1161585898, 0.0610998995),
)

_GREEDY_PAIR = (
    (0.4081266587, 0.3060949942, 0.1530474970, 0.0765237476, 0.0382618746, 0.0179452279),
    (
        0.3060949942,
        0.2040633294,
        0.2040633294,
        0.1530474970,
        0.0765237476,
        0.0382618746,
        0.0179452278,
    ),
)

# a pair on which other published couplers lose more than lg(e)/e against the optimum
_COUNTER_PAIR = (
    (0.5540050843, 0.1984459548, 0.1288780486, 0.0396890356, 0.0789189118, 0.0000629649),
    (0.2770967899, 0.2769100227, 0.1984729975, 0.1288783386, 0.0789194408, 0.0397224105),
)


@dataclass(frozen=True)
class GapInstance:
    """`objective` names two quantities, as in "greedy-opt"; `expected` is their gap."""

    name: str
    distributions: tuple[tuple[float, ...], ...]
    objective: str
    expected: float | None = None
    ceiling: float | None = None

    def instance(self) -> InstanceSet:
        return InstanceSet.from_lists(self.distributions)


GAP_CATALOG: tuple[GapInstance, ...] = (
    GapInstance("greedy-over-meet", _FLAT_PAIR, "greedy-meet", expected=0.662463),
    GapInstance("opt-over-meet", _FLAT_PAIR, "opt-meet", expected=0.662405),
    GapInstance("opt-over-profile", _PROFILE_PAIR, "opt-profile", expected=0.389941),
    GapInstance("opt-over-major-profile", _PROFILE_PAIR, "opt-major-profile", expected=0.354485),
    GapInstance("greedy-over-opt", _GREEDY_PAIR, "greedy-opt", expected=0.395053),
    GapInstance("counter-example", _COUNTER_PAIR, "greedy-opt", ceiling=LG_E_OVER_E),
)


def get_gap_instance(name: str) -> GapInstance:
    for item in GAP_CATALOG:
        if item.name == name:
            return item
    raise KeyError(name)
