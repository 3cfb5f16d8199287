"""`mec constants`: additive and multiplicative guarantee constants."""

import argparse
from typing import Any

from mec.config import parse_int_range
from mec.core.models import LG_E
from mec.guarantees.concave import power_table
from mec.guarantees.constants import guarantee_table
from mec.utils.errors import InvalidInputError
from mec.utils.formatting import format_table


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("constants", help="approximation guarantee constants")
    parser.add_argument("--m-range", default="2..11", help='e.g. "2..11" or "2,3,5"')
    parser.add_argument("--power", type=float, default=None, help="exponent c of x**c")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.power is not None:
        report = power_table(args.power)
        rows = [
            ("r (m=2)", report.extras["r"]),
            ("r closed form", report.extras["closed_form_r"]),
            ("maximizing q/p", report.point[0]),
            ("factor m=2", report.value),
            ("factor any m", report.extras["general"]),
        ]
        print(format_table([report.parameter, "value"], rows))
        return 0

    try:
        m_values = parse_int_range(args.m_range)
    except ValueError as e:
        raise InvalidInputError(f"bad --m-range {args.m_range!r}: {e}") from e
    rows = [
        (report.parameter, report.value, LG_E, report.extras["any_m"])
        for report in guarantee_table(m_values)
    ]
    print(format_table(["m", "constant", "prior (lg e)", "any m"], rows))
    return 0
