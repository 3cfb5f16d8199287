"""Approximation-guarantee constants and checks."""

from mec.guarantees.concave import (
    MultCheck,
    check_mult_guarantee,
    closed_form_ratio,
    cost_monovariant_trace,
    cost_monovariant_violations,
    guarantee_factor,
    mult_guarantee_general,
    mult_ratio_two,
    power_table,
)
from mec.guarantees.constants import GuaranteeReport, guarantee_table, small_m_constant

__all__ = [
    "GuaranteeReport",
    "MultCheck",
    "check_mult_guarantee",
    "closed_form_ratio",
    "cost_monovariant_trace",
    "cost_monovariant_violations",
    "guarantee_factor",
    "guarantee_table",
    "mult_guarantee_general",
    "mult_ratio_two",
    "power_table",
    "small_m_constant",
]
