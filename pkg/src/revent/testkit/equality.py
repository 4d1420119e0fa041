"""Canonical equality: RESs up to their closed enabling relation, CSs componentwise."""

from __future__ import annotations

from revent.analysis import cs_difference, res_difference
from revent.core import Cs, Res


def res_equal(a: Res, b: Res, bound: int | None = None) -> bool:
    return not res_difference(a, b, bound)


def cs_equal(a: Cs, b: Cs) -> bool:
    return not cs_difference(a, b)
