"""Fixtures, small-structure generators and canonical equality."""

from revent.testkit.enumerate import enumerate_structures
from revent.testkit.equality import cs_equal, res_equal
from revent.testkit.fixtures import Fixture, FixtureId, all_fixtures, cspro_drawn, fixture, fixture_record

__all__ = [
    "Fixture",
    "FixtureId",
    "all_fixtures",
    "cs_equal",
    "cspro_drawn",
    "enumerate_structures",
    "fixture",
    "fixture_record",
    "res_equal",
]
