from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from loveline import (
    AcquaintanceRecord,
    Interval,
    IntervalSet,
    SensationEpisode,
    Timeline,
    Valence,
    ValueJudgment,
)

FIXTURE_DIR = Path(__file__).parent / "fixtures"

WINDOW = Interval(Fraction(0), Fraction(10))


def build_timeline_a() -> Timeline:
    """Two agents; sensation [2,8) at intensity 9/10; judgment of it [3,7)."""
    return Timeline(
        agents=("sally", "john"),
        acquaintances=(AcquaintanceRecord("sally", "john", Fraction(0)),),
        sensations=(
            SensationEpisode(
                id="s1",
                bearer="sally",
                correlate="john",
                valence=Valence.POSITIVE,
                extent=IntervalSet((Interval(Fraction(2), Fraction(8)),)),
                intensity=Fraction(9, 10),
            ),
        ),
        judgments=(
            ValueJudgment(
                id="j1",
                agent="sally",
                target="s1",
                extent=IntervalSet((Interval(Fraction(3), Fraction(7)),)),
            ),
        ),
    )


def build_timeline_b() -> Timeline:
    """Timeline A without the acquaintance record."""
    base = build_timeline_a()
    return Timeline(
        agents=base.agents,
        sensations=base.sensations,
        judgments=base.judgments,
    )


def build_timeline_c() -> Timeline:
    """Timeline A with both extents widened to the whole window."""
    full = IntervalSet((Interval(Fraction(0), Fraction(10)),))
    base = build_timeline_a()
    return Timeline(
        agents=base.agents,
        acquaintances=base.acquaintances,
        sensations=(
            SensationEpisode(
                id="s1",
                bearer="sally",
                correlate="john",
                valence=Valence.POSITIVE,
                extent=full,
                intensity=Fraction(9, 10),
            ),
        ),
        judgments=(
            ValueJudgment(id="j1", agent="sally", target="s1", extent=full),
        ),
    )


@pytest.fixture
def timeline_a() -> Timeline:
    return build_timeline_a()


@pytest.fixture
def timeline_b() -> Timeline:
    return build_timeline_b()


@pytest.fixture
def timeline_c() -> Timeline:
    return build_timeline_c()


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURE_DIR


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion at the end."""
    from helpers import ACCEPTANCE_REPORT

    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
