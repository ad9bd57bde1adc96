"""Love-predicate evaluation over declarative timelines.

The predicate ``loves(S, P)`` is decided over a query interval ``i`` by
measuring how much of ``i`` is covered by love events. A love event is an
instant where two condition signals coincide:

* condition (i): S bears a positive sensation causally correlated with P,
  at or above the configured intensity floor;
* condition (ii): S judges valuable either such a sensation while it is
  live (a derived judgment of P) or P directly, and S has already become
  acquainted with P.

Inhibition episodes mask both signals while active. With ``s`` the measure
of love events inside ``i`` and ``c`` the measure of the remainder, the
predicate holds exactly when ``T < s/c``, or trivially when the remainder
is empty but love events are not. All arithmetic is exact.

:func:`evaluate` is the production route. :func:`tick_oracle` recomputes
the same verdict by brute-force quantification over discrete ticks and
exists so tests can cross-check the two routes; the two implementations
are deliberately kept independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagnostics import GranularityError, ThresholdError
from .intervals import Interval, IntervalSet, format_rational
from .model import Config, Timeline, Valence


@dataclass(frozen=True)
class Verdict:
    """Outcome of one predicate evaluation.

    Invariants: ``s + c`` equals the query interval's measure exactly;
    ``love_events`` is contained in the query interval and measures ``s``.
    """

    holds: bool
    s: Fraction
    c: Fraction
    threshold: Fraction
    love_events: IntervalSet


@dataclass(frozen=True)
class Trace:
    """Full evaluation signals, for explanations.

    ``condition_i`` and the two ``condition_ii`` parts are unrestricted by
    the query window (the parts are already acquaintance-clipped and
    inhibition-masked), so intersecting ``condition_i`` with the union of
    the parts and the window reproduces the verdict's love events.
    """

    condition_i: IntervalSet
    condition_ii_direct: IntervalSet
    condition_ii_derived: IntervalSet
    acquaintance_onset: Fraction | None
    inhibition_mask: IntervalSet
    first_failure: str | None


def _config_of(timeline: Timeline, config: Config | None) -> Config:
    return timeline.config if config is None else config


def inhibition_mask(subject: str, object_: str, timeline: Timeline) -> IntervalSet:
    """Instants where ``subject``'s inhibitory control blocks both signals.

    An episode applies when its agent is ``subject`` and it is either
    untargeted or aimed at ``object_``.
    """
    parts = [
        inh.extent
        for inh in timeline.inhibitions
        if inh.agent == subject and inh.toward in (None, object_)
    ]
    out = IntervalSet()
    for part in parts:
        out = out.union(part)
    return out


def condition_i_signal(
    subject: str,
    object_: str,
    timeline: Timeline,
    config: Config | None = None,
) -> IntervalSet:
    """Instants where condition (i) holds: qualifying positive sensation.

    Qualifying episodes have bearer ``subject``, correlate ``object_``,
    positive valence, and intensity at or above ``config.min_intensity``.
    The inhibition mask is subtracted.
    """
    cfg = _config_of(timeline, config)
    out = IntervalSet()
    for ep in timeline.sensations:
        if (
            ep.bearer == subject
            and ep.correlate == object_
            and ep.valence is Valence.POSITIVE
            and ep.intensity >= cfg.min_intensity
        ):
            out = out.union(ep.extent)
    return out.difference(inhibition_mask(subject, object_, timeline))


def acquaintance_onset(
    subject: str, object_: str, timeline: Timeline
) -> Fraction | None:
    """Earliest instant at which ``subject`` met ``object_``, if ever."""
    ats = [
        rec.at
        for rec in timeline.acquaintances
        if rec.subject == subject and rec.object == object_
    ]
    return min(ats) if ats else None


def condition_ii_components(
    subject: str,
    object_: str,
    timeline: Timeline,
    config: Config | None = None,
) -> tuple[IntervalSet, IntervalSet]:
    """The two parts of condition (ii): (derived, direct).

    Derived: for each positive sensation of ``subject`` correlated with
    ``object_`` and each judgment by ``subject`` of that episode, the
    overlap of judgment and sensation extents. The overlap requirement
    keeps the judged sensation live while judged, which is what lets the
    judgment reach ``object_`` through the sensation's correlate.
    Direct: extents of judgments by ``subject`` whose target is
    ``object_`` itself.

    Both parts come back clipped to the acquaintance onset and minus the
    inhibition mask; without acquaintance both are empty.
    """
    onset = acquaintance_onset(subject, object_, timeline)
    if onset is None:
        return IntervalSet(), IntervalSet()
    mask = inhibition_mask(subject, object_, timeline)

    derived = IntervalSet()
    for ep in timeline.sensations:
        if not (
            ep.bearer == subject
            and ep.correlate == object_
            and ep.valence is Valence.POSITIVE
        ):
            continue
        for j in timeline.judgments:
            if j.agent == subject and j.target == ep.id:
                derived = derived.union(j.extent.intersect(ep.extent))

    direct = IntervalSet()
    for j in timeline.judgments:
        if j.agent == subject and j.target == object_:
            direct = direct.union(j.extent)

    derived = derived.clip_from(onset).difference(mask)
    direct = direct.clip_from(onset).difference(mask)
    return derived, direct


def condition_ii_signal(
    subject: str,
    object_: str,
    timeline: Timeline,
    config: Config | None = None,
) -> IntervalSet:
    """Instants where condition (ii) holds: acquaintance-gated judgment."""
    derived, direct = condition_ii_components(subject, object_, timeline, config)
    return derived.union(direct)


def love_event_set(
    subject: str,
    object_: str,
    interval: Interval,
    timeline: Timeline,
    config: Config | None = None,
) -> IntervalSet:
    """Instants within ``interval`` where both conditions coincide."""
    window = IntervalSet((interval,))
    return window.intersect(
        condition_i_signal(subject, object_, timeline, config)
    ).intersect(condition_ii_signal(subject, object_, timeline, config))


def _check_threshold(threshold: Fraction) -> None:
    if threshold <= 0:
        raise ThresholdError(
            f"threshold {format_rational(threshold)} must be positive"
        )


def _decide(s: Fraction, c: Fraction, threshold: Fraction) -> bool:
    # c = 0 with s > 0 means love events fill the window; any finite
    # threshold is then exceeded. s = 0 never holds.
    if c == 0:
        return s > 0
    return threshold < s / c


def evaluate(
    subject: str,
    object_: str,
    interval: Interval,
    threshold: Fraction,
    timeline: Timeline,
    config: Config | None = None,
) -> Verdict:
    """Decide ``loves(subject, object_)`` over ``interval`` at ``threshold``.

    Raises :class:`ThresholdError` when ``threshold`` is not positive.
    Nonpositive query intervals cannot be represented: :class:`Interval`
    construction already rejects them.
    """
    _check_threshold(threshold)
    events = love_event_set(subject, object_, interval, timeline, config)
    s = events.measure()
    c = interval.measure - s
    return Verdict(
        holds=_decide(s, c, threshold),
        s=s,
        c=c,
        threshold=Fraction(threshold),
        love_events=events,
    )


def love_state_at(
    subject: str,
    object_: str,
    t: Fraction,
    interval: Interval,
    threshold: Fraction,
    timeline: Timeline,
    config: Config | None = None,
) -> tuple[bool, bool]:
    """Momentary states at instant ``t``, derivative of the interval verdict.

    Returns ``(in_love_event, within_loving_process)``. The process state
    is exactly the interval verdict; the event state is membership of ``t``
    in the love-event set. ``t`` is expected to lie within ``interval``.
    """
    verdict = evaluate(subject, object_, interval, threshold, timeline, config)
    return (Fraction(t) in verdict.love_events, verdict.holds)


_STAGE_NO_ACQUAINTANCE = "no acquaintance"
_STAGE_COND_I_EMPTY = "condition (i) empty"
_STAGE_COND_II_EMPTY = "condition (ii) empty"
_STAGE_RATIO = "ratio below threshold"


def explain(
    subject: str,
    object_: str,
    interval: Interval,
    threshold: Fraction,
    timeline: Timeline,
    config: Config | None = None,
) -> Trace:
    """Expose the signals behind a verdict and name the first failing stage.

    ``first_failure`` is judged within the query window, earliest stage
    first: no acquaintance, then an empty condition (i), then an empty
    condition (ii), then a ratio at or below the threshold; ``None`` when
    the predicate holds.
    """
    _check_threshold(threshold)
    cond_i = condition_i_signal(subject, object_, timeline, config)
    derived, direct = condition_ii_components(subject, object_, timeline, config)
    onset = acquaintance_onset(subject, object_, timeline)
    mask = inhibition_mask(subject, object_, timeline)
    verdict = evaluate(subject, object_, interval, threshold, timeline, config)

    window = IntervalSet((interval,))
    if onset is None:
        failure = _STAGE_NO_ACQUAINTANCE
    elif cond_i.intersect(window).is_empty():
        failure = _STAGE_COND_I_EMPTY
    elif derived.union(direct).intersect(window).is_empty():
        failure = _STAGE_COND_II_EMPTY
    elif not verdict.holds:
        failure = _STAGE_RATIO
    else:
        failure = None

    return Trace(
        condition_i=cond_i,
        condition_ii_direct=direct,
        condition_ii_derived=derived,
        acquaintance_onset=onset,
        inhibition_mask=mask,
        first_failure=failure,
    )


def _timeline_endpoints(timeline: Timeline, interval: Interval) -> list[Fraction]:
    points: list[Fraction] = [interval.start, interval.end]
    for rec in timeline.acquaintances:
        points.append(rec.at)
    for ep in timeline.sensations:
        for iv in ep.extent:
            points.extend((iv.start, iv.end))
    for j in timeline.judgments:
        for iv in j.extent:
            points.extend((iv.start, iv.end))
    for inh in timeline.inhibitions:
        for iv in inh.extent:
            points.extend((iv.start, iv.end))
    for q in timeline.queries:
        points.extend((q.interval.start, q.interval.end))
    return points


def _tick_in(t: Fraction, extent: IntervalSet) -> bool:
    # Raw endpoint comparison, bypassing the interval-set algebra on
    # purpose: the oracle must not share the production code path.
    return any(iv.start <= t < iv.end for iv in extent)


def tick_oracle(
    subject: str,
    object_: str,
    interval: Interval,
    threshold: Fraction,
    timeline: Timeline,
    granularity: Fraction,
    config: Config | None = None,
) -> Verdict:
    """Brute-force re-evaluation on a grid of ``granularity``-wide ticks.

    Every endpoint in the timeline and the query interval must be an exact
    multiple of ``granularity`` (else :class:`GranularityError`), so each
    tick is uniformly inside or outside every extent and per-tick
    quantification is exact. Must agree with :func:`evaluate` under that
    precondition.
    """
    _check_threshold(threshold)
    granularity = Fraction(granularity)
    if granularity <= 0:
        raise GranularityError(
            f"granularity {format_rational(granularity)} must be positive"
        )
    for point in _timeline_endpoints(timeline, interval):
        if (Fraction(point) / granularity).denominator != 1:
            raise GranularityError(
                f"granularity {format_rational(granularity)} does not divide "
                f"endpoint {format_rational(point)}"
            )
    cfg = _config_of(timeline, config)

    onset: Fraction | None = None
    for rec in timeline.acquaintances:
        if rec.subject == subject and rec.object == object_:
            if onset is None or rec.at < onset:
                onset = rec.at

    def masked(t: Fraction) -> bool:
        return any(
            inh.agent == subject
            and inh.toward in (None, object_)
            and _tick_in(t, inh.extent)
            for inh in timeline.inhibitions
        )

    def cond_i_at(t: Fraction) -> bool:
        return any(
            ep.bearer == subject
            and ep.correlate == object_
            and ep.valence is Valence.POSITIVE
            and ep.intensity >= cfg.min_intensity
            and _tick_in(t, ep.extent)
            for ep in timeline.sensations
        )

    def cond_ii_at(t: Fraction) -> bool:
        if onset is None or t < onset:
            return False
        for j in timeline.judgments:
            if j.agent != subject or not _tick_in(t, j.extent):
                continue
            if j.target == object_:
                return True
            for ep in timeline.sensations:
                if (
                    ep.id == j.target
                    and ep.bearer == subject
                    and ep.correlate == object_
                    and ep.valence is Valence.POSITIVE
                    and _tick_in(t, ep.extent)
                ):
                    return True
        return False

    tick_count = (interval.end - interval.start) / granularity
    assert tick_count.denominator == 1

    qualifying = 0
    runs: list[Interval] = []
    run_start: Fraction | None = None
    for k in range(int(tick_count)):
        t = interval.start + k * granularity
        hit = cond_i_at(t) and cond_ii_at(t) and not masked(t)
        if hit:
            qualifying += 1
            if run_start is None:
                run_start = t
        elif run_start is not None:
            runs.append(Interval(run_start, t))
            run_start = None
    if run_start is not None:
        runs.append(Interval(run_start, interval.end))

    s = qualifying * granularity
    c = (interval.end - interval.start) - s
    return Verdict(
        holds=_decide(s, c, threshold),
        s=s,
        c=c,
        threshold=Fraction(threshold),
        love_events=IntervalSet(tuple(runs)),
    )
