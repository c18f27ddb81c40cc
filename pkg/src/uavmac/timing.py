"""Slot-duration algebra for both handshake mechanisms.

Gives the channel-time cost of a successful exchange, a collision and a
post-collision timeout, the expected backoff/freeze slot counts of one full
pass through the retry chain, and the resulting traversal time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import BASIC, RTS_CTS, MacTiming
from .errors import DivergentFreezeError, UndefinedMixtureError


@dataclass(frozen=True)
class SlotDurations:
    """Busy-slot durations (us) for one access mechanism.

    Note t_success >= t_collision holds for basic access but not for
    rts_cts, where a collision burns only the short reservation frames.
    """

    t_success_us: float
    t_collision_us: float
    t_timeout_us: float
    mechanism: str


def success_duration(mechanism: str, timing: MacTiming) -> float:
    """Channel time consumed by one successful transmission.

    basic:   T_H + T_E + SIFS + T_ACK + DIFS + 2*delta
    rts_cts: T_RTS + T_CTS + T_H + T_E + 3*SIFS + T_ACK + DIFS
    """
    t = timing
    if mechanism == BASIC:
        return (t.header_us + t.payload_time_us + t.sifs_us + t.ack_us
                + t.difs_us + 2 * t.idle_slot_us)
    if mechanism == RTS_CTS:
        return (t.rts_us + t.cts_us + t.header_us + t.payload_time_us
                + 3 * t.sifs_us + t.ack_us + t.difs_us)
    raise ValueError(f"unknown mechanism {mechanism!r}")


def collision_duration(mechanism: str, timing: MacTiming) -> float:
    """Channel time consumed by one collision event.

    basic:   T_H + T_E + DIFS + delta
    rts_cts: T_RTS + SIFS + T_ACK + DIFS
    """
    t = timing
    if mechanism == BASIC:
        return t.header_us + t.payload_time_us + t.difs_us + t.idle_slot_us
    if mechanism == RTS_CTS:
        return t.rts_us + t.sifs_us + t.ack_us + t.difs_us
    raise ValueError(f"unknown mechanism {mechanism!r}")


def timeout_duration(mechanism: str, timing: MacTiming) -> float:
    """Extra wait a collider observes before sensing again.

    basic: SIFS + ACK timeout; rts_cts: SIFS + CTS timeout.
    """
    t = timing
    if mechanism == BASIC:
        return t.sifs_us + t.ack_timeout_us
    if mechanism == RTS_CTS:
        return t.sifs_us + t.cts_timeout_us
    raise ValueError(f"unknown mechanism {mechanism!r}")


def slot_durations(mechanism: str, timing: MacTiming) -> SlotDurations:
    return SlotDurations(
        t_success_us=success_duration(mechanism, timing),
        t_collision_us=collision_duration(mechanism, timing),
        t_timeout_us=timeout_duration(mechanism, timing),
        mechanism=mechanism,
    )


def expected_backoff_total(cw_min: int, retry_limit: int) -> float:
    """Mean number of backoff slots counted down over all stages:
    sum_{j=0..J} (2^j * W0 - 1) / 2."""
    return sum((2 ** j * cw_min - 1) / 2.0 for j in range(retry_limit + 1))


def expected_freeze(backoff_slots: float, busy_prob: float) -> float:
    """Mean number of frozen slots while counting down ``backoff_slots``:
    E(B) * q / (1 - q). Diverges as q -> 1."""
    if busy_prob >= 1.0:
        raise DivergentFreezeError(f"busy probability {busy_prob} >= 1")
    return backoff_slots * busy_prob / (1.0 - busy_prob)


@dataclass(frozen=True)
class TraversalInputs:
    """Network-level probabilities and chain parameters feeding the
    traversal time: q (channel busy during countdown), P_s (successful
    slot), P_b (any transmission), with P_s <= P_b."""

    busy_prob: float
    success_prob: float
    any_tx_prob: float
    cw_min: int
    retry_limit: int


def traversal_time(inputs: TraversalInputs, slots: SlotDurations,
                   idle_slot_us: float) -> float:
    """Expected time (us) for one packet to pass through every backoff stage.

    Delta = E(B)*delta + E(F)*[ (P_s/P_b) T_s + ((P_b-P_s)/P_b) T_c ]
            + J*(T_c + T_o)

    Each frozen slot costs the busy-period mixture; the J*(T_c+T_o) tail is
    the deterministic per-stage retry cost, taken as written. With q = 0
    there is no freezing so the mixture (and P_b) is irrelevant; otherwise
    P_b = 0 leaves the mixture undefined.
    """
    q = inputs.busy_prob
    if not 0.0 <= q < 1.0:
        raise DivergentFreezeError(f"busy probability {q} outside [0, 1)")
    if inputs.success_prob > inputs.any_tx_prob + 1e-15:
        raise ValueError("success_prob exceeds any_tx_prob")
    e_b = expected_backoff_total(inputs.cw_min, inputs.retry_limit)
    tail = inputs.retry_limit * (slots.t_collision_us + slots.t_timeout_us)
    if q == 0.0:
        return e_b * idle_slot_us + tail
    if inputs.any_tx_prob <= 0.0:
        raise UndefinedMixtureError(
            "freezing occurs (q > 0) but no transmissions (P_b = 0)")
    e_f = expected_freeze(e_b, q)
    share = inputs.success_prob / inputs.any_tx_prob
    mixture = share * slots.t_success_us + (1.0 - share) * slots.t_collision_us
    return e_b * idle_slot_us + e_f * mixture + tail
