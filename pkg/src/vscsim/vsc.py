"""SNR-only secrecy estimate (VSC) computed from received signaling records.

A window of CSI reports from nearby senders stands in for the unknown
eavesdropper channel: the target's SNR plays the legitimate link and the
window-wide mean SNR plays the wiretap aggregate.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .units import db_to_linear, linear_to_db

ADEQUATE = "adequate"
INADEQUATE = "inadequate"

CSI_CSV_HEADER = ["timestamp_s", "sender_id", "snr_db", "chain_element_hex"]


@dataclass(frozen=True)
class CsiRecord:
    """One received signaling sample: who sent, when, at what linear SNR.

    chain_element optionally carries the sender's current identity-chain
    hash (hex) for later validation.
    """

    timestamp: float
    sender_id: str
    snr: float
    chain_element: str | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.timestamp):
            raise ValueError(f"timestamp must be finite, got {self.timestamp!r}")
        if not self.sender_id:
            raise ValueError("sender_id must be non-empty")
        if not (math.isfinite(self.snr) and self.snr > 0.0):
            raise ValueError(f"snr must be finite and > 0, got {self.snr!r}")


@dataclass(frozen=True)
class VscResult:
    """VSC for one candidate target within one window."""

    target_id: str
    vsc: float
    snr_xor: float
    m: int
    window_start: float = 0.0


def compute_vsc(
    window: Sequence[CsiRecord], target_id: str, exclude_target: bool = False
) -> VscResult:
    """log2(1 + SNR_target) - log2(1 + mean window SNR).

    The mean runs over every record in the window, the target's included;
    exclude_target=True switches to the leave-one-out reading.  With
    several records from the target its SNR is their mean.
    """
    if not window:
        raise ValueError("window must contain at least one record")
    target_snrs = [r.snr for r in window if r.sender_id == target_id]
    if not target_snrs:
        raise KeyError(f"no record from {target_id!r} in window")
    snr_ab = sum(target_snrs) / len(target_snrs)
    if exclude_target:
        rest = [r.snr for r in window if r.sender_id != target_id]
        if not rest:
            raise ValueError("exclude_target needs at least one record from another sender")
        snr_xor = sum(rest) / len(rest)
    else:
        snr_xor = sum(r.snr for r in window) / len(window)
    vsc = math.log2(1.0 + snr_ab) - math.log2(1.0 + snr_xor)
    return VscResult(target_id, vsc, snr_xor, len(window))


def windowed_stream(
    records: Sequence[CsiRecord], unit_time: float = 1.0
) -> list[VscResult]:
    """Split a time-ordered record stream into tumbling windows and emit one
    VscResult per window per distinct sender.

    Windows are aligned to multiples of unit_time; empty windows emit
    nothing.  Out-of-order timestamps are rejected rather than silently
    re-sorted.
    """
    if unit_time <= 0.0:
        raise ValueError(f"unit_time must be > 0, got {unit_time!r}")
    for prev, cur in zip(records, records[1:]):
        if cur.timestamp < prev.timestamp:
            raise ValueError(
                f"records out of order at t={cur.timestamp!r} after t={prev.timestamp!r}"
            )
    buckets: dict[int, list[CsiRecord]] = {}
    for rec in records:
        buckets.setdefault(math.floor(rec.timestamp / unit_time), []).append(rec)
    results: list[VscResult] = []
    for idx in sorted(buckets):
        window = buckets[idx]
        start = idx * unit_time
        for sender in sorted({r.sender_id for r in window}):
            res = compute_vsc(window, sender)
            results.append(VscResult(res.target_id, res.vsc, res.snr_xor, res.m, start))
    return results


def security_verdict(vsc_bits: float, reference_bits: float) -> str:
    """ADEQUATE when the estimate meets the reference threshold (inclusive)."""
    return ADEQUATE if vsc_bits >= reference_bits else INADEQUATE


def write_csi_csv(path: str | Path, records: Iterable[CsiRecord]) -> None:
    """Persist records with dB-valued SNR, one row per record."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSI_CSV_HEADER)
        for rec in records:
            writer.writerow(
                [
                    repr(float(rec.timestamp)),
                    rec.sender_id,
                    repr(linear_to_db(rec.snr)),
                    rec.chain_element or "",
                ]
            )


def read_csi_csv(path: str | Path) -> list[CsiRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSI_CSV_HEADER:
            raise ValueError(f"unexpected CSI header {header!r}")
        out = []
        for row in reader:
            if len(row) != 4:
                raise ValueError(f"expected 4 fields, got {row!r}")
            ts, sender, snr_db, chain = row
            out.append(
                CsiRecord(float(ts), sender, db_to_linear(float(snr_db)), chain or None)
            )
    return out
