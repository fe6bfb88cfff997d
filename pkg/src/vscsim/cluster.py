"""Security-cluster protocol: pick the best-protected target, negotiate a
link up to the reference threshold, admit members by hash-chain identity
and VSC level, and keep a replayable formation history.

Identity rests on a SHA-256 chain over the vehicle's VIN: the anchor is
the chain head, and a vehicle proves itself by revealing the element at
its claimed position, which hashes forward to the anchor.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

from .scenarios import HighwayScenario, RelayScenario, highway_secrecy, relay_secrecy
from .vsc import CsiRecord, VscResult, compute_vsc

_DIGEST_SIZE = hashlib.sha256().digest_size


def _hash_once(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def _hash_times(data: bytes, times: int) -> bytes:
    for _ in range(times):
        data = _hash_once(data)
    return data


def vin_is_well_formed(vin: str) -> bool:
    """17 alphanumeric characters."""
    return len(vin) == 17 and vin.isalnum()


@dataclass(frozen=True)
class VehicleIdentity:
    """A vehicle's identity claim: VIN, chain anchor, chain length.

    Identities parsed off the wire carry vin = "" because the VIN never
    leaves the vehicle; such claims are checked by challenge-response
    (validate_identity) rather than by anchor recomputation.
    """

    vehicle_id: str
    vin: str
    chain_anchor: bytes
    chain_length: int

    def __post_init__(self) -> None:
        if not self.vehicle_id:
            raise ValueError("vehicle_id must be non-empty")
        if self.chain_length < 1:
            raise ValueError(f"chain_length must be >= 1, got {self.chain_length!r}")
        if len(self.chain_anchor) != _DIGEST_SIZE:
            raise ValueError(f"chain_anchor must be {_DIGEST_SIZE} bytes")


def make_identity(vehicle_id: str, vin: str, chain_length: int) -> VehicleIdentity:
    """Build an identity whose anchor is the VIN hashed chain_length times."""
    if not vin_is_well_formed(vin):
        raise ValueError(f"VIN must be 17 alphanumeric characters, got {vin!r}")
    if chain_length < 1:
        raise ValueError(f"chain_length must be >= 1, got {chain_length!r}")
    anchor = _hash_times(vin.encode("ascii"), chain_length)
    return VehicleIdentity(vehicle_id, vin, anchor, chain_length)


def chain_element(vin: str, position: int) -> bytes:
    """The chain value a vehicle reveals at a position: VIN hashed position times."""
    if position < 0:
        raise ValueError(f"position must be >= 0, got {position!r}")
    return _hash_times(vin.encode("ascii"), position)


def identity_is_valid(identity: VehicleIdentity) -> bool:
    """Registry-side check: VIN well formed and anchor consistent with it."""
    if not vin_is_well_formed(identity.vin):
        return False
    return _hash_times(identity.vin.encode("ascii"), identity.chain_length) == identity.chain_anchor


def validate_identity(claim: VehicleIdentity, revealed_preimage: bytes, position: int) -> bool:
    """Challenge-response check of a revealed chain element.

    Hashing the preimage (chain_length - position) more times must land
    exactly on the claimed anchor.
    """
    if not isinstance(revealed_preimage, (bytes, bytearray)):
        raise TypeError("revealed_preimage must be bytes")
    if not 0 <= position < claim.chain_length:
        raise ValueError(
            f"position must be in [0, {claim.chain_length}), got {position!r}"
        )
    return _hash_times(bytes(revealed_preimage), claim.chain_length - position) == claim.chain_anchor


def make_identity_exchange(vehicle_id: str, vin: str, chain_length: int, position: int) -> dict:
    """Wire document a vehicle sends to prove itself; the VIN stays local."""
    ident = make_identity(vehicle_id, vin, chain_length)
    if not 0 <= position < chain_length:
        raise ValueError(f"position must be in [0, {chain_length}), got {position!r}")
    return {
        "vehicle_id": vehicle_id,
        "anchor_hex": ident.chain_anchor.hex(),
        "chain_length": chain_length,
        "position": position,
        "preimage_hex": chain_element(vin, position).hex(),
    }


def verify_identity_exchange(doc: dict) -> bool:
    """Parse and check a received identity document; malformed hex raises."""
    try:
        vehicle_id = doc["vehicle_id"]
        anchor = bytes.fromhex(doc["anchor_hex"])
        chain_length = int(doc["chain_length"])
        position = int(doc["position"])
        preimage = bytes.fromhex(doc["preimage_hex"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed identity exchange: {exc}") from exc
    claim = VehicleIdentity(vehicle_id, "", anchor, chain_length)
    return validate_identity(claim, preimage, position)


# --- target selection and threshold negotiation -------------------------------


def sc_select(window: Sequence[CsiRecord]) -> str:
    """Pick the sender whose VSC is highest; ties go to the smallest id."""
    senders = sorted({r.sender_id for r in window})
    if not senders:
        raise ValueError("window must contain at least one record")
    results = [compute_vsc(window, s) for s in senders]
    best = min(results, key=lambda res: (-res.vsc, res.target_id))
    return best.target_id


@dataclass(frozen=True)
class SecrecyKnobs:
    """Adjustments a negotiating host may apply, in this fixed order:
    slow down, raise power, fall back to the relay."""

    speed_step: float
    power_step_db: float
    relay_available: bool = False
    max_iterations: int = 8

    def __post_init__(self) -> None:
        if self.speed_step <= 0.0:
            raise ValueError(f"speed_step must be > 0, got {self.speed_step!r}")
        if self.power_step_db <= 0.0:
            raise ValueError(f"power_step_db must be > 0, got {self.power_step_db!r}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations!r}")


@dataclass(frozen=True)
class RelayOption:
    """Relay fallback parameters: its transmit power and its power gains
    toward the receiver and the eavesdropper."""

    p_r: float
    h_rb_sq: float
    h_re_sq: float

    def __post_init__(self) -> None:
        if self.p_r < 0.0:
            raise ValueError(f"p_r must be >= 0, got {self.p_r!r}")
        if self.h_rb_sq < 0.0 or self.h_re_sq < 0.0:
            raise ValueError("relay gains must be >= 0")


class AdjustableHighwayLink:
    """A controllable legitimate link evaluated through the highway model.

    Speed and power edits mutate the underlying scenario; enabling the
    relay re-routes evaluation through the interference form with the
    same geometry-derived gains.
    """

    def __init__(self, scenario: HighwayScenario, relay: RelayOption | None = None):
        self._scenario = scenario
        self._relay = relay
        self.relay_enabled = False

    @property
    def scenario(self) -> HighwayScenario:
        return self._scenario

    def evaluate(self) -> float:
        if not self.relay_enabled:
            return highway_secrecy(self._scenario)
        s = self._scenario
        d = s.v * s.tau
        if d <= 0.0:
            raise ValueError("v*tau must be > 0")
        a2 = 2.0 * s.params.alpha
        assert self._relay is not None
        return relay_secrecy(
            RelayScenario(
                p_a=s.params.p_over_n0,
                p_r=self._relay.p_r,
                h_ab_sq=d**-a2,
                h_rb_sq=self._relay.h_rb_sq,
                h_ae_sq=s.r**-a2,
                h_re_sq=self._relay.h_re_sq,
            )
        )

    def can_decrease_speed(self, step: float) -> bool:
        return self._scenario.v - step > 0.0

    def decrease_speed(self, step: float) -> None:
        if not self.can_decrease_speed(step):
            raise ValueError("speed decrease would close the headway distance")
        self._scenario = replace(self._scenario, v=self._scenario.v - step)

    def increase_power(self, step_db: float) -> None:
        factor = 10.0 ** (step_db / 10.0)
        params = replace(self._scenario.params, p_over_n0=self._scenario.params.p_over_n0 * factor)
        self._scenario = replace(self._scenario, params=params)

    def can_enable_relay(self) -> bool:
        return self._relay is not None and not self.relay_enabled

    def enable_relay(self) -> None:
        if not self.can_enable_relay():
            raise ValueError("no relay available or relay already enabled")
        self.relay_enabled = True


@dataclass(frozen=True)
class NegotiationResult:
    connected: bool
    target_id: str
    iterations: int
    final_vsc: float


def rsc_negotiate(
    window: Sequence[CsiRecord],
    rsc: float,
    knobs: SecrecyKnobs,
    env: AdjustableHighwayLink,
) -> NegotiationResult:
    """Drive the link secrecy up to the reference threshold RSC.

    Each iteration re-evaluates the link; on a shortfall exactly one
    adjustment is applied, cycling through the knob order and skipping
    knobs that cannot act (speed already minimal, relay absent or on).
    Failure after max_iterations is an ordinary outcome, not an error.
    """
    target = sc_select(window)
    cycle = ("speed", "power", "relay")
    pointer = 0
    vsc = float("-inf")
    for iteration in range(1, knobs.max_iterations + 1):
        vsc = env.evaluate()
        if vsc >= rsc:
            return NegotiationResult(True, target, iteration, vsc)
        if iteration == knobs.max_iterations:
            break
        for _ in range(len(cycle)):
            knob = cycle[pointer]
            pointer = (pointer + 1) % len(cycle)
            if knob == "speed" and env.can_decrease_speed(knobs.speed_step):
                env.decrease_speed(knobs.speed_step)
                break
            if knob == "power":
                env.increase_power(knobs.power_step_db)
                break
            if knob == "relay" and knobs.relay_available and env.can_enable_relay():
                env.enable_relay()
                break
    return NegotiationResult(False, target, knobs.max_iterations, vsc)


# --- cluster formation and history --------------------------------------------


@dataclass(frozen=True)
class ClusterState:
    """A formed cluster: members with their admission-time VSC, thresholds."""

    cluster_id: str
    members: tuple[tuple[str, float], ...]
    rsc: float
    secondary_rsc: float
    formed_at: float

    @property
    def member_ids(self) -> frozenset[str]:
        return frozenset(mid for mid, _ in self.members)


def form_cluster(
    candidates: Sequence[tuple[VehicleIdentity, VscResult]],
    rsc: float,
    secondary_rsc: float,
    cluster_id: str = "cluster-0",
    formed_at: float = 0.0,
) -> tuple[ClusterState, frozenset[str]]:
    """Partition candidates into members, pseudo-cluster, and excluded.

    Members hold a valid identity and VSC >= RSC; the pseudo set holds a
    valid identity with secondary RSC <= VSC < RSC (both bounds checked
    inclusively on the left).  Everyone else is excluded.  Pseudo members
    are promoted only by re-running formation with fresh measurements.
    """
    if secondary_rsc > rsc:
        raise ValueError("secondary_rsc must not exceed rsc")
    seen: set[str] = set()
    members: dict[str, float] = {}
    pseudo: set[str] = set()
    for ident, res in candidates:
        if ident.vehicle_id in seen:
            raise ValueError(f"duplicate candidate {ident.vehicle_id!r}")
        seen.add(ident.vehicle_id)
        if not identity_is_valid(ident):
            continue
        if res.vsc >= rsc:
            members[ident.vehicle_id] = res.vsc
        elif res.vsc >= secondary_rsc:
            pseudo.add(ident.vehicle_id)
    state = ClusterState(
        cluster_id, tuple(sorted(members.items())), rsc, secondary_rsc, formed_at
    )
    return state, frozenset(pseudo)


@dataclass(frozen=True)
class ClusterRecord:
    ts: float
    cluster_id: str
    members: tuple[tuple[str, float], ...]
    rsc: float
    secondary_rsc: float


class ClusterHistory:
    """Append-only formation log, persisted as one JSON object per line."""

    def __init__(self, records: Iterable[ClusterRecord] = ()):
        self._records: list[ClusterRecord] = list(records)

    @property
    def records(self) -> tuple[ClusterRecord, ...]:
        return tuple(self._records)

    def append(self, record: ClusterRecord) -> None:
        self._records.append(record)

    def append_state(self, state: ClusterState) -> None:
        self.append(
            ClusterRecord(
                state.formed_at, state.cluster_id, state.members, state.rsc, state.secondary_rsc
            )
        )

    def replay(self) -> list[ClusterState]:
        """Rebuild the cluster state sequence exactly as it was recorded."""
        return [
            ClusterState(r.cluster_id, r.members, r.rsc, r.secondary_rsc, r.ts)
            for r in self._records
        ]

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for r in self._records:
                doc = {
                    "ts": r.ts,
                    "cluster_id": r.cluster_id,
                    "members": [{"id": mid, "vsc": v} for mid, v in r.members],
                    "rsc": r.rsc,
                    "secondary_rsc": r.secondary_rsc,
                }
                fh.write(json.dumps(doc, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "ClusterHistory":
        records = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                doc = json.loads(line)
                records.append(
                    ClusterRecord(
                        float(doc["ts"]),
                        doc["cluster_id"],
                        tuple((m["id"], float(m["vsc"])) for m in doc["members"]),
                        float(doc["rsc"]),
                        float(doc["secondary_rsc"]),
                    )
                )
        return cls(records)


def history_fallback(history: ClusterHistory, candidate_ids: Iterable[str]) -> str | None:
    """When no candidate clears the thresholds, prefer whoever was most
    recently co-clustered with us; inside one record the highest recorded
    VSC wins, then the smallest id.  None when history offers nothing."""
    wanted = set(candidate_ids)
    for record in reversed(history.records):
        present = [(mid, v) for mid, v in record.members if mid in wanted]
        if present:
            return min(present, key=lambda p: (-p[1], p[0]))[0]
    return None


# --- consensus-node candidate selection ---------------------------------------


def select_consensus_candidates(
    responses: Sequence[tuple[str, float]],
    threshold: float,
    window: Sequence[CsiRecord] | None = None,
    tolerance: float = 0.1,
) -> list[str]:
    """Vehicles whose claimed VSC exceeds the threshold, best first.

    When the host holds CSI for a responder, its claim is cross-checked
    against the host-side VSC and dropped on a mismatch beyond the
    tolerance.  Ties order by vehicle id.
    """
    if tolerance < 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance!r}")
    seen: set[str] = set()
    kept: list[tuple[str, float]] = []
    for vehicle_id, claimed in responses:
        if vehicle_id in seen:
            raise ValueError(f"duplicate response from {vehicle_id!r}")
        seen.add(vehicle_id)
        if claimed <= threshold:
            continue
        if window is not None and any(r.sender_id == vehicle_id for r in window):
            host_side = compute_vsc(window, vehicle_id).vsc
            if abs(claimed - host_side) > tolerance:
                continue
        kept.append((vehicle_id, claimed))
    kept.sort(key=lambda p: (-p[1], p[0]))
    return [vehicle_id for vehicle_id, _ in kept]


def submit_to_consensus(candidate_ids: Sequence[str]) -> None:
    """Hand the ranked candidates to the ledger layer.

    Block assembly and agreement live outside this package; this stub
    exists so callers have a stable seam and does nothing.
    """
    return None
