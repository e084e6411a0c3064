"""Business impact analysis targets and compliance checking.

A BIA fixes per-agent recovery targets (RPO, RTO, optional WRT and data
loss ceiling).  This module compares measured or projected metrics against
those targets and produces a verdict per metric.  Time-budget arithmetic:
MTD = RTO + WRT.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError
from .metrics import HOURS_PER_DAY, Projection


def mtd(rto_h: float, wrt_h: float) -> float:
    """Maximum tolerable downtime: recovery time plus work recovery time."""
    if rto_h < 0 or wrt_h < 0:
        raise DomainError(f"rto_h and wrt_h must be >= 0, got {rto_h} and {wrt_h}")
    return rto_h + wrt_h


@dataclass(frozen=True)
class BiaTargets:
    """Recovery targets for one backup agent.

    ``recovery_points_scheme`` is an opaque vendor string kept verbatim.
    ``cloud_tiering_threshold_days`` only applies to hybrid appliances.
    ``max_data_loss_mb`` holds the tolerable data loss, when the BIA
    states one.
    """

    agent: str
    backup_frequency_days: float = 1.0
    backup_retention_days: int = 14
    recovery_points_scheme: str = ""
    cloud_tiering_threshold_days: int | None = None
    rpo_target_days: float | None = None
    rto_target_h: float | None = None
    wrt_h: float | None = None
    max_data_loss_mb: float | None = None

    def __post_init__(self):
        if self.backup_frequency_days <= 0:
            raise DomainError(f"backup_frequency_days must be > 0, got {self.backup_frequency_days}")
        if self.backup_retention_days <= 0:
            raise DomainError(f"backup_retention_days must be > 0, got {self.backup_retention_days}")
        for name in ("cloud_tiering_threshold_days", "rpo_target_days", "rto_target_h", "max_data_loss_mb"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise DomainError(f"{name} must be > 0 when given, got {value}")
        if self.wrt_h is not None and self.wrt_h < 0:
            raise DomainError(f"wrt_h must be >= 0 when given, got {self.wrt_h}")


class Relation(str, Enum):
    AT_MOST = "<="
    AT_LEAST = ">="


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_EVALUABLE = "N/A"


@dataclass(frozen=True)
class Quantity:
    """A value with a unit; compliance compares like units only."""

    value: float
    unit: str

    def __str__(self) -> str:
        return f"{self.value:.6g} {self.unit}"


@dataclass(frozen=True)
class ComplianceVerdict:
    """Outcome of comparing one measured metric against its target."""

    metric: str
    measured: Quantity | None
    target: Quantity | None
    relation: Relation
    status: Status


def check(
    metric: str,
    measured: Quantity | None,
    target: Quantity | None,
    relation: Relation = Relation.AT_MOST,
) -> ComplianceVerdict:
    """Compare a measurement against a target; equality counts as a pass.

    A missing measurement or target yields a NOT_EVALUABLE verdict instead
    of an error.
    """
    if measured is None or target is None:
        return ComplianceVerdict(metric, measured, target, relation, Status.NOT_EVALUABLE)
    if measured.unit != target.unit:
        raise DomainError(
            f"{metric}: cannot compare {measured.unit!r} against {target.unit!r}"
        )
    if relation is Relation.AT_MOST:
        ok = measured.value <= target.value
    else:
        ok = measured.value >= target.value
    return ComplianceVerdict(metric, measured, target, relation, Status.PASS if ok else Status.FAIL)


@dataclass(frozen=True)
class MeasuredMetrics:
    """Metrics extracted from a simulation run or projection.

    Times are hours; keys name the backup job or restore source.  The
    achieved RPO defaults to the backup frequency (worst-case age of the
    newest copy) when backups ran but no explicit value is given.
    """

    backup_times_h: Mapping[str, float] = field(default_factory=dict)
    restore_times_h: Mapping[str, float] = field(default_factory=dict)
    achieved_rpo_days: float | None = None
    data_loss_mb: float | None = None

    @classmethod
    def from_projection(
        cls,
        projection: Projection,
        achieved_rpo_days: float | None = None,
        data_loss_mb: float | None = None,
    ) -> "MeasuredMetrics":
        return cls(
            backup_times_h=projection.backup_times_h,
            restore_times_h=projection.restore_times_h,
            achieved_rpo_days=achieved_rpo_days,
            data_loss_mb=data_loss_mb,
        )


@dataclass(frozen=True)
class ComplianceReport:
    """All verdicts for one scenario plus the MTD when derivable."""

    scenario: str
    verdicts: tuple[ComplianceVerdict, ...]
    mtd_hours: float | None = None

    @property
    def failures(self) -> tuple[ComplianceVerdict, ...]:
        return tuple(v for v in self.verdicts if v.status is Status.FAIL)

    @property
    def compliant(self) -> bool:
        return not self.failures


def evaluate(measured: MeasuredMetrics, targets: BiaTargets, scenario: str = "") -> ComplianceReport:
    """Produce one verdict per target-relevant metric; never raises on gaps.

    Restore times are checked against the RTO target, backup times against
    the backup window (one copy must finish within a backup period), the
    achieved RPO against the RPO target, and data loss against the ceiling
    when the BIA defines one.  MTD is reported when a WRT is set and at
    least one restore time was measured, using the fastest restore path.
    """
    verdicts: list[ComplianceVerdict] = []

    rto_target = (
        Quantity(targets.rto_target_h, "h") if targets.rto_target_h is not None else None
    )
    if measured.restore_times_h:
        for label in sorted(measured.restore_times_h):
            verdicts.append(
                check(
                    f"restore time ({label})",
                    Quantity(measured.restore_times_h[label], "h"),
                    rto_target,
                )
            )
    else:
        verdicts.append(check("restore time", None, rto_target))

    window = Quantity(targets.backup_frequency_days * HOURS_PER_DAY, "h")
    if measured.backup_times_h:
        for label in sorted(measured.backup_times_h):
            verdicts.append(
                check(
                    f"backup time ({label})",
                    Quantity(measured.backup_times_h[label], "h"),
                    window,
                )
            )
    else:
        verdicts.append(check("backup time", None, window))

    achieved_rpo = measured.achieved_rpo_days
    if achieved_rpo is None and measured.backup_times_h:
        achieved_rpo = targets.backup_frequency_days
    rpo_target = (
        Quantity(targets.rpo_target_days, "days") if targets.rpo_target_days is not None else None
    )
    verdicts.append(
        check(
            "achieved RPO",
            Quantity(achieved_rpo, "days") if achieved_rpo is not None else None,
            rpo_target,
        )
    )

    if targets.max_data_loss_mb is not None:
        verdicts.append(
            check(
                "data loss",
                Quantity(measured.data_loss_mb, "MB") if measured.data_loss_mb is not None else None,
                Quantity(targets.max_data_loss_mb, "MB"),
            )
        )

    mtd_hours = None
    if targets.wrt_h is not None and measured.restore_times_h:
        mtd_hours = mtd(min(measured.restore_times_h.values()), targets.wrt_h)

    return ComplianceReport(scenario=scenario, verdicts=tuple(verdicts), mtd_hours=mtd_hours)
