"""Backup/restore rate metrics and data-volume projections.

All quantities use a single internal unit system: megabytes (decimal),
seconds, and decimal gigabytes (GB = MB / 1000).  Every function here is
pure, so the module is safe for concurrent use.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

MB_PER_GB = 1000.0  # decimal gigabytes throughout
SECONDS_PER_HOUR = 3600.0
HOURS_PER_DAY = 24.0


def mb_to_gb(mb: float) -> float:
    return mb / MB_PER_GB


def seconds_to_hours(seconds: float) -> float:
    return seconds / SECONDS_PER_HOUR


class Tier(str, Enum):
    """Storage tier a restore is served from."""

    LOCAL = "Local"  # local storage of the backup appliance
    ARCHIVE = "Archive"  # cloud tier of the hybrid appliance
    VAULT = "Vault"  # fully cloud-hosted recovery vault


@dataclass(frozen=True)
class JobSample:
    """One measured backup job: 1-based day index, data amount, duration."""

    day: int
    data_mb: float
    duration_s: float

    def __post_init__(self):
        if self.day < 1:
            raise DomainError(f"day index must be >= 1, got {self.day}")
        if self.data_mb < 0:
            raise DomainError(f"data_mb must be >= 0, got {self.data_mb}")
        if self.duration_s <= 0:
            raise DomainError(f"duration_s must be > 0, got {self.duration_s}")


@dataclass(frozen=True)
class RestoreSample:
    """One measured restore: source tier, amount restored, duration."""

    source_tier: Tier
    data_mb: float
    duration_s: float

    def __post_init__(self):
        if self.data_mb <= 0:
            raise DomainError(f"data_mb must be > 0, got {self.data_mb}")
        if self.duration_s <= 0:
            raise DomainError(f"duration_s must be > 0, got {self.duration_s}")


def validate_job_log(samples: Iterable[JobSample]) -> tuple[JobSample, ...]:
    """Check that day indices strictly increase and return the log as a tuple."""
    log = tuple(samples)
    for prev, cur in zip(log, log[1:]):
        if cur.day <= prev.day:
            raise DomainError(
                f"day indices must strictly increase: day {cur.day} follows day {prev.day}"
            )
    return log


@dataclass(frozen=True)
class ThroughputSummary:
    """Per-sample throughputs plus two averaging strategies.

    ``mean_arithmetic`` is the plain mean of the per-sample rates;
    ``mean_aggregate`` is total data divided by total time.  Both always
    lie between the per-sample minimum and maximum.
    """

    per_sample: tuple[float, ...]
    mean_arithmetic: float
    mean_aggregate: float


def throughput(data_mb: float, duration_s: float) -> float:
    """Data transfer rate in MB/s."""
    if duration_s <= 0:
        raise DomainError(f"duration_s must be > 0, got {duration_s}")
    if data_mb < 0:
        raise DomainError(f"data_mb must be >= 0, got {data_mb}")
    return data_mb / duration_s


def summarize_throughput(samples: Sequence[JobSample]) -> ThroughputSummary:
    """Summarize a job log into per-sample rates and both mean rates."""
    if not samples:
        raise DomainError("cannot summarize an empty job log")
    per_sample = tuple(throughput(s.data_mb, s.duration_s) for s in samples)
    mean_arith = math.fsum(per_sample) / len(per_sample)
    total_mb = math.fsum(s.data_mb for s in samples)
    total_s = math.fsum(s.duration_s for s in samples)
    mean_agg = total_mb / total_s
    lo, hi = min(per_sample), max(per_sample)
    slack = 1e-9 * max(abs(lo), abs(hi), 1.0)
    for name, mean in (("arithmetic", mean_arith), ("aggregate", mean_agg)):
        if not (lo - slack <= mean <= hi + slack):
            raise DomainError(f"{name} mean {mean} outside per-sample range [{lo}, {hi}]")
    return ThroughputSummary(per_sample, mean_arith, mean_agg)


def restore_time_per_mb(sample: RestoreSample) -> float:
    """Seconds needed to restore one MB from the sampled tier."""
    if sample.data_mb <= 0:
        raise DomainError(f"data_mb must be > 0, got {sample.data_mb}")
    return sample.duration_s / sample.data_mb


def recovery_throughput(sample: RestoreSample) -> float:
    """Recovery rate in MB/s (data restored divided by restore duration)."""
    if sample.duration_s <= 0:
        raise DomainError(f"duration_s must be > 0, got {sample.duration_s}")
    return sample.data_mb / sample.duration_s


class RateKind(str, Enum):
    """How a rate converts a data volume into a time."""

    THROUGHPUT = "MB/s"  # time = data / rate
    SECONDS_PER_MB = "s/MB"  # time = data * rate


class RateRole(str, Enum):
    BACKUP = "backup"
    RESTORE = "restore"


@dataclass(frozen=True)
class Rate:
    """A labelled average rate used as the basis of a projection."""

    label: str
    value: float
    kind: RateKind
    role: RateRole
    supplied: bool = False  # True when overridden externally instead of computed

    def time_s(self, data_mb: float) -> float:
        if self.kind is RateKind.THROUGHPUT:
            return data_mb / self.value
        return data_mb * self.value


@dataclass(frozen=True)
class Projection:
    """Backup/restore times projected for a test data volume.

    Times are stored in seconds; the ``*_h`` helpers convert to hours.
    ``basis`` records the exact rates the times were derived from.
    """

    test_data_mb: float
    backup_times_s: Mapping[str, float]
    restore_times_s: Mapping[str, float]
    basis: tuple[Rate, ...]

    @property
    def backup_times_h(self) -> dict[str, float]:
        return {k: seconds_to_hours(v) for k, v in self.backup_times_s.items()}

    @property
    def restore_times_h(self) -> dict[str, float]:
        return {k: seconds_to_hours(v) for k, v in self.restore_times_s.items()}


def project(test_data_mb: float, rates: Iterable[Rate]) -> Projection:
    """Project backup/restore times for ``test_data_mb`` from average rates."""
    if test_data_mb <= 0:
        raise DomainError(f"test_data_mb must be > 0, got {test_data_mb}")
    basis = tuple(rates)
    if not basis:
        raise DomainError("at least one rate is required")
    backup: dict[str, float] = {}
    restore: dict[str, float] = {}
    for rate in basis:
        if rate.value <= 0:
            raise DomainError(f"rate {rate.label!r} must be > 0, got {rate.value}")
        bucket = backup if rate.role is RateRole.BACKUP else restore
        if rate.label in bucket:
            raise DomainError(f"duplicate {rate.role.value} rate {rate.label!r}")
        bucket[rate.label] = rate.time_s(test_data_mb)
    return Projection(test_data_mb, backup, restore, basis)
