"""Disaster-recovery performability toolkit.

Projects backup and restore times for data-protection systems from
measured job logs, prices their cloud usage, computes mission reliability
of the recovery chain, and checks the results against business impact
analysis targets.  Two system models ship with the package: a hybrid
backup appliance with a cloud storage tier, and a cloud-hosted recovery
vault.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .bia import (
    BiaTargets,
    ComplianceReport,
    ComplianceVerdict,
    MeasuredMetrics,
    Quantity,
    Relation,
    Status,
    check,
    evaluate,
    mtd,
)
from .costs import (
    CostBreakdown,
    FeeTier,
    ObjectStoreRates,
    VaultRates,
    cloud_vault_cost,
    hybrid_cloud_cost,
    vault_instance_fee,
)
from .engine import Kind, Model, ModelComponent, RunResult, run
from .errors import ConfigError, DomainError, ModelError, ParseError, ToolkitError
from .joblog import (
    parse_job_log,
    parse_restore_samples,
    render_job_log,
    render_restore_samples,
)
from .metrics import (
    JobSample,
    Projection,
    Rate,
    RateKind,
    RateRole,
    RestoreSample,
    ThroughputSummary,
    Tier,
    project,
    recovery_throughput,
    restore_time_per_mb,
    summarize_throughput,
    throughput,
)
from .models import build_cloud_basic, build_hybrid_basic, extend_with_test_data
from .plot import emit_plot
from .reliability import (
    ReliabilityComponent,
    SeriesSystem,
    component_reliability,
    series_reliability,
    sla_to_mtbf,
)
from .scenario import Scenario, SystemKind, load_scenario, parse_scenario, render_scenario

__all__ = [
    "__version__",
    "BiaTargets",
    "ComplianceReport",
    "ComplianceVerdict",
    "MeasuredMetrics",
    "Quantity",
    "Relation",
    "Status",
    "check",
    "evaluate",
    "mtd",
    "CostBreakdown",
    "FeeTier",
    "ObjectStoreRates",
    "VaultRates",
    "cloud_vault_cost",
    "hybrid_cloud_cost",
    "vault_instance_fee",
    "Kind",
    "Model",
    "ModelComponent",
    "RunResult",
    "run",
    "ConfigError",
    "DomainError",
    "ModelError",
    "ParseError",
    "ToolkitError",
    "parse_job_log",
    "parse_restore_samples",
    "render_job_log",
    "render_restore_samples",
    "JobSample",
    "Projection",
    "Rate",
    "RateKind",
    "RateRole",
    "RestoreSample",
    "ThroughputSummary",
    "Tier",
    "project",
    "recovery_throughput",
    "restore_time_per_mb",
    "summarize_throughput",
    "throughput",
    "build_cloud_basic",
    "build_hybrid_basic",
    "extend_with_test_data",
    "emit_plot",
    "ReliabilityComponent",
    "SeriesSystem",
    "component_reliability",
    "series_reliability",
    "sla_to_mtbf",
    "Scenario",
    "SystemKind",
    "load_scenario",
    "parse_scenario",
    "render_scenario",
]
