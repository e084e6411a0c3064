"""Monthly cloud service cost models for the two protection systems.

Two pricing schemes are covered: an object store billed per GB plus
per-10K-transaction charges (the hybrid appliance's cloud tier) and a
recovery vault billed per GB stored plus a tiered fee per protected
frontend instance.  All prices are USD per month; volumes are decimal GB.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

DEFAULT_INGRESS_EGRESS_OPS = 10_000
DEFAULT_LISTING_OPS = 10_000
OPS_PER_BLOCK = 10_000


@dataclass(frozen=True)
class ObjectStoreRates:
    """Object-store pricing: per-GB storage plus two per-10K-operation rates."""

    per_gb_month: float = 0.02
    per_10k_ingress_egress: float = 0.54
    per_10k_listing: float = 0.50

    def __post_init__(self):
        for name in ("per_gb_month", "per_10k_ingress_egress", "per_10k_listing"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)}")


@dataclass(frozen=True)
class FeeTier:
    """One flat step of the instance-fee table: fee applies up to upper_gb."""

    upper_gb: float  # inclusive upper bound of the tier
    fee: float


@dataclass(frozen=True)
class VaultRates:
    """Recovery-vault pricing: per-GB storage plus a tiered instance fee.

    Frontends up to the last flat tier pay that tier's fee; larger
    frontends pay ``block_fee`` for every started ``block_gb`` slice.
    """

    per_gb_month: float = 0.0448
    instance_fee_tiers: tuple[FeeTier, ...] = (FeeTier(50.0, 5.0), FeeTier(500.0, 10.0))
    block_gb: float = 500.0
    block_fee: float = 10.0

    def __post_init__(self):
        if self.per_gb_month < 0:
            raise DomainError(f"per_gb_month must be >= 0, got {self.per_gb_month}")
        if not self.instance_fee_tiers:
            raise DomainError("instance_fee_tiers must not be empty")
        bounds = [t.upper_gb for t in self.instance_fee_tiers]
        if any(b <= 0 for b in bounds) or any(b >= a for b, a in zip(bounds, bounds[1:])):
            raise DomainError(f"tier boundaries must be positive and strictly increasing: {bounds}")
        fees = [t.fee for t in self.instance_fee_tiers]
        if any(f < 0 for f in fees) or any(f > g for f, g in zip(fees, fees[1:])):
            raise DomainError(f"tier fees must be >= 0 and non-decreasing: {fees}")
        if self.block_gb <= 0 or self.block_fee < 0:
            raise DomainError("block_gb must be > 0 and block_fee >= 0")
        # The fee just past the last flat tier must not drop below that tier.
        past_last = math.ceil(math.nextafter(bounds[-1], math.inf) / self.block_gb)
        if past_last * self.block_fee < fees[-1]:
            raise DomainError("block fees drop below the last flat tier fee")


@dataclass(frozen=True)
class CostBreakdown:
    """Itemized monthly cost; ``total`` is the exact sum of the parts."""

    storage_cost: float
    transaction_cost: float = 0.0
    instance_cost: float = 0.0

    @property
    def total(self) -> float:
        return self.storage_cost + self.transaction_cost + self.instance_cost


def hybrid_cloud_cost(
    tiered_gb: float,
    ingress_egress_ops: float = DEFAULT_INGRESS_EGRESS_OPS,
    listing_ops: float = DEFAULT_LISTING_OPS,
    rates: ObjectStoreRates | None = None,
) -> CostBreakdown:
    """Monthly object-store cost for data held in the hybrid cloud tier.

    Storage is billed linearly per GB; transactions are billed linearly
    per 10,000 operations of each kind.
    """
    if tiered_gb < 0:
        raise DomainError(f"tiered_gb must be >= 0, got {tiered_gb}")
    if ingress_egress_ops < 0 or listing_ops < 0:
        raise DomainError("operation counts must be >= 0")
    rates = rates or ObjectStoreRates()
    storage = tiered_gb * rates.per_gb_month
    transactions = (
        rates.per_10k_ingress_egress * ingress_egress_ops / OPS_PER_BLOCK
        + rates.per_10k_listing * listing_ops / OPS_PER_BLOCK
    )
    return CostBreakdown(storage_cost=storage, transaction_cost=transactions)


def vault_instance_fee(frontend_gb: float, rates: VaultRates | None = None) -> float:
    """Monthly instance fee for a protected frontend of the given size."""
    if frontend_gb < 0:
        raise DomainError(f"frontend_gb must be >= 0, got {frontend_gb}")
    rates = rates or VaultRates()
    for tier in rates.instance_fee_tiers:
        if frontend_gb <= tier.upper_gb:
            return tier.fee
    return math.ceil(frontend_gb / rates.block_gb) * rates.block_fee


def cloud_vault_cost(
    frontend_gb: float,
    stored_gb: float,
    rates: VaultRates | None = None,
) -> CostBreakdown:
    """Monthly recovery-vault cost: per-GB storage plus the instance fee."""
    if frontend_gb < 0 or stored_gb < 0:
        raise DomainError(
            f"frontend_gb and stored_gb must be >= 0, got {frontend_gb} and {stored_gb}"
        )
    rates = rates or VaultRates()
    storage = stored_gb * rates.per_gb_month
    fee = vault_instance_fee(frontend_gb, rates)
    return CostBreakdown(storage_cost=storage, instance_cost=fee)
