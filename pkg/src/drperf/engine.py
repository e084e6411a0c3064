"""Deterministic discrete-time stock-and-flow simulation engine.

A model is a set of named components evaluated once per period:

1. exogenous components take their value from the model's input series,
2. converters are evaluated in dependency order,
3. flows are evaluated,
4. stocks update as stock(p) = stock(p-1) + inflows(p) - outflows(p).

Converters may read previous-period stocks, exogenous inputs, and other
converters.  Flows may additionally read converters but never other
flows.  Expressions must be pure; they receive exactly their declared
dependencies, so an undeclared read fails loudly.
"""

from __future__ import annotations

import hashlib
import json
import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from graphlib import CycleError, TopologicalSorter

from .errors import ModelError

logger = logging.getLogger(__name__)

Expression = Callable[[Mapping[str, float]], float]


class Kind(str, Enum):
    STOCK = "stock"
    FLOW = "flow"
    CONVERTER = "converter"


@dataclass(frozen=True)
class ModelComponent:
    """One named node of a model.

    Stocks declare an initial value plus inflow/outflow names.  Flows and
    converters declare either an expression over ``depends`` or nothing,
    in which case their values come from the model's exogenous series.
    """

    name: str
    kind: Kind
    unit: str = ""
    expression: Expression | None = None
    depends: tuple[str, ...] = ()
    initial: float = 0.0
    inflows: tuple[str, ...] = ()
    outflows: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise ModelError("component name must be non-empty")
        if self.kind is Kind.STOCK:
            if self.expression is not None or self.depends:
                raise ModelError(f"stock {self.name!r} cannot carry an expression")
            if not self.inflows and not self.outflows:
                raise ModelError(f"stock {self.name!r} has no attached flows")
        else:
            if self.inflows or self.outflows:
                raise ModelError(f"{self.kind.value} {self.name!r} cannot declare flows")
            if self.expression is None and self.depends:
                raise ModelError(f"exogenous {self.name!r} cannot declare dependencies")

    @property
    def is_exogenous(self) -> bool:
        return self.kind is not Kind.STOCK and self.expression is None


@dataclass(frozen=True)
class Model:
    """An immutable model: components, horizon, and exogenous input series.

    Exogenous series are indexed by period (element 0 is period 1).  A
    series shorter than the horizon is padded with zeros at run time; a
    longer one is rejected.  ``meta`` holds builder bookkeeping and must
    stay JSON-serializable so it can feed the configuration digest.
    """

    name: str
    components: tuple[ModelComponent, ...]
    horizon: int
    exogenous: Mapping[str, tuple[float, ...]] = field(default_factory=dict)
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.horizon < 1:
            raise ModelError(f"horizon must be >= 1, got {self.horizon}")
        names = [c.name for c in self.components]
        if len(names) != len(set(names)):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ModelError(f"duplicate component names: {dupes}")
        by_name = self.by_name
        for comp in self.components:
            for dep in comp.depends:
                if dep not in by_name:
                    raise ModelError(f"{comp.name!r} depends on unknown component {dep!r}")
            for flow_name in comp.inflows + comp.outflows:
                flow = by_name.get(flow_name)
                if flow is None:
                    raise ModelError(f"stock {comp.name!r} references unknown flow {flow_name!r}")
                if flow.kind is not Kind.FLOW:
                    raise ModelError(f"stock {comp.name!r} attaches non-flow {flow_name!r}")
            if comp.kind is Kind.CONVERTER:
                for dep in comp.depends:
                    if by_name[dep].kind is Kind.FLOW:
                        raise ModelError(
                            f"converter {comp.name!r} cannot depend on flow {dep!r}"
                        )
            if comp.kind is Kind.FLOW:
                for dep in comp.depends:
                    if by_name[dep].kind is Kind.FLOW and not by_name[dep].is_exogenous:
                        raise ModelError(f"flow {comp.name!r} cannot depend on flow {dep!r}")
        for name, series in self.exogenous.items():
            comp = by_name.get(name)
            if comp is None:
                raise ModelError(f"exogenous series for unknown component {name!r}")
            if not comp.is_exogenous:
                raise ModelError(f"component {name!r} has an expression; it cannot be exogenous")
            if len(series) > self.horizon:
                raise ModelError(
                    f"series for {name!r} has {len(series)} entries, horizon is {self.horizon}"
                )
        for comp in self.components:
            if comp.is_exogenous and comp.name not in self.exogenous:
                raise ModelError(f"no exogenous series supplied for {comp.name!r}")

    @property
    def by_name(self) -> dict[str, ModelComponent]:
        return {c.name: c for c in self.components}

    def component(self, name: str) -> ModelComponent:
        try:
            return self.by_name[name]
        except KeyError:
            raise ModelError(f"model {self.name!r} has no component {name!r}") from None

    def digest(self) -> str:
        """Configuration digest over structure, inputs, and meta (not code)."""
        doc = {
            "name": self.name,
            "horizon": self.horizon,
            "components": [
                {
                    "name": c.name,
                    "kind": c.kind.value,
                    "unit": c.unit,
                    "depends": list(c.depends),
                    "initial": c.initial,
                    "inflows": list(c.inflows),
                    "outflows": list(c.outflows),
                    "exogenous": c.is_exogenous,
                }
                for c in sorted(self.components, key=lambda c: c.name)
            ],
            "exogenous": {k: list(v) for k, v in sorted(self.exogenous.items())},
            "meta": self.meta,
        }
        blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class RunResult:
    """Trajectories of every component, one (period, value) pair per period."""

    model_name: str
    digest: str
    horizon: int
    series: Mapping[str, tuple[tuple[int, float], ...]]

    def values(self, name: str) -> tuple[float, ...]:
        try:
            return tuple(v for _, v in self.series[name])
        except KeyError:
            raise ModelError(f"run has no series {name!r}") from None

    def value(self, name: str, period: int) -> float:
        if not 1 <= period <= self.horizon:
            raise ModelError(f"period {period} outside 1..{self.horizon}")
        return self.values(name)[period - 1]

    def final(self, name: str) -> float:
        return self.values(name)[-1]


class _Scope(Mapping[str, float]):
    """Read view restricted to a component's declared dependencies."""

    def __init__(self, allowed: Mapping[str, float], owner: str):
        self._allowed = allowed
        self._owner = owner

    def __getitem__(self, key: str) -> float:
        try:
            return self._allowed[key]
        except KeyError:
            raise ModelError(
                f"{self._owner!r} read {key!r} without declaring it as a dependency"
            ) from None

    def __iter__(self):
        return iter(self._allowed)

    def __len__(self):
        return len(self._allowed)


def _converter_order(model: Model) -> list[ModelComponent]:
    """Converters sorted so dependencies come first; cycles are an error."""
    converters = {c.name: c for c in model.components if c.kind is Kind.CONVERTER}
    graph = {
        name: {d for d in comp.depends if d in converters}
        for name, comp in converters.items()
    }
    try:
        order = list(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        raise ModelError(f"cyclic converter dependencies: {exc.args[1]}") from exc
    return [converters[name] for name in order]


def run(model: Model) -> RunResult:
    """Evaluate the model over its horizon; same model, same result, always."""
    order = _converter_order(model)
    flows = [c for c in model.components if c.kind is Kind.FLOW and not c.is_exogenous]
    stocks = [c for c in model.components if c.kind is Kind.STOCK]
    exogenous = [c for c in model.components if c.is_exogenous]

    padded: dict[str, tuple[float, ...]] = {}
    for comp in exogenous:
        series = model.exogenous[comp.name]
        if len(series) < model.horizon:
            logger.warning(
                "series for %r has %d of %d periods; missing periods default to 0",
                comp.name,
                len(series),
                model.horizon,
            )
            series = tuple(series) + (0.0,) * (model.horizon - len(series))
        padded[comp.name] = tuple(float(v) for v in series)

    trajectories: dict[str, list[float]] = {c.name: [] for c in model.components}
    stock_prev = {c.name: float(c.initial) for c in stocks}

    for period in range(1, model.horizon + 1):
        current: dict[str, float] = dict(stock_prev)
        for comp in exogenous:
            current[comp.name] = padded[comp.name][period - 1]
        for comp in order:
            if comp.is_exogenous:
                continue
            scope = _Scope({d: current[d] for d in comp.depends}, comp.name)
            current[comp.name] = float(comp.expression(scope))
        for comp in flows:
            scope = _Scope({d: current[d] for d in comp.depends}, comp.name)
            current[comp.name] = float(comp.expression(scope))
        for comp in stocks:
            delta_in = sum(current[f] for f in comp.inflows)
            delta_out = sum(current[f] for f in comp.outflows)
            current[comp.name] = stock_prev[comp.name] + delta_in - delta_out
        for comp in model.components:
            trajectories[comp.name].append(current[comp.name])
        stock_prev = {c.name: current[c.name] for c in stocks}

    series = {
        name: tuple(enumerate(values, start=1)) for name, values in trajectories.items()
    }
    return RunResult(
        model_name=model.name,
        digest=model.digest(),
        horizon=model.horizon,
        series=series,
    )
