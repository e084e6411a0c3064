"""Command-line entry points.

Every command reads one or more scenario files and prints a deterministic
report.  Exit codes: 0 on success, 1 on any validation or input error,
2 when ``bia-check`` finds a failed target.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, report
from .engine import run
from .errors import ToolkitError
from .plot import emit_plot
from .scenario import (
    Scenario,
    build_basic_model,
    compliance_for,
    cost_for,
    load_scenario,
    projection_for,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NONCOMPLIANT = 2


class _Parser(argparse.ArgumentParser):
    """Argument errors exit with code 1 to match the validation-error contract."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _cmd_simulate(args) -> int:
    scenario = load_scenario(args.scenario)
    model = build_basic_model(scenario)
    result = run(model)
    print(report.render_run_summary(model, result), end="")
    return EXIT_OK


def _cmd_project(args) -> int:
    scenario = load_scenario(args.scenario)
    projection = projection_for(scenario, args.test_data_mb)
    print(report.render_projection(projection, scenario.name), end="")
    return EXIT_OK


def _cmd_cost(args) -> int:
    scenario = load_scenario(args.scenario)
    breakdown = cost_for(scenario, args.test_data_mb)
    print(report.render_cost(breakdown, scenario.name), end="")
    return EXIT_OK


def _cmd_reliability(args) -> int:
    scenario = load_scenario(args.scenario)
    print(report.render_reliability(scenario.reliability), end="")
    return EXIT_OK


def _cmd_bia_check(args) -> int:
    scenario = load_scenario(args.scenario)
    compliance = compliance_for(scenario, args.test_data_mb)
    print(report.render_compliance(compliance), end="")
    return EXIT_OK if compliance.compliant else EXIT_NONCOMPLIANT


def _cmd_compare(args) -> int:
    scenarios = [load_scenario(path) for path in args.scenarios]
    comparison = report.compile_comparison(scenarios, args.test_data_mb)
    if args.format == "csv":
        print(report.render_comparison_csv(comparison), end="")
    else:
        print(report.render_comparison(comparison), end="")
    return EXIT_OK


def _cmd_plot(args) -> int:
    scenario = load_scenario(args.scenario)
    model = build_basic_model(scenario)
    result = run(model)
    series = {}
    units = []
    for name in args.component:
        component = model.component(name)
        series[name] = result.series[name]
        if component.unit and component.unit not in units:
            units.append(component.unit)
    emit_plot(series, args.out, title=scenario.name, y_label=" / ".join(units))
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="drperf",
        description=(
            "Project backup/restore times, cloud costs, reliability, and BIA "
            "compliance for data-protection scenarios."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_arg(p):
        p.add_argument("scenario", help="scenario YAML file")

    def test_data_arg(p):
        p.add_argument(
            "--test-data-mb",
            type=float,
            default=None,
            help="override the scenario's test data volume (MB)",
        )

    p = sub.add_parser("simulate", help="run the basic model and print every component")
    scenario_arg(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("project", help="project backup/restore times for a data volume")
    scenario_arg(p)
    test_data_arg(p)
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("cost", help="monthly cloud cost breakdown")
    scenario_arg(p)
    test_data_arg(p)
    p.set_defaults(func=_cmd_cost)

    p = sub.add_parser("reliability", help="component and system mission reliability")
    scenario_arg(p)
    p.set_defaults(func=_cmd_reliability)

    p = sub.add_parser("bia-check", help="check projected metrics against BIA targets")
    scenario_arg(p)
    test_data_arg(p)
    p.set_defaults(func=_cmd_bia_check)

    p = sub.add_parser("compare", help="side-by-side comparison of scenarios")
    p.add_argument("scenarios", nargs="+", help="scenario YAML files")
    test_data_arg(p)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("plot", help="write an SVG trajectory chart")
    scenario_arg(p)
    p.add_argument(
        "--component",
        action="append",
        required=True,
        help="component to plot (repeatable)",
    )
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
