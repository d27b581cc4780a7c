"""Command-line front end.

    tachyon run scenario.json
    tachyon sweep scenario.json --out table.csv
    tachyon verify-no-paradox --samples 1000000 --seed 0

A scenario file is a JSON object ``{"kind": ..., "units": "natural"|"si",
"parameters": {...}}``. With ``si`` units times are seconds, velocities
m/s, energies J and momenta kg m/s; lengths are meters either way. Exit
status is 0 on success, 1 on a domain error and 2 on a malformed scenario.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from tachyon import units
from tachyon.causal import (
    RuleClockMeasure,
    causal_direction,
    momentum_from_rule,
    subluminal_order_lemma,
    time_order_witness,
)
from tachyon.epr import (
    Correlation,
    EprConfig,
    SweepConfig,
    correlation_predicted,
    format_number,
    sidereal_sweep,
    vt_lower_bound,
    write_sweep_csv,
)
from tachyon.errors import TachyonError
from tachyon.ether import EtherFrame
from tachyon.minkowski import Beta3, Event, FourVector, boost, compose_beta, interval
from tachyon.paradox import (
    EtherMollerScenario,
    MollerScenario,
    ether_moller_speeds,
    ether_paradox_possible,
    ether_t2,
    moller_arrival,
    moller_t2,
    paradox_threshold,
    verify_no_paradox,
)

KINDS = ("boost", "interval", "compose", "moller", "ether_moller", "causal", "epr", "sweep")
UNITS = ("natural", "si")


class ScenarioError(Exception):
    """The scenario file is unreadable or does not match the schema."""


class Params:
    """Key lookup with unit conversion into natural units."""

    def __init__(self, raw: dict, si: bool):
        self.raw = raw
        self.si = si

    def _get(self, key: str) -> Any:
        if key not in self.raw:
            raise ScenarioError(f"missing key: parameters.{key}")
        return self.raw[key]

    def has(self, key: str) -> bool:
        return key in self.raw

    def number(self, key: str) -> float:
        value = self._get(key)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioError(f"parameters.{key} must be a number, got {value!r}")
        return float(value)

    def vector(self, key: str, size: int) -> list[float]:
        value = self._get(key)
        if (not isinstance(value, list) or len(value) != size
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value)):
            raise ScenarioError(f"parameters.{key} must be a list of {size} numbers, got {value!r}")
        return [float(c) for c in value]

    def integer(self, key: str) -> int:
        value = self._get(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ScenarioError(f"parameters.{key} must be an integer, got {value!r}")
        return value

    def beta(self, key: str) -> float:
        x = self.number(key)
        return units.velocity_to_beta(x) if self.si else x

    def beta3(self, key: str) -> list[float]:
        v = self.vector(key, 3)
        return [units.velocity_to_beta(c) for c in v] if self.si else v

    def ct(self, key: str) -> float:
        x = self.number(key)
        return units.seconds_to_ct(x) if self.si else x

    def seconds(self, key: str) -> float:
        """Duration in seconds; natural-unit input is ct in meters."""
        x = self.number(key)
        return x if self.si else units.ct_to_seconds(x)

    def event(self, key: str) -> Event:
        t, x, y, z = self.vector(key, 4)
        return Event.at(units.seconds_to_ct(t) if self.si else t, x, y, z)

    def momentum(self, key: str) -> FourVector:
        e, px, py, pz = self.vector(key, 4)
        return FourVector.of(units.energy_to_natural(e) if self.si else e, px, py, pz)

    def ether(self) -> EtherFrame:
        if self.has("beta_lab") == self.has("ether_velocity"):
            raise ScenarioError("give exactly one of parameters.beta_lab, parameters.ether_velocity")
        if self.has("beta_lab"):
            return EtherFrame(Beta3(self.beta3("beta_lab")))
        return EtherFrame.from_ether_velocity(self.beta3("ether_velocity"))


class Report:
    def __init__(self, si: bool, out):
        self.si = si
        self.out = out

    def value(self, name: str, x: float, unit: str = "") -> None:
        suffix = f" {unit}" if unit else ""
        print(f"{name} = {format_number(x)}{suffix}", file=self.out)

    def time(self, name: str, ct: float) -> None:
        if self.si:
            self.value(name, units.ct_to_seconds(ct), "s")
        else:
            self.value(name, ct, "m")

    def speed(self, name: str, beta: float) -> None:
        if self.si:
            self.value(name, units.beta_to_velocity(beta), "m/s")
        else:
            self.value(name, beta)

    def line(self, text: str) -> None:
        print(text, file=self.out)


def _vec_text(values) -> str:
    return "(" + ", ".join(format_number(v) for v in values) + ")"


def _run_boost(p: Params, r: Report) -> None:
    t, x, y, z = p.vector("vector", 4)
    v = FourVector.of(units.seconds_to_ct(t) if p.si else t, x, y, z)
    out = boost(v, Beta3(p.beta3("beta")))
    r.time("t'", out.t)
    r.line(f"space' = {_vec_text(out.space)} m")
    r.value("invariant", out.norm_sq)


def _run_interval(p: Params, r: Report) -> None:
    iv = interval(p.event("event1"), p.event("event2"))
    r.value("invariant", iv.invariant, "m^2")
    r.line(f"class = {iv.kind.value}")


def _run_compose(p: Params, r: Report) -> None:
    r.speed("composed", compose_beta(p.beta("a"), p.beta("b")))


def _run_moller(p: Params, r: Report) -> None:
    s = MollerScenario(p.beta("u_prime"), p.beta("w"), p.beta("v"), p.ct("t1_prime"))
    x_p, t1 = moller_arrival(s)
    t2 = moller_t2(s)
    r.value("x_p", x_p, "m")
    r.time("t1", t1)
    r.time("t2", t2)
    r.speed("threshold", paradox_threshold(s.u_prime, s.w))
    r.line("verdict = PARADOX (t2 < 0)" if t2 < 0.0 else "verdict = NO PARADOX (t2 >= 0)")


def _run_ether_moller(p: Params, r: Report) -> None:
    s = EtherMollerScenario(p.beta("beta"), p.beta("beta_prime"), p.beta("beta_t"),
                            p.beta("beta_t_bar"), p.ct("t1_prime"))
    u, w, v = ether_moller_speeds(s)
    verdict = ether_paradox_possible(s)
    r.speed("u_prime", u)
    r.speed("w", w)
    r.speed("v", v)
    r.value("lhs", verdict.lhs)
    r.value("numerator", verdict.numerator)
    r.value("denominator", verdict.denominator)
    if s.admissible:
        r.time("t2", ether_t2(s))
    else:
        r.line("t2 = n/a (first tachyon would run backward in S0 time)")
    if verdict.possible:
        r.line("verdict = PARADOX POSSIBLE (ether inequality lhs < 0)")
    else:
        r.line("verdict = NO PARADOX POSSIBLE (ether inequality lhs > 0)")


def _run_causal(p: Params, r: Report) -> None:
    e1, e2 = p.event("event1"), p.event("event2")
    iv = interval(e1, e2)
    r.line(f"class = {iv.kind.value}")
    if p.has("momentum"):
        r.line(f"cause = {causal_direction(e1, e2, p.momentum('momentum')).value}")
    lemma = subluminal_order_lemma(e1, e2)
    r.line(f"time_order_lemma = {lemma.verdict.value}")
    first, second = (e1, e2) if e2.ct >= e1.ct else (e2, e1)
    witness = time_order_witness(first, second)
    if witness is None:
        r.line("time_order_witness = none")
    else:
        beta = [units.beta_to_velocity(b) for b in witness.beta] if p.si else witness.beta
        r.line(f"time_order_witness = {_vec_text(beta)}" + (" m/s" if p.si else ""))
    if p.has("rule_clock"):
        rc = p.raw["rule_clock"]
        if not isinstance(rc, dict):
            raise ScenarioError("parameters.rule_clock must be an object")
        sub = Params(rc, si=True)
        measure = RuleClockMeasure(sub.number("m"), sub.number("L"), sub.number("tau_in"), sub.number("tau_fin"))
        r.value("rule_clock_momentum", momentum_from_rule(measure), "kg m/s")


def _run_epr(p: Params, r: Report) -> None:
    beta_t = p.beta("beta_t") if p.has("beta_t") else None
    cfg = EprConfig(p.event("event_a"), p.event("event_b"), p.seconds("timing_uncertainty"),
                    p.ether(), beta_t)
    res = vt_lower_bound(cfg)
    r.value("vt_lower_bound", res.bound, "c")
    if p.si:
        r.value("vt_lower_bound_si", units.beta_to_velocity(res.bound), "m/s")
    r.time("window_offset", res.offset)
    r.line(f"flags = {';'.join(sorted(res.flags))}")
    if beta_t is not None:
        verdict = correlation_predicted(cfg)
        r.line("verdict = " + ("CORRELATED" if verdict is Correlation.CORRELATED else "CORRELATION LOSS"))


def sweep_config(p: Params) -> SweepConfig:
    return SweepConfig(
        baseline_length=p.number("baseline_length"),
        rotation_axis=p.vector("rotation_axis", 3),
        baseline_direction=p.vector("baseline_direction", 3),
        ether_velocity=Beta3(p.beta3("ether_velocity")),
        samples_per_day=p.integer("samples_per_day"),
        timing_uncertainty=p.seconds("timing_uncertainty") if p.has("timing_uncertainty") else 0.0,
    )


def _run_sweep(p: Params, r: Report) -> None:
    table = sidereal_sweep(sweep_config(p))
    for row in table.rows:
        flags = ";".join(sorted(row.result.flags))
        r.line(f"phase {format_number(row.phase)}  bound {format_number(row.result.bound)}  {flags}".rstrip())
    best = table.minimum
    r.value("minimum_bound", best.result.bound)
    r.value("minimum_phase", best.phase)


RUNNERS: dict[str, Callable[[Params, Report], None]] = {
    "boost": _run_boost,
    "interval": _run_interval,
    "compose": _run_compose,
    "moller": _run_moller,
    "ether_moller": _run_ether_moller,
    "causal": _run_causal,
    "epr": _run_epr,
    "sweep": _run_sweep,
}


def load_scenario(path: str | Path) -> tuple[str, Params]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a JSON object")
    for key in ("kind", "units", "parameters"):
        if key not in doc:
            raise ScenarioError(f"missing key: {key}")
    if doc["kind"] not in KINDS:
        raise ScenarioError(f"unknown kind: {doc['kind']!r} (expected one of {', '.join(KINDS)})")
    if doc["units"] not in UNITS:
        raise ScenarioError(f"units must be 'natural' or 'si', got {doc['units']!r}")
    if not isinstance(doc["parameters"], dict):
        raise ScenarioError("parameters must be a JSON object")
    return doc["kind"], Params(doc["parameters"], doc["units"] == "si")


def _guarded(fn: Callable[[], None]) -> int:
    try:
        fn()
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TachyonError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    def go() -> None:
        kind, params = load_scenario(args.scenario)
        report = Report(params.si, sys.stdout)
        report.line(f"kind = {kind}")
        RUNNERS[kind](params, report)

    return _guarded(go)


def cmd_sweep(args: argparse.Namespace) -> int:
    def go() -> None:
        kind, params = load_scenario(args.scenario)
        if kind != "sweep":
            raise ScenarioError(f"sweep command needs kind 'sweep', got {kind!r}")
        table = sidereal_sweep(sweep_config(params))
        try:
            write_sweep_csv(table, args.out)
        except OSError as exc:
            raise ScenarioError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
        best = table.minimum
        print(f"wrote {len(table.rows)} rows to {args.out}; minimum bound "
              f"{format_number(best.result.bound)} at phase {format_number(best.phase)}")

    return _guarded(go)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.samples < 1:
        print("error: --samples must be positive", file=sys.stderr)
        return 2
    rep = verify_no_paradox(args.samples, args.seed)
    print(f"samples = {rep.samples}")
    print(f"seed = {rep.seed}")
    print(f"paradoxical = {rep.paradox_count}")
    print(f"nonpositive_t2 = {rep.nonpositive_t2_count}")
    print(f"min_lhs = {format_number(rep.min_lhs)}")
    print(f"min_t2 = {format_number(rep.min_t2)}")
    print("verdict = " + ("NO PARADOX IN ANY SAMPLE" if rep.holds else "PARADOX FOUND"))
    return 0 if rep.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tachyon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate one scenario file")
    run.add_argument("scenario")
    run.set_defaults(func=cmd_run)

    sweep = sub.add_parser("sweep", help="write a sidereal sweep table as CSV")
    sweep.add_argument("scenario")
    sweep.add_argument("--out", required=True)
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify-no-paradox", help="random check that the ether model admits no loop")
    verify.add_argument("--samples", type=int, default=1_000_000)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
