"""Scenario config files: JSON records describing one experiment each.

A scenario names a wealth measure (as a tagged record), the large bettor's
belief q and budget w, either a single kappa or a sweep grid, an optional
true probability, and the metric columns to emit. Files round-trip exactly:
parse -> serialize -> parse yields an equal Scenario.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

from . import measure as measure_mod
from .errors import ConfigError, DomainError
from .measure import BeliefMeasure

METRIC_NAMES = ("house_revenue", "diffuse_actual_profit",
                "diffuse_subjective_profit", "atomic_subjective_profit")

SWEEP_LO_MIN = 0.5 + 1e-4
SWEEP_HI_MAX = 1.0 - 1e-4


@dataclass(frozen=True)
class SweepSpec:
    lo: float
    hi: float
    steps: int

    def kappas(self) -> list[float]:
        """Uniform grid, ascending; endpoints included."""
        return [self.lo + (self.hi - self.lo) * i / (self.steps - 1)
                for i in range(self.steps)]


@dataclass(frozen=True)
class Scenario:
    name: str
    measure: dict  # tagged record, kept verbatim for round-tripping
    q: float
    w: float
    kappa: Union[float, SweepSpec]
    p_actual: Optional[float]
    metrics: tuple[str, ...]

    @property
    def is_sweep(self) -> bool:
        return isinstance(self.kappa, SweepSpec)


def build_measure(spec: dict) -> BeliefMeasure:
    """Instantiate the measure named by a tagged record."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError(f"measure spec must be a record with a 'kind', got {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "wedge":
            return measure_mod.wedge(int(spec["n"]))
        if kind == "symmetrized_wedge":
            return measure_mod.symmetrized_wedge(int(spec["n"]))
        if kind == "uniform":
            return measure_mod.uniform()
        if kind == "gaussian_mixture":
            return measure_mod.gaussian_mixture(
                spec["weights"], spec["means"], spec["stddevs"])
        if kind == "tabulated":
            return measure_mod.tabulated([tuple(k) for k in spec["knots"]])
        if kind == "scaled":
            return measure_mod.scaled(build_measure(spec["base"]),
                                      float(spec["factor"]))
    except KeyError as exc:
        raise ConfigError(f"measure kind {kind!r} is missing field {exc}") from exc
    except (DomainError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid {kind!r} measure: {exc}") from exc
    raise ConfigError(f"unknown measure kind {kind!r}")


def _number(obj: dict, key: str, lo=None, hi=None, strict_lo=False) -> float:
    if key not in obj:
        raise ConfigError(f"scenario is missing field {key!r}")
    val = obj[key]
    if not isinstance(val, (int, float)) or isinstance(val, bool):
        raise ConfigError(f"field {key!r} must be a number, got {val!r}")
    val = float(val)
    if lo is not None and (val <= lo if strict_lo else val < lo):
        raise ConfigError(f"field {key!r} out of range: {val}")
    if hi is not None and val > hi:
        raise ConfigError(f"field {key!r} out of range: {val}")
    return val


def parse_scenario(obj: Any) -> Scenario:
    """Validate a decoded record and produce a Scenario."""
    if not isinstance(obj, dict):
        raise ConfigError(f"scenario must be a record, got {type(obj).__name__}")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise ConfigError("scenario needs a nonempty string 'name'")
    if "measure" not in obj:
        raise ConfigError("scenario is missing field 'measure'")
    build_measure(obj["measure"])  # reject bad measure specs at parse time
    q = _number(obj, "q", lo=0.0, hi=1.0)
    w = _number(obj, "w", lo=0.0, strict_lo=True)

    kappa_raw = obj.get("kappa")
    kappa: Union[float, SweepSpec]
    if isinstance(kappa_raw, dict):
        lo = _number(kappa_raw, "lo")
        hi = _number(kappa_raw, "hi")
        steps = kappa_raw.get("steps")
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < 2:
            raise ConfigError(f"sweep 'steps' must be an integer >= 2, got {steps!r}")
        if lo < SWEEP_LO_MIN or hi > SWEEP_HI_MAX or lo > hi:
            raise ConfigError(
                f"sweep range must satisfy {SWEEP_LO_MIN} <= lo <= hi <= "
                f"{SWEEP_HI_MAX}, got [{lo}, {hi}]")
        kappa = SweepSpec(lo=lo, hi=hi, steps=steps)
    elif isinstance(kappa_raw, (int, float)) and not isinstance(kappa_raw, bool):
        kappa = float(kappa_raw)
        if not 0.0 < kappa < 1.0:
            raise ConfigError(f"scalar kappa must lie in (0,1), got {kappa}")
    else:
        raise ConfigError("scenario needs 'kappa': a number or {lo, hi, steps}")

    p_actual = None
    if obj.get("p_actual") is not None:
        p_actual = _number(obj, "p_actual", lo=0.0, hi=1.0)

    metrics_raw = obj.get("metrics", [])
    if not isinstance(metrics_raw, list):
        raise ConfigError("'metrics' must be an array of metric names")
    for m in metrics_raw:
        if m not in METRIC_NAMES:
            raise ConfigError(f"unknown metric {m!r}; choose from {METRIC_NAMES}")
    if "diffuse_actual_profit" in metrics_raw and p_actual is None:
        raise ConfigError("metric 'diffuse_actual_profit' requires 'p_actual'")

    return Scenario(name=name, measure=obj["measure"], q=q, w=w, kappa=kappa,
                    p_actual=p_actual, metrics=tuple(metrics_raw))


def scenario_to_dict(sc: Scenario) -> dict:
    out: dict[str, Any] = {
        "name": sc.name,
        "measure": sc.measure,
        "q": sc.q,
        "w": sc.w,
    }
    if isinstance(sc.kappa, SweepSpec):
        out["kappa"] = {"lo": sc.kappa.lo, "hi": sc.kappa.hi, "steps": sc.kappa.steps}
    else:
        out["kappa"] = sc.kappa
    if sc.p_actual is not None:
        out["p_actual"] = sc.p_actual
    out["metrics"] = list(sc.metrics)
    return out


def dump_scenario(sc: Scenario) -> str:
    return json.dumps(scenario_to_dict(sc), indent=2) + "\n"


def loads_scenario(text: str, origin: str = "<string>") -> Scenario:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_scenario(obj)


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read scenario file {path}: {exc}") from exc
    return loads_scenario(text, origin=str(path))


def bundled_scenario_dir() -> Path:
    return Path(__file__).parent / "scenarios"


def bundled_scenarios() -> dict[str, Path]:
    """Name -> path of the scenario files shipped with the package."""
    return {p.stem: p for p in sorted(bundled_scenario_dir().glob("*.cfg"))}
