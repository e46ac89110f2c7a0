"""Mixed-integer models for quasi-biclique search: construction, LP-format
emission, external-solver adapter, and solution verification.

Two models are built over the same core variables u_i, v_j (vertex picks)
and y_ij (edge picks):

* the size model maximizes |U'| + |V'| under the density constraint, with
  cardinality indicator variables z;
* the quality model maximizes the log-linearized squared-density-times-size
  criterion via edge-count indicators w_k.

The density constraint couples the two cardinalities; the bilinear form
keeps the z product and can only be emitted with the quadratic flag, the
linearized form uses joint binary indicators z_{n,m}.  The joint indicators
are deliberately binary: with only the marginal channeling constraints a
continuous mixture over (n, m) pairs can push the bilinear proxy below the
true |U'|*|V'| and admit selections that violate the density requirement.
"""

from __future__ import annotations

import math
import re
import subprocess
import tempfile
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .bigraph import BipartiteGraph, Selection, induced_stats
from .bounds import SizeBounds, edge_count_bounds
from .errors import (InfeasibleBoundsError, SolverAdapterError,
                     UnsupportedFormError, VerificationError)
from .quasidef import RationalLike, as_fraction, is_gamma_quasi_biclique

Number = Union[int, float, Fraction]

BINARY = "binary"
CONTINUOUS = "continuous"
INTEGER = "integer"

BILINEAR = "bilinear"
LINEARIZED = "linearized"

VERIFY_TOL = 1e-6

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Variable:
    name: str
    kind: str
    lower: Number = 0
    upper: Number = 1

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"variable name {self.name!r} is not LP-safe")
        if self.kind not in (BINARY, CONTINUOUS, INTEGER):
            raise ValueError(f"unknown variable kind {self.kind!r}")


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[Number, str], ...]          # (coefficient, variable)
    relation: str                                  # "<=", ">=", "="
    rhs: Number
    quad_terms: tuple[tuple[Number, str, str], ...] = ()

    def __post_init__(self):
        if self.relation not in ("<=", ">=", "="):
            raise ValueError(f"unknown relation {self.relation!r}")


@dataclass(frozen=True)
class MipInstance:
    name: str
    variables: tuple[Variable, ...]
    constraints: tuple[Constraint, ...]
    objective_sense: str                           # "max" (only sense used)
    objective_terms: tuple[tuple[Number, str], ...]
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        declared = set(names)
        for c in self.constraints:
            for _, v in c.terms:
                if v not in declared:
                    raise ValueError(f"constraint {c.name} references unknown variable {v}")
            for _, a, b in c.quad_terms:
                if a not in declared or b not in declared:
                    raise ValueError(f"constraint {c.name} references unknown variable")
        for _, v in self.objective_terms:
            if v not in declared:
                raise ValueError(f"objective references unknown variable {v}")

    @property
    def has_quadratic(self) -> bool:
        return any(c.quad_terms for c in self.constraints)

    def variable(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name:
                return v
        raise KeyError(name)


@dataclass(frozen=True)
class Assignment:
    values: dict[str, float]
    objective: Optional[float]
    status: str = "optimal"


# ---------------------------------------------------------------------------
# model construction
# ---------------------------------------------------------------------------

def _core_vars(g: BipartiteGraph):
    variables = [Variable(f"u_{i}", BINARY) for i in range(g.u_count)]
    variables += [Variable(f"v_{j}", BINARY) for j in range(g.v_count)]
    variables += [Variable(f"y_{i}_{j}", BINARY) for i, j in g.edges()]
    return variables


def _linking_constraints(g: BipartiteGraph):
    # y_ij = 1 exactly when both endpoints are picked (conjunction linearization)
    out = []
    for i, j in g.edges():
        y, u, v = f"y_{i}_{j}", f"u_{i}", f"v_{j}"
        out.append(Constraint(f"link_u_{i}_{j}", ((1, y), (-1, u)), "<=", 0))
        out.append(Constraint(f"link_v_{i}_{j}", ((1, y), (-1, v)), "<=", 0))
        out.append(Constraint(f"link_b_{i}_{j}", ((1, y), (-1, u), (-1, v)), ">=", -1))
    return out


def build_model1(g: BipartiteGraph, gamma: RationalLike, size_bounds: SizeBounds,
                 form: str = LINEARIZED) -> MipInstance:
    """Size-maximizing model: max sum(u) + sum(v) under density >= gamma."""
    gamma = as_fraction(gamma)
    sb = size_bounds.clipped(g)
    n_range = range(sb.omega_l_u, sb.omega_u_u + 1)
    m_range = range(sb.omega_l_v, sb.omega_u_v + 1)
    variables = _core_vars(g)
    constraints = _linking_constraints(g)
    y_terms = tuple((1, f"y_{i}_{j}") for i, j in g.edges())

    if form == BILINEAR:
        # marginal indicators may be continuous: rounding them to the actual
        # cardinalities preserves feasibility and the objective
        variables += [Variable(f"z1_{n}", CONTINUOUS, 0, 1) for n in n_range]
        variables += [Variable(f"z2_{m}", CONTINUOUS, 0, 1) for m in m_range]
        constraints.append(Constraint(
            "density", y_terms, ">=", 0,
            quad_terms=tuple((-gamma * n * m, f"z1_{n}", f"z2_{m}")
                             for n in n_range for m in m_range)))
        constraints.append(Constraint(
            "channel_u",
            tuple((1, f"u_{i}") for i in range(g.u_count))
            + tuple((-n, f"z1_{n}") for n in n_range), "=", 0))
        constraints.append(Constraint(
            "channel_v",
            tuple((1, f"v_{j}") for j in range(g.v_count))
            + tuple((-m, f"z2_{m}") for m in m_range), "=", 0))
        constraints.append(Constraint(
            "one_z1", tuple((1, f"z1_{n}") for n in n_range), "=", 1))
        constraints.append(Constraint(
            "one_z2", tuple((1, f"z2_{m}") for m in m_range), "=", 1))
    elif form == LINEARIZED:
        variables += [Variable(f"z_{n}_{m}", BINARY)
                      for n in n_range for m in m_range]
        z = [(n, m, f"z_{n}_{m}") for n in n_range for m in m_range]
        constraints.append(Constraint(
            "density",
            y_terms + tuple((-gamma * n * m, name) for n, m, name in z), ">=", 0))
        constraints.append(Constraint(
            "channel_u",
            tuple((1, f"u_{i}") for i in range(g.u_count))
            + tuple((-n, name) for n, m, name in z), "=", 0))
        constraints.append(Constraint(
            "channel_v",
            tuple((1, f"v_{j}") for j in range(g.v_count))
            + tuple((-m, name) for n, m, name in z), "=", 0))
        constraints.append(Constraint(
            "one_z", tuple((1, name) for _, _, name in z), "=", 1))
    else:
        raise ValueError(f"form must be {BILINEAR!r} or {LINEARIZED!r}")

    objective = tuple((1, f"u_{i}") for i in range(g.u_count)) + \
        tuple((1, f"v_{j}") for j in range(g.v_count))
    return MipInstance(
        name=f"size_model_{form}",
        variables=tuple(variables), constraints=tuple(constraints),
        objective_sense="max", objective_terms=objective,
        metadata={"model": "size", "form": form, "gamma": gamma,
                  "size_bounds": sb})


def build_model2(g: BipartiteGraph, gamma: RationalLike, size_bounds: SizeBounds,
                 verbatim_density: bool = False) -> MipInstance:
    """Quality model: max 2*sum(log k * w_k) - sum((log n + log m) * z_nm).

    ``verbatim_density`` swaps in the uncorrected density constraint with a
    bare sum of w on the left (identically 1, vacuous); it exists purely to
    document that form and must not be used for solving.
    """
    gamma = as_fraction(gamma)
    sb = size_bounds.clipped(g)
    k_min, k_max = edge_count_bounds(g, gamma, sb)
    k_min = max(k_min, 1)
    if k_min > k_max:
        raise InfeasibleBoundsError("no admissible edge count for the quality model")
    n_range = range(sb.omega_l_u, sb.omega_u_u + 1)
    m_range = range(sb.omega_l_v, sb.omega_u_v + 1)
    k_range = range(k_min, k_max + 1)

    variables = _core_vars(g)
    variables += [Variable(f"w_{k}", BINARY) for k in k_range]
    variables += [Variable(f"z_{n}_{m}", BINARY) for n in n_range for m in m_range]
    z = [(n, m, f"z_{n}_{m}") for n in n_range for m in m_range]

    constraints = _linking_constraints(g)
    constraints.append(Constraint(
        "one_w", tuple((1, f"w_{k}") for k in k_range), "=", 1))
    constraints.append(Constraint(
        "channel_edges",
        tuple((1, f"y_{i}_{j}") for i, j in g.edges())
        + tuple((-k, f"w_{k}") for k in k_range), "=", 0))
    constraints.append(Constraint(
        "channel_u",
        tuple((1, f"u_{i}") for i in range(g.u_count))
        + tuple((-n, name) for n, m, name in z), "=", 0))
    constraints.append(Constraint(
        "channel_v",
        tuple((1, f"v_{j}") for j in range(g.v_count))
        + tuple((-m, name) for n, m, name in z), "=", 0))
    constraints.append(Constraint(
        "one_z", tuple((1, name) for _, _, name in z), "=", 1))
    if verbatim_density:
        density_lhs = tuple((1, f"w_{k}") for k in k_range)
    else:
        density_lhs = tuple((k, f"w_{k}") for k in k_range)
    constraints.append(Constraint(
        "density",
        density_lhs + tuple((-gamma * n * m, name) for n, m, name in z), ">=", 0))

    objective = tuple((2 * math.log(k), f"w_{k}") for k in k_range) + \
        tuple((-(math.log(n) + math.log(m)), name) for n, m, name in z)
    return MipInstance(
        name="quality_model",
        variables=tuple(variables), constraints=tuple(constraints),
        objective_sense="max", objective_terms=objective,
        metadata={"model": "quality", "gamma": gamma, "size_bounds": sb,
                  "k_range": (k_min, k_max),
                  # variable count of the model as originally stated, before
                  # the joint (n, m) linearization: u, v, y, w and the two
                  # marginal indicator families
                  "nominal_variable_count": 2 * (g.u_count + g.v_count)
                  + 2 * g.edge_count})


def add_balance_constraints(instance: MipInstance, theta: RationalLike,
                            verbatim: bool = False) -> MipInstance:
    """Constrain |U'| and |V'| to differ by at most a relative slack theta.

    The corrected form compares the cardinalities sum(n*z) and sum(m*z).
    ``verbatim`` instead compares the bare indicator sums, each identically 1,
    which makes both constraints vacuous; it is kept for documentation only.
    """
    theta = as_fraction(theta)
    if not 0 <= theta < 1:
        raise ValueError(f"theta must be in [0, 1), got {theta}")
    joint = [v.name for v in instance.variables if v.name.startswith("z_")]
    z1 = [v.name for v in instance.variables if v.name.startswith("z1_")]
    z2 = [v.name for v in instance.variables if v.name.startswith("z2_")]
    if not joint and not (z1 and z2):
        raise ValueError("instance has no cardinality indicator variables")

    def nm(name: str) -> tuple[int, int]:
        _, n, m = name.split("_")
        return int(n), int(m)

    if joint:
        if verbatim:
            lower = tuple((1 - (1 - theta), name) for name in joint)
            upper = tuple((1 - (1 + theta), name) for name in joint)
        else:
            lower = tuple((nm(name)[0] - (1 - theta) * nm(name)[1], name)
                          for name in joint)
            upper = tuple((nm(name)[0] - (1 + theta) * nm(name)[1], name)
                          for name in joint)
    else:
        def idx(name: str) -> int:
            return int(name.split("_")[1])
        if verbatim:
            lower = tuple((1, n) for n in z1) + tuple((-(1 - theta), n) for n in z2)
            upper = tuple((1, n) for n in z1) + tuple((-(1 + theta), n) for n in z2)
        else:
            lower = tuple((idx(n), n) for n in z1) + \
                tuple((-(1 - theta) * idx(n), n) for n in z2)
            upper = tuple((idx(n), n) for n in z1) + \
                tuple((-(1 + theta) * idx(n), n) for n in z2)
    suffix = "_verbatim" if verbatim else ""
    extra = (
        Constraint(f"balance_lower{suffix}", lower, ">=", 0),
        Constraint(f"balance_upper{suffix}", upper, "<=", 0),
    )
    meta = dict(instance.metadata)
    meta["theta"] = theta
    return replace(instance, constraints=instance.constraints + extra,
                   metadata=meta)


# ---------------------------------------------------------------------------
# LP text emission and parsing
# ---------------------------------------------------------------------------

def _fmt_num(x: Number) -> str:
    f = float(x)
    if f == int(f) and abs(f) < 1e15:
        return str(int(f))
    return f"{f:.12g}"


def _fmt_terms(terms, quad_terms=()) -> str:
    parts = []
    for coef, name in terms:
        c = float(coef)
        sign = "-" if c < 0 else "+"
        mag = _fmt_num(abs(c))
        body = name if mag == "1" else f"{mag} {name}"
        parts.append(f"{sign} {body}")
    if quad_terms:
        qparts = []
        for coef, a, b in quad_terms:
            c = float(coef)
            sign = "-" if c < 0 else "+"
            mag = _fmt_num(abs(c))
            qparts.append(f"{sign} {mag} {a} * {b}")
        parts.append("+ [ " + " ".join(qparts).lstrip("+ ") + " ]")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def _wrap(line: str, width: int = 200) -> list[str]:
    if len(line) <= width:
        return [line]
    out, cur = [], ""
    for tok in line.split(" "):
        if cur and len(cur) + 1 + len(tok) > width:
            out.append(cur)
            cur = "   " + tok
        else:
            cur = tok if not cur else cur + " " + tok
    if cur:
        out.append(cur)
    return out


def emit_lp(instance: MipInstance, allow_quadratic: bool = False) -> str:
    """Deterministic CPLEX-dialect LP text for the instance."""
    if instance.has_quadratic and not allow_quadratic:
        raise UnsupportedFormError(
            "instance has bilinear constraint terms; emit with "
            "allow_quadratic=True or build the linearized form")
    lines = [f"\\ {instance.name}"]
    lines.append("Maximize" if instance.objective_sense == "max" else "Minimize")
    lines.extend(_wrap(" obj: " + _fmt_terms(instance.objective_terms)))
    lines.append("Subject To")
    for c in instance.constraints:
        rel = {"<=": "<=", ">=": ">=", "=": "="}[c.relation]
        body = _fmt_terms(c.terms, c.quad_terms)
        lines.extend(_wrap(f" {c.name}: {body} {rel} {_fmt_num(c.rhs)}"))
    bounded = [v for v in instance.variables if v.kind != BINARY]
    if bounded:
        lines.append("Bounds")
        for v in bounded:
            lines.append(f" {_fmt_num(v.lower)} <= {v.name} <= {_fmt_num(v.upper)}")
    binaries = [v.name for v in instance.variables if v.kind == BINARY]
    if binaries:
        lines.append("Binary")
        for chunk in _wrap(" " + " ".join(binaries)):
            lines.append(chunk)
    generals = [v.name for v in instance.variables if v.kind == INTEGER]
    if generals:
        lines.append("General")
        for chunk in _wrap(" " + " ".join(generals)):
            lines.append(chunk)
    lines.append("End")
    return "\n".join(lines) + "\n"


_TERM_RE = re.compile(r"([+-])?\s*(\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def _parse_expr(text: str) -> list[tuple[float, str]]:
    terms = []
    for sign, mag, name in _TERM_RE.findall(text):
        coef = float(mag) if mag else 1.0
        if sign == "-":
            coef = -coef
        terms.append((coef, name))
    return terms


def parse_lp(text: str) -> MipInstance:
    """Parse the linear LP dialect produced by emit_lp back into an instance."""
    # join continuation lines (they start with three spaces)
    joined: list[str] = []
    for raw in text.splitlines():
        if raw.startswith("\\") or not raw.strip():
            continue
        if raw.startswith("   ") and joined:
            joined[-1] += " " + raw.strip()
        else:
            joined.append(raw.rstrip())
    section = None
    name = "parsed"
    objective: list[tuple[float, str]] = []
    constraints: list[Constraint] = []
    bounds: dict[str, tuple[float, float]] = {}
    binaries: list[str] = []
    generals: list[str] = []
    sense = "max"
    for line in joined:
        word = line.strip().lower()
        if word in ("maximize", "minimize"):
            sense = "max" if word == "maximize" else "min"
            section = "objective"
            continue
        if word == "subject to":
            section = "constraints"
            continue
        if word == "bounds":
            section = "bounds"
            continue
        if word == "binary":
            section = "binary"
            continue
        if word == "general":
            section = "general"
            continue
        if word == "end":
            break
        body = line.strip()
        if section == "objective":
            expr = body.split(":", 1)[1] if ":" in body else body
            objective.extend(_parse_expr(expr))
        elif section == "constraints":
            cname, rest = body.split(":", 1)
            m = re.search(r"(<=|>=|=)\s*([-+]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\s*$", rest)
            if not m:
                raise ValueError(f"cannot parse constraint line: {line!r}")
            rel, rhs = m.group(1), float(m.group(2))
            constraints.append(Constraint(
                cname.strip(), tuple(_parse_expr(rest[: m.start()])), rel, rhs))
        elif section == "bounds":
            m = re.match(r"([-+]?[\d.eE+-]+)\s*<=\s*(\S+)\s*<=\s*([-+]?[\d.eE+-]+)", body)
            if not m:
                raise ValueError(f"cannot parse bound line: {line!r}")
            bounds[m.group(2)] = (float(m.group(1)), float(m.group(3)))
        elif section == "binary":
            binaries.extend(body.split())
        elif section == "general":
            generals.extend(body.split())
    var_names: list[str] = []
    seen = set()
    for terms in [objective] + [list(c.terms) for c in constraints]:
        for _, v in terms:
            if v not in seen:
                seen.add(v)
                var_names.append(v)
    for v in list(bounds) + binaries + generals:
        if v not in seen:
            seen.add(v)
            var_names.append(v)
    variables = []
    for v in var_names:
        if v in binaries:
            variables.append(Variable(v, BINARY))
        elif v in generals:
            lo, hi = bounds.get(v, (0, 1))
            variables.append(Variable(v, INTEGER, lo, hi))
        else:
            lo, hi = bounds.get(v, (0, 1))
            variables.append(Variable(v, CONTINUOUS, lo, hi))
    return MipInstance(
        name=name, variables=tuple(variables), constraints=tuple(constraints),
        objective_sense=sense, objective_terms=tuple(objective))


def instances_equivalent(a: MipInstance, b: MipInstance, tol: float = 1e-9) -> bool:
    """Structural equality up to numeric tolerance (used by round-trip tests)."""
    def norm_terms(terms):
        agg: dict[str, float] = {}
        for coef, v in terms:
            agg[v] = agg.get(v, 0.0) + float(coef)
        return agg

    def close(x: dict[str, float], y: dict[str, float]) -> bool:
        return set(x) == set(y) and all(abs(x[k] - y[k]) <= tol for k in x)

    if {v.name: v.kind for v in a.variables} != {v.name: v.kind for v in b.variables}:
        return False
    if not close(norm_terms(a.objective_terms), norm_terms(b.objective_terms)):
        return False
    if len(a.constraints) != len(b.constraints):
        return False
    for ca, cb in zip(a.constraints, b.constraints):
        if ca.name != cb.name or ca.relation != cb.relation:
            return False
        if abs(float(ca.rhs) - float(cb.rhs)) > tol:
            return False
        if not close(norm_terms(ca.terms), norm_terms(cb.terms)):
            return False
    return True


# ---------------------------------------------------------------------------
# external solver adapter
# ---------------------------------------------------------------------------

def run_external_solver(instance: MipInstance, solver_command: str,
                        timeout: Optional[float] = None) -> Assignment:
    """Emit the instance, run a configured solver command on it, and parse
    the solution file it writes.

    ``solver_command`` is a shell template with ``{lp}`` and ``{sol}``
    placeholders for the model and solution file paths.  The solution file
    holds an optional ``status <word>`` line, an ``objective <value>`` line,
    and one ``<name> <value>`` pair per line.
    """
    if "{lp}" not in solver_command or "{sol}" not in solver_command:
        raise SolverAdapterError(
            "solver command template must contain {lp} and {sol} placeholders")
    with tempfile.TemporaryDirectory(prefix="qbc_solver_") as tmp:
        lp_path = Path(tmp) / "model.lp"
        sol_path = Path(tmp) / "solution.txt"
        lp_path.write_text(emit_lp(instance))
        cmd = solver_command.format(lp=str(lp_path), sol=str(sol_path))
        proc = subprocess.run(cmd, shell=True, capture_output=True, text=True,
                              timeout=timeout)
        captured = proc.stdout + proc.stderr
        if proc.returncode != 0:
            raise SolverAdapterError(
                f"solver exited with status {proc.returncode}", captured)
        if not sol_path.exists():
            raise SolverAdapterError("solver wrote no solution file", captured)
        return parse_solution_file(sol_path.read_text(), instance,
                                   captured_output=captured)


def parse_solution_file(text: str, instance: MipInstance,
                        captured_output: str = "") -> Assignment:
    status = "optimal"
    objective: Optional[float] = None
    values: dict[str, float] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise SolverAdapterError(
                f"unparseable solution line: {line!r}", captured_output)
        key, val = parts
        if key == "status":
            status = val.lower()
        elif key == "objective":
            try:
                objective = float(val)
            except ValueError:
                raise SolverAdapterError(
                    f"bad objective value: {val!r}", captured_output) from None
        else:
            try:
                values[key] = float(val)
            except ValueError:
                raise SolverAdapterError(
                    f"bad value for {key}: {val!r}", captured_output) from None
    if status == "infeasible":
        return Assignment(values={}, objective=None, status="infeasible")
    declared = {v.name for v in instance.variables}
    missing = declared - set(values)
    if missing:
        raise SolverAdapterError(
            f"solution file misses {len(missing)} variables "
            f"(e.g. {sorted(missing)[:3]})", captured_output)
    rounded = {}
    for v in instance.variables:
        x = values[v.name]
        if v.kind == BINARY:
            if min(abs(x), abs(x - 1)) > VERIFY_TOL:
                raise SolverAdapterError(
                    f"binary variable {v.name} has non-binary value {x}",
                    captured_output)
            x = float(round(x))
        rounded[v.name] = x
    return Assignment(values=rounded, objective=objective, status=status)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def evaluate_constraint(c: Constraint, values: dict[str, float]) -> float:
    lhs = sum(float(coef) * values[v] for coef, v in c.terms)
    lhs += sum(float(coef) * values[a] * values[b] for coef, a, b in c.quad_terms)
    return lhs


def constraint_satisfied(c: Constraint, values: dict[str, float],
                         tol: float = VERIFY_TOL) -> bool:
    lhs = evaluate_constraint(c, values)
    rhs = float(c.rhs)
    if c.relation == "<=":
        return lhs <= rhs + tol
    if c.relation == ">=":
        return lhs >= rhs - tol
    return abs(lhs - rhs) <= tol


def verify_assignment(g: BipartiteGraph, instance: MipInstance,
                      assignment: Assignment, gamma: RationalLike) -> Selection:
    """Check the assignment against every constraint, the edge-pick
    consistency, and the actual density requirement; return the selection."""
    gamma = as_fraction(gamma)
    if assignment.status != "optimal":
        raise VerificationError(f"assignment status is {assignment.status!r}")
    values = assignment.values
    for v in instance.variables:
        if v.name not in values:
            raise VerificationError(f"no value for variable {v.name}")
    for c in instance.constraints:
        if not constraint_satisfied(c, values):
            raise VerificationError(
                f"constraint {c.name} violated: lhs = "
                f"{evaluate_constraint(c, values):.9g}, "
                f"relation {c.relation} {float(c.rhs):.9g}", constraint=c.name)
    u_set = [i for i in range(g.u_count) if round(values[f"u_{i}"]) == 1]
    v_set = [j for j in range(g.v_count) if round(values[f"v_{j}"]) == 1]
    for i, j in g.edges():
        want = 1 if (i in u_set and j in v_set) else 0
        if round(values[f"y_{i}_{j}"]) != want:
            raise VerificationError(
                f"edge pick y_{i}_{j} = {values[f'y_{i}_{j}']} inconsistent "
                f"with vertex picks", constraint=f"link_{i}_{j}")
    sel = induced_stats(g, u_set, v_set)
    if not u_set or not v_set:
        raise VerificationError("assignment selects an empty side")
    if not is_gamma_quasi_biclique(g, sel, gamma):
        raise VerificationError(
            f"selected subgraph has density {sel.density} below gamma {gamma}")
    return sel
