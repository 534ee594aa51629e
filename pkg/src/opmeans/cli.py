"""Command-line front end and suite runner.

Subcommands:

  constants   print the reversal constants for a mean (or a path comparison)
              on an interval [m, M]
  verify      run a verification suite over seeded random instances and
              write a JSON or CSV report
  eval        apply a mean (or its dual, or a tensor/entrywise product) to
              matrices read from JSON files
  gen         write the matrices of one random instance to files

Exit codes: 0 when everything holds, 1 when a suite reports failing trials,
2 on usage errors (bad flags, malformed files, violated preconditions).

Reports are deterministic: the same configuration produces byte-identical
output.  Instance randomness is counter-based, so trial i of a run seeded
with s is always generated from the stream keyed (s + i), independent of
execution order.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import itertools
import json
import os
import sys

import numpy as np

from .errors import (
    ConstraintViolation,
    DegenerateIntervalError,
    DimensionMismatch,
    DomainError,
    InvalidMeanError,
    NumericalDegeneracy,
    PreconditionError,
)
from .instances import InstanceSpec, random_constrained_pair, split_stream
from .matrix_ops import hadamard_product, mean, tensor_product
from .scalar_kernel import (
    MeanDescriptor,
    SpectralBounds,
    arithmetic,
    closed_form_weighted_constant,
    dual_descriptor,
    gamma_constant,
    geometric,
    harmonic,
    lee_constant,
    power_path,
    secant_coefficients,
    standard_catalog,
    theorem25_constants,
    zeta_constant,
)
from .verifiers import (
    VerificationReport,
    _lemma31_gap,
    make_report,
    report_to_dict,
    verify_callebaut_chain,
    verify_gm_factorization,
    verify_hadamard_refinement,
    verify_milne_reverse,
    verify_path_monotonicity,
    verify_reverse_superadditivity,
    verify_scalar_daykin_chain,
    verify_superadditivity,
    verify_tensor_lemma32,
    verify_theorem22,
    verify_theorem25,
)
from . import verifiers as _verifiers

__all__ = [
    "SuiteConfig",
    "SUITE_NAMES",
    "run_suite",
    "report_to_json_text",
    "report_to_csv_text",
    "matrix_to_doc",
    "matrix_from_doc",
    "load_matrix",
    "dump_matrix",
    "parse_mean_spec",
    "main",
]

_MASK64 = (1 << 64) - 1


class UsageError(Exception):
    """Bad flags or inconsistent parameters; mapped to exit code 2."""


# ---------------------------------------------------------------------------
# matrix JSON


def matrix_to_doc(a) -> dict:
    """Matrix -> plain dict {"n": size, "re": rows, "im": rows (if any)}."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    doc = {"n": int(a.shape[0]), "re": [[float(v) for v in row] for row in a.real]}
    if np.any(a.imag != 0.0):
        doc["im"] = [[float(v) for v in row] for row in a.imag]
    return doc


def matrix_from_doc(doc) -> np.ndarray:
    """Inverse of matrix_to_doc.  Raises UsageError on malformed documents."""
    if not isinstance(doc, dict) or "n" not in doc or "re" not in doc:
        raise UsageError('matrix document needs keys "n" and "re"')
    n = int(doc["n"])
    re = np.asarray(doc["re"], dtype=float)
    if re.shape != (n, n):
        raise UsageError(f'"re" must be {n}x{n}, got shape {re.shape}')
    if "im" in doc:
        im = np.asarray(doc["im"], dtype=float)
        if im.shape != (n, n):
            raise UsageError(f'"im" must be {n}x{n}, got shape {im.shape}')
    else:
        im = np.zeros((n, n))
    return re + 1j * im


def load_matrix(path: str) -> np.ndarray:
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return matrix_from_doc(doc)


def dump_matrix(a) -> str:
    return json.dumps(matrix_to_doc(a), sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# mean specs


def parse_mean_spec(spec: str, alpha=None) -> MeanDescriptor:
    """Parse a --mean flag value.

    "arithmetic", "geometric", "harmonic" take the weight from --alpha
    (default 0.5); "power_path:R,T" carries its parameters inline.
    """
    s = str(spec).strip()
    if s.startswith("power_path"):
        if ":" not in s:
            raise UsageError("power_path needs inline parameters, e.g. power_path:0.5,0.3")
        body = s.split(":", 1)[1]
        toks = [tok.strip() for tok in body.split(",")]
        if len(toks) != 2:
            raise UsageError(f"power_path takes exactly r,t — got {body!r}")
        return power_path(float(toks[0]), float(toks[1]))
    w = 0.5 if alpha is None else float(alpha)
    if s == "arithmetic":
        return arithmetic(w)
    if s == "geometric":
        return geometric(w)
    if s == "harmonic":
        return harmonic(w)
    raise UsageError(
        f"unknown mean {spec!r} (expected arithmetic, geometric, harmonic, or power_path:r,t)"
    )


# ---------------------------------------------------------------------------
# suite runner

SUITE_NAMES = (
    "superadditivity",
    "reverse_superadditivity",
    "callebaut_chain",
    "path_monotonicity",
    "theorem22",
    "milne_reverse",
    "theorem25",
    "scalar_lemma31",
    "tensor_lemma32",
    "hadamard_refinement",
    "gm_factorization",
    "scalar_daykin_chain",
)

DEFAULT_DIMS = (2, 3, 4, 6)
DEFAULT_N_TERMS = (1, 2, 5)
DEFAULT_REPS = 200
DEFAULT_SEED = 42

# per-trial parameter rotations used when the caller pins nothing
MEAN_CATALOG = standard_catalog()
PATH_MONO_CATALOG = (
    (0.7, 0.5), (0.7, 0.6), (0.9, 0.3), (1.0, 0.5), (0.3, 0.5),
    (0.1, 0.2), (0.0, 0.5), (0.5, 0.5), (0.8, 0.35), (0.6, 0.45),
)
THEOREM25_CATALOG = tuple(
    itertools.product((0.0, 0.5, 1.0), (0.0, 0.1, 0.3, 0.7, 0.9, 1.0), (0.25, 0.5, 0.75))
)
REFINEMENT_CATALOG = (
    (0.6, 0.75), (0.51, 0.51), (0.7, 1.0), (0.9, 0.95), (0.4, 0.25),
    (0.49, 0.2), (0.3, 0.0), (0.45, 0.45), (0.8, 0.8), (0.2, 0.1),
)
DAYKIN_CATALOG = (
    ("callebaut", 0.0), ("callebaut", 0.3), ("callebaut", 0.7),
    ("callebaut", 1.0), ("milne", None),
)


@dataclasses.dataclass(frozen=True)
class SuiteConfig:
    """Everything a verification run depends on.

    params carries optional per-suite pins: "mean" (a MeanDescriptor),
    "r", "t", "s", "pair".  When a group is absent the suite rotates
    through its built-in catalog, one entry per trial.
    """

    suite: str
    dims: tuple = DEFAULT_DIMS
    n_terms: tuple = DEFAULT_N_TERMS
    bounds: SpectralBounds = SpectralBounds(1.0, 4.0)
    seed: int = DEFAULT_SEED
    repetitions: int = DEFAULT_REPS
    complex: bool = False
    rel_tol: float = 1e-9
    constant_scale: float = 1.0
    params: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise UsageError(
                f"unknown suite {self.suite!r}; choose from {', '.join(SUITE_NAMES)}"
            )
        if self.repetitions < 1:
            raise UsageError(f"repetitions must be >= 1, got {self.repetitions}")
        if not self.dims or not self.n_terms:
            raise UsageError("dims and n_terms must be nonempty")


def _pin_group(cfg: SuiteConfig, names) -> tuple:
    """All-or-nothing lookup of a parameter group; None when absent."""
    vals = [cfg.params.get(n) for n in names]
    if all(v is None for v in vals):
        return None
    if any(v is None for v in vals):
        raise UsageError(
            f"suite {cfg.suite!r} needs all of {', '.join('--' + n for n in names)} or none"
        )
    return tuple(float(v) for v in vals)


def _pinned_mean(cfg: SuiteConfig):
    d = cfg.params.get("mean")
    if d is not None and not isinstance(d, MeanDescriptor):
        raise UsageError("params['mean'] must be a MeanDescriptor")
    return d


def _instance_pairs(rng, dim, n, cfg: SuiteConfig):
    return [
        random_constrained_pair(dim, cfg.bounds, rng, complex=cfg.complex)
        for _ in range(n)
    ]


def _serialize_pairs(pairs) -> dict:
    return {
        "pairs": [
            {"a": matrix_to_doc(a), "b": matrix_to_doc(b)} for a, b in pairs
        ]
    }


def _run_trial(cfg: SuiteConfig, i: int, trial_seed: int):
    """One trial of cfg.suite: returns (single-trial report, raw instance)."""
    rng = split_stream(trial_seed, 0)
    dim = int(cfg.dims[i % len(cfg.dims)])
    n = int(cfg.n_terms[i % len(cfg.n_terms)])
    suite = cfg.suite
    tol = cfg.rel_tol
    cs = cfg.constant_scale

    if suite in ("superadditivity", "callebaut_chain"):
        desc = _pinned_mean(cfg) or MEAN_CATALOG[i % len(MEAN_CATALOG)]
        pairs = _instance_pairs(rng, dim, n, cfg)
        fn = verify_superadditivity if suite == "superadditivity" else verify_callebaut_chain
        return fn(pairs, desc, tol, seed=trial_seed), _serialize_pairs(pairs)

    if suite == "reverse_superadditivity":
        desc = _pinned_mean(cfg) or MEAN_CATALOG[i % len(MEAN_CATALOG)]
        pairs = _instance_pairs(rng, dim, n, cfg)
        rep = verify_reverse_superadditivity(pairs, desc, cfg.bounds, tol, cs, seed=trial_seed)
        return rep, _serialize_pairs(pairs)

    if suite == "theorem22":
        desc = _pinned_mean(cfg) or MEAN_CATALOG[i % len(MEAN_CATALOG)]
        pairs = _instance_pairs(rng, dim, n, cfg)
        rep = verify_theorem22(pairs, desc, cfg.bounds, tol, cs, seed=trial_seed)
        return rep, _serialize_pairs(pairs)

    if suite == "milne_reverse":
        pairs = _instance_pairs(rng, dim, n, cfg)
        rep = verify_milne_reverse(pairs, cfg.bounds, tol, cs, seed=trial_seed)
        return rep, _serialize_pairs(pairs)

    if suite == "path_monotonicity":
        pin = _pin_group(cfg, ("t", "s"))
        t, s = pin if pin else PATH_MONO_CATALOG[i % len(PATH_MONO_CATALOG)]
        pairs = _instance_pairs(rng, dim, n, cfg)
        rep = verify_path_monotonicity(pairs, t, s, tol, seed=trial_seed)
        return rep, _serialize_pairs(pairs)

    if suite == "theorem25":
        pin = _pin_group(cfg, ("r", "t", "s"))
        if pin:
            r, t, s = pin
        else:
            r, t, s0 = THEOREM25_CATALOG[i % len(THEOREM25_CATALOG)]
            s = s0 * t + (1.0 - s0) * (1.0 - t)
        pairs = _instance_pairs(rng, dim, n, cfg)
        rep = verify_theorem25(pairs, r, t, s, cfg.bounds, tol, cs, seed=trial_seed)
        return rep, _serialize_pairs(pairs)

    if suite in ("tensor_lemma32", "hadamard_refinement"):
        pin = _pin_group(cfg, ("s", "t"))
        s, t = pin if pin else REFINEMENT_CATALOG[i % len(REFINEMENT_CATALOG)]
        if suite == "tensor_lemma32":
            a, b = random_constrained_pair(dim, cfg.bounds, rng, complex=cfg.complex)
            rep = verify_tensor_lemma32(a, b, s, t, tol, seed=trial_seed)
            return rep, {"a": matrix_to_doc(a), "b": matrix_to_doc(b)}
        pairs = _instance_pairs(rng, dim, n, cfg)
        rep = verify_hadamard_refinement(pairs, s, t, tol, seed=trial_seed)
        return rep, _serialize_pairs(pairs)

    if suite == "gm_factorization":
        desc = _pinned_mean(cfg) or MEAN_CATALOG[i % len(MEAN_CATALOG)]
        a, b = random_constrained_pair(dim, cfg.bounds, rng, complex=cfg.complex)
        rep = verify_gm_factorization(a, b, desc, seed=trial_seed)
        return rep, {"a": matrix_to_doc(a), "b": matrix_to_doc(b)}

    if suite == "scalar_lemma31":
        a = float(rng.uniform(1e-3, 100.0))
        b = float(rng.uniform(1e-3, 100.0))
        width = float(rng.uniform(0.01, 3.0))
        nu = 1.0 + width if rng.integers(0, 2) else -width
        gap = _lemma31_gap(a, b, nu)
        link = _verifiers._scalar_link("lemma31", gap)
        trial = _verifiers._trial([link], 1, 1, {"a": a, "b": b, "nu": nu}, trial_seed)
        rep = make_report("scalar_lemma31", {"a": a, "b": b, "nu": nu}, [trial], tol)
        return rep, {"a": a, "b": b, "nu": nu}

    if suite == "scalar_daykin_chain":
        pair = cfg.params.get("pair")
        s = cfg.params.get("s")
        if pair is None and s is None:
            pair, s = DAYKIN_CATALOG[i % len(DAYKIN_CATALOG)]
        elif pair is None:
            raise UsageError("--s without --pair makes no sense for this suite")
        elif pair == "callebaut" and s is None:
            raise UsageError("the callebaut pair needs --s")
        elif pair == "milne" and s is not None:
            raise UsageError("the milne pair takes no --s")
        length = max(n, 1)
        # single-entry chains are exact equalities, so the absolute 1e-12
        # scalar slack caps how large the terms may get; entries below 3
        # keep worst-case roundoff near 4e-13
        xs = rng.uniform(0.1, 3.0, length)
        ys = rng.uniform(0.1, 3.0, length)
        rep = verify_scalar_daykin_chain(xs, ys, pair, s, seed=trial_seed)
        return rep, {"xs": [float(v) for v in xs], "ys": [float(v) for v in ys]}

    raise UsageError(f"unknown suite {suite!r}")


def _suite_params(cfg: SuiteConfig) -> dict:
    params = {
        "dims": [int(d) for d in cfg.dims],
        "n_terms": [int(n) for n in cfg.n_terms],
        "m": cfg.bounds.m,
        "M": cfg.bounds.M,
        "seed": int(cfg.seed),
        "repetitions": int(cfg.repetitions),
        "complex": bool(cfg.complex),
        "rel_tol": float(cfg.rel_tol),
        "constant_scale": float(cfg.constant_scale),
    }
    pinned = {}
    for key, val in sorted(cfg.params.items()):
        if val is None:
            continue
        pinned[key] = val.describe() if isinstance(val, MeanDescriptor) else val
    params["pinned"] = pinned
    return params


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Run cfg.repetitions independent trials and merge them into one report.

    Trial i draws its instance from the stream keyed (seed + i) and its
    parameters from the suite catalog (entry i modulo the catalog length)
    unless pinned.  Failing trials carry their full instance data.
    """
    trials = []
    for i in range(cfg.repetitions):
        trial_seed = (int(cfg.seed) + i) & _MASK64
        rep1, instance = _run_trial(cfg, i, trial_seed)
        trial = rep1.trials[0]
        if not trial.holds and instance is not None:
            trial = dataclasses.replace(trial, instance=instance)
        trials.append(trial)
    return make_report(cfg.suite, _suite_params(cfg), trials, cfg.rel_tol)


# ---------------------------------------------------------------------------
# report rendering

CSV_COLUMNS = (
    "suite", "seed", "dim", "n_terms", "mean", "r", "t", "s", "s0",
    "pair", "m", "M", "worst_link_gap", "holds",
)


def report_to_json_text(rep: VerificationReport) -> str:
    return json.dumps(report_to_dict(rep), sort_keys=True, indent=2) + "\n"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def report_to_csv_text(rep: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for t in rep.trials:
        worst = min((l.min_gap for l in t.links), default=0.0)
        p = t.params
        writer.writerow([
            _csv_cell(rep.suite),
            _csv_cell(t.seed),
            _csv_cell(t.dim),
            _csv_cell(t.n_terms),
            _csv_cell(p.get("mean")),
            _csv_cell(p.get("r")),
            _csv_cell(p.get("t")),
            _csv_cell(p.get("s")),
            _csv_cell(p.get("s0")),
            _csv_cell(p.get("pair")),
            _csv_cell(p.get("m", rep.params.get("m"))),
            _csv_cell(p.get("M", rep.params.get("M"))),
            _csv_cell(float(worst)),
            _csv_cell(bool(t.holds)),
        ])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _print_constants_block(mu, nu, g, z, sgz):
    print(f"mu = {mu!r}")
    print(f"nu = {nu!r}")
    print(f"gamma = {g!r}")
    print(f"zeta = {z!r}")
    print(f"sqrt_gamma_zeta = {sgz!r}")


def cmd_constants(args) -> int:
    bounds = SpectralBounds(args.m, args.M)
    path_flags = [args.r, args.t, args.s0]
    if any(v is not None for v in path_flags):
        if any(v is None for v in path_flags):
            raise UsageError("path mode needs all of --r, --t, --s0")
        rc = theorem25_constants(args.r, args.t, args.s0, bounds)
        print(f"mode = path_comparison(r={args.r:g}, t={args.t:g}, s0={args.s0:g})")
        print(f"interval = [{bounds.m!r}, {bounds.M!r}]")
        _print_constants_block(rc.mu, rc.nu, rc.gamma, rc.zeta, rc.sqrt_gamma_zeta)
        return 0
    if args.mean is None:
        raise UsageError("need --mean (or the path mode flags --r --t --s0)")
    desc = parse_mean_spec(args.mean, args.alpha)
    mu, nu = secant_coefficients(desc, bounds)
    g = gamma_constant(desc, bounds)
    z = zeta_constant(desc, bounds)
    print(f"mean = {desc.describe()}")
    print(f"interval = [{bounds.m!r}, {bounds.M!r}]")
    _print_constants_block(mu, nu, g, z, float(np.sqrt(g * z)))
    if desc.kind == "geometric":
        print(f"closed_form = {closed_form_weighted_constant(desc.w, bounds)!r}")
        print(f"lee_constant = {lee_constant(bounds)!r}")
    return 0


def _parse_int_list(text: str, flag: str) -> tuple:
    try:
        vals = tuple(int(tok) for tok in str(text).split(",") if tok.strip())
    except ValueError as exc:
        raise UsageError(f"{flag} expects a comma-separated integer list, got {text!r}") from exc
    if not vals:
        raise UsageError(f"{flag} must not be empty")
    return vals


def cmd_verify(args) -> int:
    suite = args.suite
    if suite.startswith("verify_"):
        suite = suite[len("verify_"):]
    params = {}
    if args.mean is not None:
        params["mean"] = parse_mean_spec(args.mean, args.alpha)
    for key in ("r", "t", "s"):
        val = getattr(args, key)
        if val is not None:
            params[key] = float(val)
    if args.pair is not None:
        params["pair"] = args.pair
    cfg = SuiteConfig(
        suite=suite,
        dims=_parse_int_list(args.dim, "--dim"),
        n_terms=_parse_int_list(args.n_terms, "--n-terms"),
        bounds=SpectralBounds(args.m, args.M),
        seed=int(args.seed),
        repetitions=int(args.reps),
        complex=bool(args.complex),
        rel_tol=float(args.tol),
        constant_scale=float(args.constant_scale),
        params=params,
    )
    rep = run_suite(cfg)
    text = report_to_csv_text(rep) if args.format == "csv" else report_to_json_text(rep)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(
            f"{rep.suite}: {rep.n_pass}/{len(rep.trials)} trials hold, "
            f"worst gap {rep.worst_gap!r} -> {args.out}"
        )
    else:
        sys.stdout.write(text)
    return 0 if rep.n_fail == 0 else 1


def cmd_eval(args) -> int:
    a = load_matrix(args.files[0])
    b = load_matrix(args.files[1])
    if args.op in ("mean", "dual"):
        if args.mean is None:
            raise UsageError(f"eval {args.op} needs --mean")
        desc = parse_mean_spec(args.mean, args.alpha)
        if args.op == "dual":
            desc = dual_descriptor(desc)
        out = mean(a, b, desc)
    elif args.op == "tensor":
        out = tensor_product(a, b)
    elif args.op == "hadamard":
        out = hadamard_product(a, b)
    else:
        raise UsageError(f"unknown eval operation {args.op!r}")
    sys.stdout.write(dump_matrix(out))
    return 0


def cmd_gen(args) -> int:
    spec = InstanceSpec(
        dim=int(args.dim),
        n_terms=int(args.n_terms),
        bounds=SpectralBounds(args.m, args.M),
        seed=int(args.seed),
        complex=bool(args.complex),
    )
    os.makedirs(args.out_dir, exist_ok=True)
    rng = split_stream(spec.seed, 0)
    written = []
    for j in range(spec.n_terms):
        a, b = random_constrained_pair(spec.dim, spec.bounds, rng, complex=spec.complex)
        for tag, mat in (("A", a), ("B", b)):
            path = os.path.join(args.out_dir, f"{tag}_{j}.json")
            with open(path, "w") as fh:
                fh.write(dump_matrix(mat))
            written.append(path)
    spec_path = os.path.join(args.out_dir, "instance.json")
    with open(spec_path, "w") as fh:
        fh.write(spec.to_json() + "\n")
    written.append(spec_path)
    print(f"wrote {len(written)} files to {args.out_dir}")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_bounds_flags(p):
    p.add_argument("--m", type=float, default=1.0, help="lower relative bound (default 1)")
    p.add_argument("--M", type=float, default=4.0, help="upper relative bound (default 4)")


def _add_mean_flags(p):
    p.add_argument("--mean", help="arithmetic | geometric | harmonic | power_path:r,t")
    p.add_argument("--alpha", type=float, default=None,
                   help="weight for the named means (default 0.5)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opmeans",
        description="Operator-mean inequality constants and verification suites.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("constants", help="print reversal constants for a mean on [m, M]")
    _add_mean_flags(pc)
    _add_bounds_flags(pc)
    pc.add_argument("--r", type=float, default=None, help="path mode: exponent")
    pc.add_argument("--t", type=float, default=None, help="path mode: comparison position")
    pc.add_argument("--s0", type=float, default=None, help="path mode: interpolation weight")
    pc.set_defaults(func=cmd_constants)

    pv = sub.add_parser("verify", help="run a verification suite and write a report")
    pv.add_argument("--suite", required=True, help=f"one of: {', '.join(SUITE_NAMES)}")
    pv.add_argument("--dim", default="2,3,4,6", help="comma list of dimensions to rotate")
    pv.add_argument("--n-terms", default="1,2,5", help="comma list of family sizes to rotate")
    _add_bounds_flags(pv)
    pv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pv.add_argument("--reps", type=int, default=DEFAULT_REPS)
    pv.add_argument("--complex", action="store_true", help="draw complex Hermitian instances")
    pv.add_argument("--tol", type=float, default=1e-9, help="relative Loewner tolerance")
    pv.add_argument("--constant-scale", type=float, default=1.0,
                    help="inflate every certified constant by this factor (>= 1)")
    _add_mean_flags(pv)
    pv.add_argument("--r", type=float, default=None)
    pv.add_argument("--t", type=float, default=None)
    pv.add_argument("--s", type=float, default=None)
    pv.add_argument("--pair", choices=("callebaut", "milne"), default=None)
    pv.add_argument("--out", default=None, help="report file (stdout when omitted)")
    pv.add_argument("--format", choices=("json", "csv"), default="json")
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("eval", help="apply an operation to matrices from JSON files")
    pe.add_argument("op", choices=("mean", "dual", "tensor", "hadamard"))
    _add_mean_flags(pe)
    pe.add_argument("files", nargs=2, metavar="FILE")
    pe.set_defaults(func=cmd_eval)

    pg = sub.add_parser("gen", help="write one random instance to files")
    pg.add_argument("--dim", type=int, required=True)
    pg.add_argument("--n-terms", type=int, default=1)
    _add_bounds_flags(pg)
    pg.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pg.add_argument("--complex", action="store_true")
    pg.add_argument("--out-dir", required=True)
    pg.set_defaults(func=cmd_gen)

    return p


_USAGE_ERRORS = (
    UsageError,
    DomainError,
    DegenerateIntervalError,
    DimensionMismatch,
    InvalidMeanError,
    NumericalDegeneracy,
    PreconditionError,
    ConstraintViolation,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
