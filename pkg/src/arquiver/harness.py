"""Deterministic generators and property suites over random instances.

Every random object is a pure function of (seed, trial index, role label):
the three are hashed with blake2b into a 64-bit stream seed for a dedicated
Mersenne Twister instance, so trials are independent, replayable one at a
time, and safe to farm out to worker processes.  run_suite aggregates
results in trial order, which makes reports byte-identical for identical
invocations regardless of the number of jobs.

Suites (each checks one library-level identity on random instances):

* ar-dim: dim Ext^1(X,Y) = dim Hom(tau^- Y, X) = dim Hom(Y, tau X).
* perfect: the pairing Gram matrix has rank dim Ext^1(X,Y).
* bifunctorial: the pairing respects composition in both arguments.
* ev-lemma: evaluation symmetry and the trace normalization.
* signs: a class presented by a vertexwise tuple pairs with the translated
  morphism as minus the trace pairing.
* routes: the presentation route and the realized-sequence route compute
  the same translated class.
* theorem: the pairing is invariant under the inverse translate.
* euler: dim Hom - dim Ext^1 equals the Euler form of the dimension vectors.
* kills: the translate kills projectives, the inverse translate injectives.

Trials whose preconditions fail after bounded resampling (an X with an
injective summand where one is forbidden) are counted as skipped, never as
failures.
"""

from __future__ import annotations

import hashlib
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .exactmat import FieldSpec, Matrix, mat_rank, parse_field
from .quiverpath import Quiver
from .repcat import (
    ExtClass,
    Rep,
    RepMorphism,
    ext1_space,
    ext_pull,
    ext_push,
    euler_form,
    has_injective_summand,
    is_projective,
    hom_dim,
    hom_space,
    indecomposable,
    std_resolutions,
    unit_model_map,
    adjoint_to_hom_arrows,
    adjoint_to_hom_dual,
    arrows_model_map,
    dual_model_map,
    INJECTIVE,
    PROJECTIVE,
)
from .artranslate import (
    direct_translate_data,
    tau_inverse_class,
    tau_inverse_class_via_ses,
    tau_inverse_mor,
    tau_inverse_rep,
    tau_rep,
    translate_presentation,
)
from .arpairing import (
    ev_evaluate,
    pairing_gram,
    pairing_prime,
    pairing_prime_fast,
    verify_tau_invariance,
    verify_translate_identity,
)

RESAMPLE_LIMIT = 10


@dataclass(frozen=True)
class GenConfig:
    """Deterministic generation parameters.

    Generation is a pure function of (seed, trial); the caps bound quiver
    size and vertex dimensions.  Defaults keep the largest intermediate
    models in the low hundreds of dimensions.
    """

    seed: int = 0
    max_vertices: int = 6
    max_arrows: int = 8
    max_dim: int = 5
    field: FieldSpec = dc_field(default_factory=lambda: FieldSpec.prime(10007))
    trials: int = 500

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_arrows < 0 or self.max_dim < 0:
            raise ValueError("generation caps must be positive")

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "max_vertices": self.max_vertices,
            "max_arrows": self.max_arrows,
            "max_dim": self.max_dim,
            "field": self.field.spec_string(),
            "trials": self.trials,
        }


def trial_rng(seed: int, trial: int, label: str) -> random.Random:
    """Independent PRNG stream for one role of one trial.

    The 64-bit stream seed is the blake2b digest of "seed:trial:label", so
    streams never collide across roles and are reproducible everywhere.
    """
    digest = hashlib.blake2b(f"{seed}:{trial}:{label}".encode(), digest_size=8)
    return random.Random(int.from_bytes(digest.digest(), "big"))


def _rand_entry(rng: random.Random, fs: FieldSpec):
    if fs.is_prime_field:
        return rng.randrange(fs.characteristic)
    return rng.randint(-3, 3)


def _rand_matrix(rng: random.Random, fs: FieldSpec, rows: int, cols: int) -> Matrix:
    return Matrix.from_rows(fs, [[_rand_entry(rng, fs) for _ in range(cols)]
                                 for _ in range(rows)], cols=cols)


PATH_CAP = 60
GROWTH_CAP = 6
QUIVER_ATTEMPTS = 20


def quiver_growth(q: Quiver) -> tuple[int, int]:
    """Path count and translate growth factor of a quiver.

    Returns (total number of directed paths, the largest column abs-sum of
    the Coxeter matrix and its inverse).  The second number bounds how much
    the translate and inverse translate can inflate total dimension, which
    is what determines the size of every derived model.
    """
    n = q.vertex_count
    counts = [[0] * n for _ in range(n)]
    for s, t in q.arrows:
        counts[s][t] += 1
    # E^{-1} = sum of powers of the (nilpotent) arrow-count matrix; its
    # (i, j) entry is the number of paths from i to j.
    einv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    power = [row[:] for row in einv]
    for _ in range(n):
        power = [[sum(power[i][k] * counts[k][j] for k in range(n))
                  for j in range(n)] for i in range(n)]
        if not any(any(row) for row in power):
            break
        for i in range(n):
            for j in range(n):
                einv[i][j] += power[i][j]
    paths = sum(sum(row) for row in einv)
    e = [[(1 if i == j else 0) - counts[i][j] for j in range(n)] for i in range(n)]
    cox = [[-sum(e[k][i] * einv[k][j] for k in range(n)) for j in range(n)]
           for i in range(n)]
    coxinv = [[-sum(e[i][k] * einv[j][k] for k in range(n)) for j in range(n)]
              for i in range(n)]
    growth = 0
    for v in range(n):
        growth = max(growth,
                     sum(abs(cox[w][v]) for w in range(n)),
                     sum(abs(coxinv[w][v]) for w in range(n)))
    return paths, growth


def gen_quiver(cfg: GenConfig, trial: int) -> Quiver:
    """Random acyclic quiver within the caps.

    Arrows are drawn from lower to higher index and the vertices are then
    relabeled by a random permutation, so topological order is not baked
    into the labels.  Candidates whose path count or translate growth
    factor would push derived models past the low hundreds of dimensions
    are resampled; after a bounded number of attempts the fallback is an
    equioriented line, which always satisfies the bounds.
    """
    rng = trial_rng(cfg.seed, trial, "quiver")
    n = rng.randint(1, cfg.max_vertices)
    if n == 1 and cfg.max_vertices > 1:
        # keep single-vertex quivers possible but rare
        n = rng.randint(1, cfg.max_vertices)
    perm = list(range(n))
    rng.shuffle(perm)
    if n == 1:
        return Quiver(1, ())
    lo = min(max(1, n - 1), cfg.max_arrows)
    for _ in range(QUIVER_ATTEMPTS):
        m = rng.randint(lo, cfg.max_arrows)
        arrows = []
        for _ in range(m):
            i, j = sorted(rng.sample(range(n), 2))
            arrows.append((perm[i], perm[j]))
        q = Quiver(n, tuple(arrows))
        degree = [0] * n
        for s, t in arrows:
            degree[s] += 1
            degree[t] += 1
        if not all(degree):
            continue
        paths, growth = quiver_growth(q)
        if paths <= PATH_CAP and growth <= GROWTH_CAP:
            return q
    return Quiver(n, tuple((perm[i], perm[i + 1])
                           for i in range(min(n - 1, cfg.max_arrows))))


def gen_rep(cfg: GenConfig, trial: int, label: str, quiver: Quiver) -> Rep:
    """Random representation with vertex dimensions up to the cap."""
    rng = trial_rng(cfg.seed, trial, "rep:" + label)
    fs = cfg.field
    dims = tuple(rng.randint(0, cfg.max_dim) for _ in range(quiver.vertex_count))
    mats = tuple(_rand_matrix(rng, fs, dims[t], dims[s]) for s, t in quiver.arrows)
    return Rep(quiver, fs, dims, mats)


def gen_rep_without_injective(cfg: GenConfig, trial: int, label: str,
                              quiver: Quiver) -> Rep | None:
    """Resample up to the limit for a rep without injective summands.

    Among admissible draws a non-projective one is preferred, since a
    projective makes every extension class vanish and the trial vacuous;
    the trial is skipped only when all draws have injective summands.
    """
    fallback = None
    for attempt in range(RESAMPLE_LIMIT):
        x = gen_rep(cfg, trial, f"{label}:{attempt}", quiver)
        if has_injective_summand(x):
            continue
        if not is_projective(x):
            return x
        if fallback is None:
            fallback = x
    return fallback


def gen_morphism(cfg: GenConfig, trial: int, label: str,
                 x: Rep, y: Rep) -> RepMorphism:
    """Random element of the span of the computed Hom-space basis."""
    rng = trial_rng(cfg.seed, trial, "mor:" + label)
    fs = cfg.field
    out = RepMorphism.zero(x, y)
    for b in hom_space(x, y):
        out = out + b.scale(fs.coerce(_rand_entry(rng, fs)))
    return out


def gen_class(cfg: GenConfig, trial: int, label: str, x: Rep, y: Rep) -> ExtClass:
    """Random extension class: a random cocycle, canonicalized."""
    rng = trial_rng(cfg.seed, trial, "ext:" + label)
    fs = cfg.field
    q = x.quiver
    cocycle = tuple(_rand_matrix(rng, fs, y.dims[t], x.dims[s])
                    for s, t in q.arrows)
    return ext1_space(x, y).class_of(cocycle)


def gen_vertex_tuple(cfg: GenConfig, trial: int, label: str,
                     x: Rep, y: Rep) -> tuple[Matrix, ...]:
    """Random vertexwise matrices X_i -> Y_i (no intertwining demanded)."""
    rng = trial_rng(cfg.seed, trial, "tuple:" + label)
    fs = cfg.field
    return tuple(_rand_matrix(rng, fs, y.dims[i], x.dims[i])
                 for i in range(x.quiver.vertex_count))


def _gen_pair_with_ext(cfg: GenConfig, trial: int, x: Rep,
                       quiver: Quiver) -> Rep:
    """Resample Y a few times until Ext^1(X, Y) is nonzero, for power."""
    y = gen_rep(cfg, trial, "y:0", quiver)
    for attempt in range(1, RESAMPLE_LIMIT):
        if ext1_space(x, y).dim > 0:
            break
        y = gen_rep(cfg, trial, f"y:{attempt}", quiver)
    return y


def instance_json(quiver: Quiver, fs: FieldSpec, **parts) -> dict:
    """Self-contained JSON form of a generated instance."""
    out = {"quiver": quiver.to_json(), "field": fs.spec_string()}
    for key, value in parts.items():
        if value is None:
            continue
        if isinstance(value, Rep):
            out[key] = value.to_json()
        elif isinstance(value, RepMorphism):
            out[key] = value.to_json()
        elif isinstance(value, ExtClass):
            out[key] = [m.to_flat_json() for m in value.cocycle]
        elif isinstance(value, tuple) and all(isinstance(m, Matrix) for m in value):
            out[key] = [m.to_flat_json() for m in value]
        else:
            out[key] = value
    return out


def gen_instance(cfg: GenConfig, trial: int) -> dict | None:
    """Self-contained random instance for the single-instance commands.

    Mirrors the main-theorem suite's generator: x is resampled for the
    no-injective-summand precondition, y for a nonzero Ext space, and f
    is a morphism from the derived translate of y into x.  Returns None
    when no admissible x turns up within the resample limit.
    """
    quiver = gen_quiver(cfg, trial)
    x = gen_rep_without_injective(cfg, trial, "x", quiver)
    if x is None:
        return None
    y = _gen_pair_with_ext(cfg, trial, x, quiver)
    z = gen_class(cfg, trial, "z", x, y)
    f = gen_morphism(cfg, trial, "f", tau_inverse_rep(y), x)
    out = instance_json(quiver, cfg.field, x=x, y=y, cocycle=z, f=f)
    out["trial"] = trial
    return out


def load_instance(data: dict) -> dict:
    """Decode a JSON instance back into live objects.

    Recognized keys: quiver, field, x, y, cocycle, f, g.  The cocycle is
    read as a class in Ext^1(x, y), f as a morphism from the derived
    translate of y into x (the shape of the main identity), and g as a
    vertexwise tuple of maps x_i -> y_i.

    Raises:
      KeyError, ValueError: missing or malformed fields.
    """
    quiver = Quiver.from_json(data["quiver"])
    fs = parse_field(data["field"])
    out: dict = {"quiver": quiver, "field": fs}
    x = y = None
    if "x" in data:
        x = Rep.from_json(quiver, data["x"])
        out["x"] = x
    if "y" in data:
        y = Rep.from_json(quiver, data["y"])
        out["y"] = y
    if "cocycle" in data:
        mats = tuple(
            Matrix.from_flat(fs, y.dims[t], x.dims[s], flat)
            for (s, t), flat in zip(quiver.arrows, data["cocycle"]))
        out["z"] = ext1_space(x, y).class_of(mats)
    if "f" in data:
        out["f"] = RepMorphism.from_json(tau_inverse_rep(y), x, data["f"])
    if "g" in data:
        out["g"] = tuple(
            Matrix.from_flat(fs, y.dims[i], x.dims[i], flat)
            for i, flat in enumerate(data["g"]))
    return out


PASS = "pass"
FAIL = "fail"
SKIP = "skip"


def _fail(detail: dict) -> tuple[str, dict]:
    return FAIL, detail


def _trial_ar_dim(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep(cfg, trial, "x", quiver)
    y = gen_rep(cfg, trial, "y", quiver)
    d_ext = ext1_space(x, y).dim
    d_right = hom_dim(tau_inverse_rep(y), x)
    d_left = hom_dim(y, tau_rep(x))
    if d_ext == d_right == d_left:
        return PASS, None
    detail = instance_json(quiver, cfg.field, x=x, y=y)
    detail["dims"] = {"ext": d_ext, "hom_from_translate": d_right,
                      "hom_into_translate": d_left}
    return _fail(detail)


def _trial_perfect(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep(cfg, trial, "x", quiver)
    y = gen_rep(cfg, trial, "y", quiver)
    gram = pairing_gram(x, y)
    rank = mat_rank(gram.matrix)
    if rank == len(gram.ext_basis):
        return PASS, None
    detail = instance_json(quiver, cfg.field, x=x, y=y)
    detail["gram"] = gram.to_json()
    return _fail(detail)


def _trial_bifunctorial(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep(cfg, trial, "x", quiver)
    y = _gen_pair_with_ext(cfg, trial, x, quiver)
    z = gen_class(cfg, trial, "z", x, y)
    xprime = gen_rep(cfg, trial, "xprime", quiver)
    ty = tau_inverse_rep(y)
    xm = gen_morphism(cfg, trial, "xm", xprime, x)
    fprime = gen_morphism(cfg, trial, "fprime", ty, xprime)
    lhs = pairing_prime(ext_pull(z, xm), fprime)
    rhs = pairing_prime(z, xm @ fprime)
    if lhs != rhs:
        detail = instance_json(quiver, cfg.field, x=x, y=y, xprime=xprime,
                               cocycle=z, xm=xm, fprime=fprime)
        detail["lhs"] = cfg.field.format(lhs)
        detail["rhs"] = cfg.field.format(rhs)
        detail["argument"] = "first"
        return _fail(detail)
    ypp = gen_rep(cfg, trial, "ypp", quiver)
    ym = gen_morphism(cfg, trial, "ym", y, ypp)
    gm = gen_morphism(cfg, trial, "gm", tau_inverse_rep(ypp), x)
    lhs = pairing_prime(ext_push(ym, z), gm)
    rhs = pairing_prime(z, gm @ tau_inverse_mor(ym))
    if lhs != rhs:
        detail = instance_json(quiver, cfg.field, x=x, y=y, ypp=ypp,
                               cocycle=z, ym=ym, gm=gm)
        detail["lhs"] = cfg.field.format(lhs)
        detail["rhs"] = cfg.field.format(rhs)
        detail["argument"] = "second"
        return _fail(detail)
    return PASS, None


def _trial_ev_lemma(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    fs = cfg.field
    x = gen_rep(cfg, trial, "x", quiver)
    y = gen_rep(cfg, trial, "y", quiver)
    rng = trial_rng(cfg.seed, trial, "ev")
    g = tuple(_rand_matrix(rng, fs, y.dims[t], x.dims[s]) for s, t in quiver.arrows)
    h = tuple(_rand_matrix(rng, fs, x.dims[s], y.dims[t]) for s, t in quiver.arrows)
    rx = std_resolutions(x)
    ry = std_resolutions(y)
    tpy = translate_presentation(y)
    dtx = direct_translate_data(x)
    u1 = adjoint_to_hom_arrows(x, y, g, ry.hom_omega) @ dual_model_map(y, x, h, tpy.dual_model)
    e1 = ev_evaluate(u1, tpy.dual_model, ry.hom_omega)
    u2 = adjoint_to_hom_dual(y, x, h, dtx.hom_dual) @ arrows_model_map(x, y, g, rx.proj_omega)
    e2 = ev_evaluate(u2, rx.proj_omega, dtx.hom_dual)
    if e1 != e2:
        detail = instance_json(quiver, fs, x=x, y=y, g=g, h=h)
        detail["lhs"] = fs.format(e1)
        detail["rhs"] = fs.format(e2)
        detail["part"] = "symmetry"
        return _fail(detail)
    t = gen_vertex_tuple(cfg, trial, "t", x, x)
    u = rx.unit_map @ unit_model_map(x, x, t, rx.proj_unit)
    got = ev_evaluate(u, rx.proj_unit, rx.hom_unit)
    want = fs.zero()
    for i in range(quiver.vertex_count):
        if x.dims[i]:
            want = want + t[i].trace()
    want = fs.coerce(want)
    if got != want:
        detail = instance_json(quiver, fs, x=x, t=t)
        detail["lhs"] = fs.format(got)
        detail["rhs"] = fs.format(want)
        detail["part"] = "trace"
        return _fail(detail)
    return PASS, None


def _trial_signs(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep_without_injective(cfg, trial, "x", quiver)
    if x is None:
        return SKIP, None
    y = gen_rep(cfg, trial, "y", quiver)
    f = gen_morphism(cfg, trial, "f", y, x)
    g = gen_vertex_tuple(cfg, trial, "g", x, y)
    report = verify_translate_identity(x, y, g, f)
    if report.equal:
        return PASS, None
    detail = instance_json(quiver, cfg.field, x=x, y=y, g=g, f=f)
    detail.update(report.to_json(cfg.field))
    return _fail(detail)


def _trial_routes(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep_without_injective(cfg, trial, "x", quiver)
    if x is None:
        return SKIP, None
    y = _gen_pair_with_ext(cfg, trial, x, quiver)
    z = gen_class(cfg, trial, "z", x, y)
    through_presentation = tau_inverse_class(z)
    through_sequence = tau_inverse_class_via_ses(z)
    if through_presentation == through_sequence:
        return PASS, None
    detail = instance_json(quiver, cfg.field, x=x, y=y, cocycle=z)
    detail["presentation_route"] = [m.to_flat_json()
                                    for m in through_presentation.cocycle]
    detail["sequence_route"] = [m.to_flat_json()
                                for m in through_sequence.cocycle]
    return _fail(detail)


def _trial_theorem(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep_without_injective(cfg, trial, "x", quiver)
    if x is None:
        return SKIP, None
    y = _gen_pair_with_ext(cfg, trial, x, quiver)
    z = gen_class(cfg, trial, "z", x, y)
    f = gen_morphism(cfg, trial, "f", tau_inverse_rep(y), x)
    report = verify_tau_invariance(z, f)
    if report.equal:
        return PASS, None
    detail = instance_json(quiver, cfg.field, x=x, y=y, cocycle=z, f=f)
    detail.update(report.to_json(cfg.field))
    return _fail(detail)


def _trial_euler(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    x = gen_rep(cfg, trial, "x", quiver)
    y = gen_rep(cfg, trial, "y", quiver)
    lhs = hom_dim(x, y) - ext1_space(x, y).dim
    rhs = euler_form(quiver, x.dims, y.dims)
    if lhs == rhs:
        return PASS, None
    detail = instance_json(quiver, cfg.field, x=x, y=y)
    detail["lhs"] = lhs
    detail["rhs"] = rhs
    return _fail(detail)


def _trial_kills(cfg: GenConfig, trial: int):
    quiver = gen_quiver(cfg, trial)
    fs = cfg.field
    for i in range(quiver.vertex_count):
        proj = indecomposable(quiver, PROJECTIVE, i, fs)
        if not tau_rep(proj).is_zero():
            detail = instance_json(quiver, fs, x=proj)
            detail["vertex"] = i
            detail["part"] = "translate of a projective"
            return _fail(detail)
        inj = indecomposable(quiver, INJECTIVE, i, fs)
        if not tau_inverse_rep(inj).is_zero():
            detail = instance_json(quiver, fs, x=inj)
            detail["vertex"] = i
            detail["part"] = "inverse translate of an injective"
            return _fail(detail)
    return PASS, None


SUITES = {
    "ar-dim": ("dim Ext^1(X,Y) = dim Hom(tau^-Y,X) = dim Hom(Y,tauX)",
               _trial_ar_dim),
    "perfect": ("the pairing Gram matrix has rank dim Ext^1(X,Y)",
                _trial_perfect),
    "bifunctorial": ("the pairing respects composition in both arguments",
                     _trial_bifunctorial),
    "ev-lemma": ("evaluation symmetry and the trace normalization",
                 _trial_ev_lemma),
    "signs": ("a presented class pairs with the translated morphism as "
              "minus the trace", _trial_signs),
    "routes": ("presentation route and sequence route agree on translated "
               "classes", _trial_routes),
    "theorem": ("the pairing is invariant under the inverse translate",
                _trial_theorem),
    "euler": ("dim Hom - dim Ext^1 equals the Euler form", _trial_euler),
    "kills": ("the translate kills projectives and the inverse translate "
              "kills injectives", _trial_kills),
}


@dataclass
class SuiteReport:
    """Outcome of one suite run.

    passed + failed + skipped = trials.  The first counterexample, if any,
    is embedded as a self-contained JSON instance (quiver, field, reps and
    morphisms in their standard serializations) plus the observed values.
    wall_time is informational only and deliberately kept out of to_json so
    that identical invocations produce byte-identical reports.
    """

    suite: str
    statement: str
    trials: int
    passed: int
    failed: int
    skipped: int
    counterexample: dict | None
    config: GenConfig
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "statement": self.statement,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
            "config": self.config.to_json(),
        }

    def summary_line(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (f"{self.suite}: {status} {self.passed} passed, "
                f"{self.failed} failed, {self.skipped} skipped "
                f"of {self.trials}")


def run_trial(name: str, cfg: GenConfig, trial: int):
    """Run a single trial of a suite; returns (status, detail)."""
    statement, fn = SUITES[name]
    status, detail = fn(cfg, trial)
    if detail is not None:
        detail = {"suite": name, "trial": trial, **detail}
    return status, detail


def _pool_trial(args):
    name, cfg, trial = args
    return trial, run_trial(name, cfg, trial)


def run_suite(name: str, cfg: GenConfig, jobs: int = 1,
              only_trial: int | None = None) -> SuiteReport:
    """Run every trial of a suite and aggregate a report.

    Args:
      name: one of the SUITES keys.
      cfg: generation parameters; cfg.trials trials are run.
      jobs: worker processes; results are deterministic regardless.
      only_trial: replay a single trial index instead of the full range.

    Returns:
      SuiteReport with the first counterexample, if any, embedded.

    Raises:
      KeyError: unknown suite name.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    statement, _ = SUITES[name]
    indices = [only_trial] if only_trial is not None else list(range(cfg.trials))
    start = time.perf_counter()
    results: list[tuple[int, tuple[str, dict | None]]] = []
    if jobs > 1 and len(indices) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(indices) // (jobs * 8))
            for item in pool.map(_pool_trial, [(name, cfg, t) for t in indices],
                                 chunksize=chunk):
                results.append(item)
        results.sort(key=lambda pair: pair[0])
    else:
        for t in indices:
            results.append((t, run_trial(name, cfg, t)))
    passed = failed = skipped = 0
    counterexample = None
    for _, (status, detail) in results:
        if status == PASS:
            passed += 1
        elif status == SKIP:
            skipped += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = detail
    return SuiteReport(
        suite=name,
        statement=statement,
        trials=len(indices),
        passed=passed,
        failed=failed,
        skipped=skipped,
        counterexample=counterexample,
        config=cfg,
        wall_time=time.perf_counter() - start,
    )
