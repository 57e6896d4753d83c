"""
Verification Suites
Seeded property checks of the Cremona form identities, phi67, its fibers, the
moduli combinatorics and the boundary census
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Dict, List, Optional

from tqdm import tqdm

from src.bridge import (
    StratumKind,
    as_p1_config,
    classify,
    collinear_to_conic,
    cremona_base_for,
    degenerate_limit_check_I,
    fiber_orbit,
    moduli_equal_plane,
    output_stratum,
    phi67,
)
from src.cremona import (
    GENERATOR_PAIRS,
    SwapSet,
    TernaryForm,
    apply_word,
    based_cremona,
    generator_word,
    geometric_swap,
    std_cremona_eval,
    std_cremona_form_image,
    swap_word,
)
from src.fields import FieldDescriptor
from src.geometry import Point2, join, permute_labels
from src.moduli import (
    P1Config,
    Stability,
    WeightVector,
    collision_poset,
    descendants,
    moduli_equal,
    stability,
)
from src.serialization import plane_config_file
from src.utils.exceptions import CubicBridgeError, UnknownSuite
from src.utils.helpers import SplitMix64, mix_seed
from src.utils.logger import get_logger

from .census import DivisorClass, DivisorLabel, boundary_divisors, detect_divisors
from .report import Report, TrialOutcome, TrialPlan
from .sampling import (
    DEFAULT_HEIGHT,
    DEFAULT_MAX_RETRIES,
    random_collinear_config,
    random_degenerate_limit_witness,
    random_generic_config,
    random_on_conic_config,
    random_projectivity,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class TrialContext:
    """Everything a trial needs besides its index"""

    field: FieldDescriptor
    seed: int
    height: int = DEFAULT_HEIGHT
    max_retries: int = DEFAULT_MAX_RETRIES

    def rng(self) -> SplitMix64:
        return SplitMix64(self.seed)

    def sub_seed(self, k: int) -> int:
        return mix_seed(self.seed, k)


def _cfg_input(cfg, **extra) -> Dict[str, Any]:
    data: Dict[str, Any] = {"config": plane_config_file(cfg).to_dict()}
    data.update({k: str(v) for k, v in extra.items()})
    return data


# cremona-lemma

# (source form, expected image) pairs of the standard involution
CREMONA_IDENTITIES = (
    ("x + y + z", "x*y + x*z + y*z"),
    ("y**2 - x*z", "x*z - y**2"),
    ("y - z", "z - y"),
)


def _cremona_lemma(ctx: TrialContext, out: TrialOutcome):
    F = ctx.field
    for source, expected in CREMONA_IDENTITIES:
        image = std_cremona_form_image(TernaryForm.parse(source, F))
        out.check(image.proportional(TernaryForm.parse(expected, F)),
                  f"form image of {source}", {"form": source, "image": str(image)})

    cfg = random_generic_config(ctx.sub_seed(0), F, ctx.height, ctx.max_retries)
    rng = ctx.rng()
    base = tuple(sorted(rng.shuffled(range(1, 6))[:3]))
    once = based_cremona(cfg.points, base)
    twice = based_cremona(once, base)
    out.check(all(a == b for a, b in zip(twice, cfg.points)),
              "based Cremona is an involution", _cfg_input(cfg, base=base))
    out.check(all(once[b - 1] == cfg[b] for b in base),
              "base points are fixed", _cfg_input(cfg, base=base))

    # a point on a line lands on the image curve of the line
    p, q = cfg[1], cfg[2]
    line = join(p, q)
    form = TernaryForm.from_dict(F, {(1, 0, 0): line[0], (0, 1, 0): line[1], (0, 0, 1): line[2]})
    t = F.random_element(rng, ctx.height)
    r = Point2(tuple(a + t * b for a, b in zip(p.coords, q.coords)))
    if sum(1 for c in r.coords if c.is_zero()) < 2:
        image_form = std_cremona_form_image(form)
        out.check(image_form.evaluate(std_cremona_eval(r)).is_zero(),
                  "line maps into its image curve", _cfg_input(cfg, form=form, t=t))


# phi-equivariance

def _phi_equivariance(ctx: TrialContext, out: TrialOutcome):
    cfg = random_generic_config(ctx.sub_seed(0), ctx.field, ctx.height, ctx.max_retries)
    rng = ctx.rng()
    image = phi67(cfg)

    perm = dict(zip(range(1, 6), rng.shuffled(range(1, 6))))
    permuted = phi67(permute_labels(cfg, perm))
    out.check(permuted == image.permute(perm), "S5 equivariance", _cfg_input(cfg, perm=perm))

    swap = SwapSet.all_subsets()[rng.randbelow(32)]
    swapped = phi67(geometric_swap(cfg, swap))
    out.check(swapped == image, "swap invariance", _cfg_input(cfg, swap=swap))

    g = random_projectivity(rng, ctx.field, ctx.height, ctx.max_retries)
    moved = phi67(cfg.apply(g))
    a, sigma = as_p1_config(image)
    b, _ = as_p1_config(moved)
    out.check(moduli_equal(a, b, sigma), "projective invariance", _cfg_input(cfg, g=g))


# fiber

FIBER_SIZE = 16


def _fiber(ctx: TrialContext, out: TrialOutcome):
    cfg = random_generic_config(ctx.sub_seed(0), ctx.field, ctx.height, ctx.max_retries)
    orbit = fiber_orbit(cfg)
    out.check(len(orbit) == FIBER_SIZE, "fiber size", _cfg_input(cfg, size=len(orbit)))
    a, sigma = as_p1_config(phi67(cfg))
    for member in orbit:
        b, _ = as_p1_config(phi67(member))
        if not out.check(moduli_equal(a, b, sigma), "fiber shares the phi67 point", _cfg_input(member)):
            break


# swap-word

def _swap_word(ctx: TrialContext, out: TrialOutcome):
    cfg = random_generic_config(ctx.sub_seed(0), ctx.field, ctx.height, ctx.max_retries)
    for swap in SwapSet.all_subsets():
        word = swap_word(swap)
        realized = apply_word(cfg, word)
        if not out.check(moduli_equal_plane(realized, geometric_swap(cfg, swap)),
                         "word realizes swap", _cfg_input(cfg, swap=swap, word=word)):
            break


# stability

def _stability(ctx: TrialContext, out: TrialOutcome):
    rng = ctx.rng()
    F = ctx.field
    values: List = []
    while len(values) < 6:
        v = F.random_element(rng, ctx.height)
        if all(v != w for w in values):
            values.append(v)
    mu = WeightVector((2,) * 6)
    cases = (
        ("distinct points are stable", values, Stability.STABLE),
        ("one pair collided is stable", [values[0]] + values[:5], Stability.STABLE),
        ("two pairs collided are stable", [values[0], values[0], values[1], values[1]] + values[2:4], Stability.STABLE),
        ("triple collision is strictly semistable", [values[0]] * 3 + values[1:4], Stability.STRICTLY_SEMISTABLE),
        ("quadruple collision is unstable", [values[0]] * 4 + values[1:3], Stability.UNSTABLE),
    )
    for name, affine, expected in cases:
        cfg = P1Config.from_affine(F, affine, mu)
        out.check(stability(cfg) is expected, name, {"values": [str(v) for v in affine]})


# descendants

DESCENDANT_COUNT = 6


def _descendants(ctx: TrialContext, out: TrialOutcome):
    found = descendants("1^12", 7)
    listed = sorted(str(v) for v in found)
    out.check(len(found) == DESCENDANT_COUNT, "descendant count", {"descendants": listed})
    for member in ("2^5,1^2", "3,2^3,1^3"):
        out.check(WeightVector.parse(member) in found, f"{member} is a descendant", {"descendants": listed})
    target = WeightVector.parse("4,2^4")
    for parent in ("2^6", "4,2^3,1^2"):
        edges = collision_poset(parent)
        reached = any(w == target for _, w in edges)
        out.check(reached, f"4,2^4 descends from {parent}", {"mu": parent})


# boundary

def _boundary(ctx: TrialContext, out: TrialOutcome):
    labels, orbits = boundary_divisors()
    out.check(len(labels) == 36, "36 boundary divisors", {"count": len(labels)})
    counts = {kind: sum(1 for label in labels if label.kind is kind) for kind in DivisorClass}
    expected = {DivisorClass.ON_CONIC: 1, DivisorClass.COLLINEAR_WITH_6: 10,
                DivisorClass.COLLINEAR_AMONG_5: 10, DivisorClass.COLLISION: 15}
    out.check(counts == expected, "class sizes 1/10/10/15",
              {"counts": {k.value: v for k, v in counts.items()}})
    sizes = {}
    for orbit in orbits:
        sizes.setdefault(orbit[0].kind, []).append(len(orbit))
    out.check(sizes.get(DivisorClass.COLLINEAR_WITH_6) == [10], "class B is one S5 orbit")
    out.check(sizes.get(DivisorClass.COLLINEAR_AMONG_5) == [10], "class C is one S5 orbit")
    out.check(sorted(sizes.get(DivisorClass.COLLISION, [])) == [5, 10], "class D splits 10 + 5")

    generic = random_generic_config(ctx.sub_seed(0), ctx.field, ctx.height, ctx.max_retries)
    out.check(not detect_divisors(generic.points), "generic configuration is off the boundary",
              _cfg_input(generic))
    collinear = random_collinear_config(ctx.sub_seed(1), ctx.field, height=ctx.height,
                                        max_retries=ctx.max_retries)
    pair = classify(collinear).pair
    out.check(detect_divisors(collinear.points) == {DivisorLabel(DivisorClass.COLLINEAR_WITH_6, pair)},
              "collinear configuration meets one B divisor", _cfg_input(collinear))
    on_conic = random_on_conic_config(ctx.sub_seed(2), ctx.field, ctx.height, ctx.max_retries)
    out.check(detect_divisors(on_conic.points) == {DivisorLabel(DivisorClass.ON_CONIC)},
              "on-conic configuration meets the A divisor", _cfg_input(on_conic))


# identification

COLLINEAR_PHI_STRATUM = WeightVector((4, 2, 2, 2, 1, 1))


def _identification(ctx: TrialContext, out: TrialOutcome):
    cfg = random_collinear_config(ctx.sub_seed(0), ctx.field, height=ctx.height, max_retries=ctx.max_retries)
    pair = classify(cfg).pair
    image = collinear_to_conic(cfg)
    out.check(classify(image).kind is StratumKind.ON_CONIC, "image lies on a conic", _cfg_input(cfg))
    base = cremona_base_for(pair)
    out.check(all(image[b] == cfg[b] for b in base), "base points are fixed", _cfg_input(cfg))
    out.check(output_stratum(phi67(cfg)) == COLLINEAR_PHI_STRATUM, "phi67 output is (4,2^3,1^2)",
              _cfg_input(cfg))

    g = random_projectivity(ctx.rng(), ctx.field, ctx.height, ctx.max_retries)
    moved = cfg.apply(g)
    out.check(moduli_equal_plane(image, collinear_to_conic(moved)),
              "equivalent inputs give equivalent images", _cfg_input(cfg, g=g))


# divisor-action

def _divisor_sample(ctx: TrialContext, kind: DivisorClass):
    """A raw point tuple on a divisor of the given class"""
    rng = ctx.rng()
    if kind is DivisorClass.ON_CONIC:
        return random_on_conic_config(ctx.sub_seed(1), ctx.field, ctx.height, ctx.max_retries).points
    if kind is DivisorClass.COLLINEAR_WITH_6:
        return random_collinear_config(ctx.sub_seed(1), ctx.field, height=ctx.height,
                                       max_retries=ctx.max_retries).points
    cfg = random_generic_config(ctx.sub_seed(1), ctx.field, ctx.height, ctx.max_retries)
    points = list(cfg.points)
    if kind is DivisorClass.COLLINEAR_AMONG_5:
        i, j, k = sorted(rng.shuffled(range(1, 6))[:3])
        t = ctx.field.random_element(rng, ctx.height)
        points[k - 1] = Point2(tuple(a + t * b for a, b in zip(points[i - 1].coords, points[j - 1].coords)))
        return tuple(points)
    i, j = sorted(rng.shuffled(range(1, 7))[:2])
    points[j - 1] = points[i - 1]
    return tuple(points)


def _divisor_action(ctx: TrialContext, out: TrialOutcome):
    rng = ctx.rng()
    kind = list(DivisorClass)[rng.randbelow(len(DivisorClass))]
    try:
        points = _divisor_sample(ctx, kind)
    except CubicBridgeError as e:
        logger.debug(f"No sample on {kind.value}: {e}")
        out.indeterminate += 1
        return
    before = detect_divisors(points)
    pair = GENERATOR_PAIRS[rng.randbelow(len(GENERATOR_PAIRS))]
    word = generator_word(*pair)
    try:
        image = apply_word(points, word)
    except CubicBridgeError as e:
        logger.debug(f"{word} is indeterminate on {kind.value}: {e}")
        out.indeterminate += 1
        return
    after = detect_divisors(image)
    out.check(bool(after), "boundary maps to boundary",
              {"points": plane_config_file(points).to_dict(), "word": str(word)})
    if len(before) == 1 and len(after) == 1:
        key = f"{next(iter(before))} -> {next(iter(after))}"
        out.transitions[key] = out.transitions.get(key, 0) + 1
    else:
        out.indeterminate += 1


# degenerate-limit

def _degenerate_limit(ctx: TrialContext, out: TrialOutcome):
    cfg = random_degenerate_limit_witness(ctx.sub_seed(0), ctx.field, ctx.height, ctx.max_retries)
    report = degenerate_limit_check_I(cfg)
    out.check(report["passed"], "weight-4 limit", _cfg_input(cfg, report=report))


@dataclass(frozen=True)
class Suite:
    name: str
    trial: Callable[[TrialContext, TrialOutcome], None]
    tracks_divisors: bool = False


SUITES: Dict[str, Suite] = {s.name: s for s in (
    Suite("cremona-lemma", _cremona_lemma),
    Suite("phi-equivariance", _phi_equivariance),
    Suite("fiber", _fiber),
    Suite("swap-word", _swap_word),
    Suite("stability", _stability),
    Suite("descendants", _descendants),
    Suite("boundary", _boundary),
    Suite("identification", _identification),
    Suite("divisor-action", _divisor_action, tracks_divisors=True),
    Suite("degenerate-limit", _degenerate_limit),
)}

SUITE_NAMES = tuple(SUITES) + ("all",)


def get_suite(name: str) -> Suite:
    if name not in SUITES:
        raise UnknownSuite(f"Unknown suite '{name}', expected one of {', '.join(SUITE_NAMES)}")
    return SUITES[name]


def run_trial(suite_name: str, field: FieldDescriptor, plan_seed: int, height: int, max_retries: int,
              trial: int) -> TrialOutcome:
    """One trial with seed mix(plan_seed, trial); math errors become failures"""
    ctx = TrialContext(field, mix_seed(plan_seed, trial), height, max_retries)
    out = TrialOutcome(trial)
    try:
        get_suite(suite_name).trial(ctx, out)
    except CubicBridgeError as e:
        out.check(False, f"raised {type(e).__name__}", {"trial_seed": ctx.seed, "message": str(e)})
    return out


def run_suite(plan: TrialPlan, workers: int = 1, progress: bool = True, height: int = DEFAULT_HEIGHT,
              max_retries: int = DEFAULT_MAX_RETRIES) -> Report:
    """
    Run a suite (or "all") and aggregate its trials in index order

    Args:
        plan: Suite, trial count, seed and field
        workers: Processes; 1 runs in this process
        progress: Show a tqdm bar on stderr
        height: Rational coordinate bound for sampling
        max_retries: Rejection budget per sample

    Raises:
        UnknownSuite: plan.suite is not a known suite
    """
    if plan.suite == "all":
        reports = [run_suite(plan.for_suite(name), workers, progress, height, max_retries) for name in SUITES]
        return Report.aggregate(plan, reports)

    suite = get_suite(plan.suite)
    logger.info(f"Running suite {suite.name}: {plan.trials} trials, seed {plan.seed}, field {plan.field}")
    task = partial(run_trial, suite.name, plan.field, plan.seed, height, max_retries)
    trials = range(plan.trials)
    bar = dict(total=plan.trials, desc=suite.name, disable=not progress, leave=False)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(tqdm(pool.map(task, trials, chunksize=max(1, plan.trials // (4 * workers))), **bar))
    else:
        outcomes = list(tqdm(map(task, trials), **bar))

    report = Report.from_outcomes(plan, outcomes, track_divisors=suite.tracks_divisors)
    logger.info(f"Suite {suite.name}: {report.passed} passed, {report.failed} failed")
    return report
