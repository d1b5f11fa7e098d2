"""Verification suites over ranges of genus and number of points.

Each suite emits CheckRecords.  Records are sorted by id before reporting,
so the JSON report depends only on the configuration.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterator

from . import confcoh, johnson, pushact
from .confcoh import ConfSpaceModel
from .exactla import Subspace
from .freegrp import FreeWord, commutator, fh_obstruction, nil2_class
from .sampling import isotropic_samples, random_class, random_crossing, rng_for
from .surface import SymplecticSpace, WedgeTwo

SUITES = ("cup", "crossing", "push", "sym", "isotropic", "johnson", "cover")
MAX_GENUS = 5
MAX_POINTS = 6


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    g_range: tuple[int, int] = (2, 3)
    n_range: tuple[int, int] = (2, 3)
    samples: int = 200
    seed: int = 0
    relation_sign: str = "minus"
    format: str = "text"
    unsafe_large: bool = False

    def validate(self) -> None:
        if self.suite != "all" and self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)} or all")
        (g0, g1), (n0, n1) = self.g_range, self.n_range
        if g0 > g1 or n0 > n1:
            raise ConfigError("ranges must be given as low..high")
        if g0 < 2:
            raise ConfigError(f"genus must be at least 2, got {g0}")
        if n0 < 1:
            raise ConfigError(f"number of points must be at least 1, got {n0}")
        if not self.unsafe_large and (g1 > MAX_GENUS or n1 > MAX_POINTS):
            raise ConfigError(
                f"ranges exceed the desk-scale caps (g <= {MAX_GENUS}, n <= {MAX_POINTS}); "
                "pass --unsafe-large to run anyway"
            )
        if self.samples < 1:
            raise ConfigError(f"sample count must be positive, got {self.samples}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.relation_sign not in confcoh.RELATION_SIGNS:
            raise ConfigError(f"relation sign must be minus or plus, got {self.relation_sign!r}")
        if self.format not in ("text", "json"):
            raise ConfigError(f"format must be text or json, got {self.format!r}")

    def genera(self) -> range:
        return range(self.g_range[0], self.g_range[1] + 1)

    def points(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def grid(self) -> Iterator[tuple[int, int]]:
        for g in self.genera():
            for n in self.points():
                yield g, n


@dataclass(frozen=True)
class CheckRecord:
    id: str
    anchor: str
    inputs: str
    expected: object
    actual: object
    passed: bool


@dataclass
class SuiteReport:
    config: SuiteConfig
    checks: list[CheckRecord]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> dict:
        n_pass = sum(c.passed for c in self.checks)
        return {
            "total": len(self.checks),
            "passed": n_pass,
            "failed": len(self.checks) - n_pass,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        cfg = asdict(self.config)
        cfg["g_range"] = list(self.config.g_range)
        cfg["n_range"] = list(self.config.n_range)
        doc = {
            "config": cfg,
            "checks": [asdict(c) for c in self.checks],
            "summary": self.summary(),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.id}  [{c.anchor}]  {c.inputs}: expected {c.expected}, got {c.actual}")
        s = self.summary()
        lines.append(
            f"{s['passed']}/{s['total']} checks passed ({s['failed']} failed) "
            f"in {self.wall_time:.2f}s; seed {self.config.seed}"
        )
        return "\n".join(lines) + "\n"


def _check(id, anchor, inputs, expected, actual) -> CheckRecord:
    return CheckRecord(id, anchor, inputs, expected, actual, expected == actual)


# -- suites ---------------------------------------------------------------

def suite_cup(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g, n in cfg.grid():
        model = ConfSpaceModel(g, n)
        for sign in confcoh.RELATION_SIGNS:
            pres = confcoh.relations(model, sign)
            yield _check(
                f"cup/relation-rank/g{g}/n{n}/{sign}",
                "kernel of C_n: R_ij linearly independent",
                f"g={g} n={n} sign={sign}",
                comb(n, 2),
                pres.relation_rank,
            )
        yield _check(
            f"cup/image-rank/g{g}/n{n}",
            "Claim: Rank(Im(C_n))",
            f"g={g} n={n} sign={cfg.relation_sign}",
            confcoh.closed_form_image_rank(g, n),
            confcoh.image_rank(model, cfg.relation_sign),
        )
        pres = confcoh.relations(model, cfg.relation_sign)
        rng = rng_for(cfg.seed, "cup", g, n)
        good = 0
        for _ in range(cfg.samples):
            x, y = random_class(rng, model), random_class(rng, model)
            s = tuple(a + b for a, b in zip(confcoh.cup(x, y, pres).coords, confcoh.cup(y, x, pres).coords))
            good += not any(s)
        yield _check(
            f"cup/anticommutative/g{g}/n{n}",
            "xy = -yx",
            f"g={g} n={n} samples={cfg.samples}",
            cfg.samples,
            good,
        )


def suite_crossing(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g, n in cfg.grid():
        if n < 2:
            continue
        model = ConfSpaceModel(g, n)
        pres = confcoh.relations(model, cfg.relation_sign)
        rng = rng_for(cfg.seed, "crossing", g, n)
        good = 0
        for _ in range(cfg.samples):
            x = random_crossing(rng, model)
            ann = confcoh.annihilator(x, pres)
            good += ann.dim == 1 and ann == Subspace.span([x], model.dim)
        yield _check(
            f"crossing/annihilator-is-line/g{g}/n{n}",
            "Lemma crossing: x and y are proportional",
            f"g={g} n={n} samples={cfg.samples} sign={cfg.relation_sign}",
            cfg.samples,
            good,
        )


def suite_push(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g, n in cfg.grid():
        space = pushact.PuncturedH1(g, n)
        inv = pushact.dual_invariants(space)
        yield _check(f"push/invariants-dim/g{g}/n{n}", "Lemma invariant", f"g={g} n={n}", 2 * g, inv.dim)
        yield _check(
            f"push/invariants-are-closed/g{g}/n{n}",
            "Lemma invariant: functionals vanishing on all c_i",
            f"g={g} n={n}",
            True,
            inv == space.closed_functionals(),
        )
        yield _check(
            f"push/quotient-trivial/g{g}/n{n}",
            "Lemma trivial",
            f"g={g} n={n}",
            True,
            pushact.quotient_action_trivial(space),
        )
        yield _check(
            f"push/fixes-c/g{g}/n{n}",
            "Lemma trivial: pushes do not change c_i",
            f"g={g} n={n}",
            True,
            pushact.fixes_puncture_loops(space),
        )


def suite_sym(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g, n in cfg.grid():
        model = ConfSpaceModel(g, n)
        if n < 2:
            try:
                confcoh.sym_invariants(model)
                actual = "no error"
            except ValueError:
                actual = "error"
            yield _check(f"sym/precondition/g{g}/n{n}", "Sigma_n needs n >= 2", f"g={g} n={n}", "error", actual)
            continue
        inv = confcoh.sym_invariants(model)
        yield _check(f"sym/invariants-dim/g{g}/n{n}", "Lemma: the diagonal subspace", f"g={g} n={n}", 2 * g, inv.dim)
        yield _check(
            f"sym/invariants-diagonal/g{g}/n{n}",
            "Lemma: the diagonal subspace",
            f"g={g} n={n}",
            True,
            inv == confcoh.diagonal_subspace(model),
        )


def suite_isotropic(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g, n in cfg.grid():
        model = ConfSpaceModel(g, n)
        pres = confcoh.relations(model, cfg.relation_sign)
        rng = rng_for(cfg.seed, "isotropic", g, n)
        isotropic = moved = 0
        for _, s in isotropic_samples(rng, model, cfg.samples):
            if confcoh.is_isotropic(s, pres):
                isotropic += 1
                moved += confcoh.find_moving_transvection(s, model) is not None
        yield _check(
            f"isotropic/samples-isotropic/g{g}/n{n}",
            "isotropic subspace: a cup b = 0",
            f"g={g} n={n} samples={cfg.samples}",
            cfg.samples,
            isotropic,
        )
        yield _check(
            f"isotropic/moved/g{g}/n{n}",
            "Claim: Mod_g does not fix any isotropic subspace",
            f"g={g} n={n} samples={cfg.samples}",
            cfg.samples,
            moved,
        )


def suite_johnson(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g in cfg.genera():
        image = johnson.johnson_image(g)
        space = SymplecticSpace(g)
        yield _check(
            f"johnson/quotient-dim/g{g}",
            "image of tau is wedge^3 H / H",
            f"g={g}",
            johnson.expected_quotient_dim(g),
            image.quotient_dim,
        )
        yield _check(f"johnson/h-in-image/g{g}", "wedge^3 H / H", f"g={g}", True, image.h_inside_image)
        yield _check(f"johnson/contract-injective/g{g}", "wedge^3 H / H", f"g={g}", 0, image.contract_kernel_dim)
        target = WedgeTwo.basis(space, 0, 1)  # a1 ^ a2
        yield _check(
            f"johnson/tau-b1-a1a2/g{g}",
            "tau(e)(b_1) = a_1 ^ a_2",
            f"g={g} target b1 -> a1^a2",
            g >= 3,
            johnson.tau_hits(space.b(1), target, g),
        )
        if g >= 3:
            witness = johnson.tau_witness(space.b(3), target, g)
            if witness is None:
                actual = "none"
            else:
                cleared, denom = johnson.clear_denominators(witness)
                actual = f"{johnson.describe_wedge3(cleared)} (scale {denom})"
            yield _check(
                f"johnson/tau-b3-a1a2/g{g}",
                "tau(e)(b_3) = a_1 ^ a_2 (kernel element other than b_1)",
                f"g={g} target b3 -> a1^a2",
                "1*a1^a2^a3 (scale 1)",
                actual,
            )
    yield from _free_group_checks()


def _free_group_checks() -> Iterator[CheckRecord]:
    x1, x2 = FreeWord.generator(1, 2), FreeWord.generator(2, 2)
    c = nil2_class(commutator(x1, x2))
    yield _check(
        "johnson/fh-commutator-class",
        "phi([a_1,a_2]) != 1 in F_h^1/F_h^2",
        "[x1,x2] in F_2",
        "abelian (0, 0), commutator {(1, 2): 1}",
        f"abelian {c.abelian}, commutator {{{', '.join(f'{k}: {v}' for k, v in c.commutator_dict().items())}}}",
    )
    for name, images, expected in (
        ("x1-x2", (x1, x2), True),
        ("x1-x1", (x1, x1), False),
        ("x1x2-x2", (x1 * x2, x2), True),
    ):
        yield _check(f"johnson/fh-obstruction/{name}", "phi([a_1,a_2]) != 1", name, expected, fh_obstruction(images))


def suite_cover(cfg: SuiteConfig) -> Iterator[CheckRecord]:
    for g, n in cfg.grid():
        r = confcoh.cover_genus(g, n)
        yield _check(
            f"cover/euler/g{g}/n{n}",
            "Lemma possible: chi(S_r) = n chi(S_g)",
            f"g={g} sheets={n}",
            n * (2 - 2 * g),
            2 - 2 * r,
        )
        yield _check(
            f"cover/genus-grows/g{g}/n{n}",
            "Lemma possible: r > g iff n > 1",
            f"g={g} sheets={n} r={r}",
            "r>g" if n > 1 else "r=g",
            "r>g" if r > g else ("r=g" if r == g else "r<g"),
        )


SUITE_FUNCS: dict[str, Callable[[SuiteConfig], Iterator[CheckRecord]]] = {
    "cup": suite_cup,
    "crossing": suite_crossing,
    "push": suite_push,
    "sym": suite_sym,
    "isotropic": suite_isotropic,
    "johnson": suite_johnson,
    "cover": suite_cover,
}


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    cfg.validate()
    start = time.perf_counter()
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    checks = []
    for name in names:
        checks.extend(SUITE_FUNCS[name](cfg))
    checks.sort(key=lambda c: c.id)
    return SuiteReport(cfg, checks, time.perf_counter() - start)


def rank_cells(g_range: tuple[int, int], n_range: tuple[int, int], unsafe_large: bool = False) -> list[tuple]:
    """(g, n, computed image rank, closed form) for every cell of the grid."""
    SuiteConfig(g_range=g_range, n_range=n_range, unsafe_large=unsafe_large).validate()
    cells = []
    for g in range(g_range[0], g_range[1] + 1):
        for n in range(n_range[0], n_range[1] + 1):
            cells.append((g, n, confcoh.image_rank(ConfSpaceModel(g, n)), confcoh.closed_form_image_rank(g, n)))
    return cells


def format_rank_table(cells: list[tuple]) -> str:
    gs = sorted({c[0] for c in cells})
    ns = sorted({c[1] for c in cells})
    by_cell = {(g, n): (computed, formula) for g, n, computed, formula in cells}
    header = "g \\ n" + "".join(f"{n:>18}" for n in ns)
    lines = [header, "-" * len(header)]
    for g in gs:
        row = f"{g:<5}"
        for n in ns:
            computed, formula = by_cell[(g, n)]
            flag = "  " if computed == formula else " !"
            row += f"{computed:>8} / {formula:<5}{flag}"
        lines.append(row)
    bad = sum(1 for _, _, c, f in cells if c != f)
    lines.append("cells: computed rank / closed form" + (f"; {bad} mismatch(es) flagged with !" if bad else ""))
    return "\n".join(lines) + "\n"


def rank_table(g_range: tuple[int, int], n_range: tuple[int, int], unsafe_large: bool = False) -> str:
    return format_rank_table(rank_cells(g_range, n_range, unsafe_large))
