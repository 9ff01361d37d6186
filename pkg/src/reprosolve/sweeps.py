"""Exhaustive finite-field suites and randomized rational suites.

Each suite compares the closed-form machinery against the linear oracle on
every instance and returns a :class:`SweepResult` holding per-check failure
counts. Instances are visited in a fixed order so results are deterministic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .cline import ClineProblem, cline_context, cline_consistent, cline_f_generator, cline_g_generator, \
    cline_particular
from .errors import IndexTooSmall
from .field import GF, QQ, FieldSpec
from .generator import AffineGenerator, apply, image_of, is_reproductive
from .inverse import all_one_inverses, index, one_inverse
from .kcomm import KCommProblem, find_kcomm_inverse, kcomm_context, kcomm_f_generator, kcomm_g_generator, \
    kcomm_lemma_report
from .matrix import Matrix, rank
from .oracle import contains, enumerate_solutions, sets_equal, solve
from .penrose import PenroseProblem, penrose_consistent, penrose_context, penrose_f_generator, \
    penrose_g_generator


@dataclass
class SweepResult:
    name: str
    instances: int = 0
    consistent: int = 0
    failures: dict[str, int] = dc_field(default_factory=dict)
    stats: dict[str, int] = dc_field(default_factory=dict)
    examples: list[str] = dc_field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = ""):
        self.failures.setdefault(name, 0)
        if not ok:
            self.failures[name] += 1
            if len(self.examples) < 5:
                self.examples.append(f"{name}: {detail}")

    def count(self, name: str, by: int = 1):
        self.stats[name] = self.stats.get(name, 0) + by

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "instances": self.instances,
            "consistent": self.consistent,
            "failures": dict(sorted(self.failures.items())),
            "stats": dict(sorted(self.stats.items())),
            "examples": self.examples,
        }


def all_matrices(rows: int, cols: int, field: FieldSpec) -> list[Matrix]:
    p = field.p
    return [Matrix([vals[i * cols:(i + 1) * cols] for i in range(rows)], field)
            for vals in itertools.product(range(p), repeat=rows * cols)]


def _image_matches_enumeration(h: AffineGenerator, oracle_set, field: FieldSpec) -> bool:
    ys = all_matrices(h.y_rows, h.y_cols, field)
    return {apply(h, y) for y in ys} == set(enumerate_solutions(oracle_set))


# -- Cline -----------------------------------------------------------------------------


def cline_suite(field: FieldSpec = GF(2), size: int = 2, powers=(1, 2)) -> SweepResult:
    """Every (A, B, C) over a small field, for each power m = n in ``powers``.

    Instances with m below an index are run with the override; their count is
    reported under ``stats``.
    """
    res = SweepResult(f"cline {field} {size}x{size} m=n in {list(powers)}")
    mats = all_matrices(size, size, field)
    for m in powers:
        for a, b, c in itertools.product(mats, repeat=3):
            prob = ClineProblem(a, b, c, m, m)
            res.instances += 1
            try:
                ctx = cline_context(prob)
            except IndexTooSmall:
                ctx = cline_context(prob, allow_small_power=True)
                res.count(f"m={m} below index (override)")
            report = cline_consistent(ctx, prob)
            oracle = solve(prob.system())
            res.check("verdict matches oracle", report.consistent == oracle.consistent, f"{a} {b} {c} m={m}")
            if not oracle.consistent or not report.consistent:
                continue
            res.consistent += 1
            f = cline_f_generator(ctx, prob)
            res.check("image(f) equals oracle set", sets_equal(image_of(f), oracle), f"{a} {b} {c}")
            res.check("{f(Y)} equals enumerated oracle set", _image_matches_enumeration(f, oracle, field))
            res.check("f reproductive", is_reproductive(f).reproductive)
    return res


# -- Penrose -----------------------------------------------------------------------------


def penrose_suite(field: FieldSpec = GF(2), size: int = 2, m: int = 1) -> SweepResult:
    res = SweepResult(f"penrose {field} {size}x{size} m=n={m}")
    mats = all_matrices(size, size, field)
    for a, b, d, e in itertools.product(mats, repeat=4):
        prob = PenroseProblem(a, b, d, e, m, m)
        res.instances += 1
        try:
            ctx = penrose_context(prob)
        except IndexTooSmall:
            ctx = penrose_context(prob, allow_small_power=True)
            res.count("below index (override)")
        report = penrose_consistent(ctx, prob)
        oracle = solve(prob.system())
        res.check("three-clause verdict matches oracle", report.consistent == oracle.consistent,
                  f"{a} {b} {d} {e}")
        if not (report.consistent and oracle.consistent):
            continue
        res.consistent += 1
        res.check("X1 solves both equations", prob.is_solution(ctx.x1))
        if ctx.literal_reading_differs:
            res.count("literal X1 reading differs")
            if not prob.is_solution(ctx.x1_literal):
                res.count("literal X1 reading fails the system")
        f = penrose_f_generator(ctx, prob)
        res.check("image(f) equals oracle set", sets_equal(image_of(f), oracle))
    return res


# -- k-commutative ---------------------------------------------------------------------------


def _kcomm_instance(res: SweepResult, prob: KCommProblem, all_abar: bool):
    oracle = solve(prob.system())
    ctx = find_kcomm_inverse(prob)
    res.instances += 1
    res.check("find_kcomm_inverse verdict matches oracle", (ctx is not None) == oracle.consistent)
    if ctx is None or not oracle.consistent:
        return
    res.consistent += 1
    sols = list(enumerate_solutions(oracle))
    f = kcomm_f_generator(ctx, prob)
    res.check("image(f) equals oracle set", sets_equal(image_of(f), oracle), f"A={prob.a} k={prob.k}")
    res.check("f reproductive", is_reproductive(f).reproductive)
    for x in sols:
        res.check("f(X) = X on every solution", apply(f, x) == x)
        res.check("identities hold for canonical Abar", kcomm_lemma_report(ctx, prob, x).all_passed)
    if all_abar:
        for abar in sols:
            other = kcomm_context(prob, abar)
            g = kcomm_f_generator(other, prob)
            res.check("image(f) independent of Abar", sets_equal(image_of(g), oracle))
            for x in sols:
                res.check("identities hold for every Abar and X0", kcomm_lemma_report(other, prob, x).all_passed)
                res.count("Abar/X0 pairs checked")


def kcomm_suite(ks=(1, 2, 3), samples_3x3: int = 512, seed: int = 0) -> SweepResult:
    """All 2x2 matrices over GF(3) plus 3x3 matrices over GF(2).

    ``samples_3x3`` at 512 covers every 3x3 GF(2) matrix; smaller values draw
    a seeded sample. For the 2x2 part every solution is also tried as Abar.
    """
    res = SweepResult(f"kcomm GF(3) 2x2 + GF(2) 3x3, k in {list(ks)}")
    for a in all_matrices(2, 2, GF(3)):
        for k in ks:
            _kcomm_instance(res, KCommProblem(a, k), all_abar=True)
    mats3 = all_matrices(3, 3, GF(2))
    if samples_3x3 < len(mats3):
        mats3 = random.Random(seed).sample(mats3, samples_3x3)
    for a in mats3:
        for k in ks:
            _kcomm_instance(res, KCommProblem(a, k), all_abar=False)
    return res


# -- existence of a non-canonical particular solution --------------------------------------


def unreached_solution_search(field: FieldSpec = GF(2), size: int = 2) -> SweepResult:
    """Search for (A, B, C) and a solution X0 outside {G C G' : G in A^m{1}, G' in B^n{1}}.

    Only instances meeting the power hypotheses are visited (m = n = 1 with
    index at most 1). ``stats["witnesses"]`` counts qualifying (instance, X0) pairs.
    """
    res = SweepResult(f"non-canonical particular solution search {field} {size}x{size}")
    mats = [a for a in all_matrices(size, size, field) if index(a) <= 1]
    inverses = {a: list(enumerate_solutions(all_one_inverses(a))) for a in mats}
    for a, b in itertools.product(mats, repeat=2):
        for c in all_matrices(size, size, field):
            prob = ClineProblem(a, b, c)
            oracle = solve(prob.system())
            res.instances += 1
            if not oracle.consistent:
                continue
            res.consistent += 1
            reachable = {g @ c @ h for g in inverses[a] for h in inverses[b]}
            for x0 in enumerate_solutions(oracle):
                if x0 not in reachable:
                    res.count("witnesses")
                    if not c.is_zero():
                        res.count("witnesses with C != 0")
                        if len(res.examples) < 3:
                            res.examples.append(f"A={a} B={b} C={c} X0={x0}")
    res.check("at least one witness", res.stats.get("witnesses", 0) >= 1)
    return res


# -- randomized rational suites ----------------------------------------------------------------


def random_entry(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3)))


def random_matrix(rng: random.Random, rows: int, cols: int, field: FieldSpec = QQ) -> Matrix:
    if field.is_finite:
        return Matrix([[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)], field)
    return Matrix([[random_entry(rng) for _ in range(cols)] for _ in range(rows)], field)


def random_square(rng: random.Random, n: int, field: FieldSpec = QQ) -> Matrix:
    """Square matrix biased towards singular and higher-index shapes."""
    kind = rng.random()
    m = random_matrix(rng, n, n, field)
    if kind < 0.25:
        return m
    data = m.tolist()
    if kind < 0.5:
        i, j = rng.sample(range(n), 2)
        data[i] = list(data[j])
    elif kind < 0.75:
        data[rng.randrange(n)] = [0] * n
    else:
        # strictly upper triangular part plus a random lower-right block
        cut = rng.randrange(1, n)
        for i in range(n):
            for j in range(n):
                if (i >= j and i < cut) or (j < cut <= i):
                    data[i][j] = 0
    return Matrix(data, field)


def _repro_checks(res: SweepResult, f: AffineGenerator, g_of, canonical: Matrix, oracle):
    res.check("f reproductive", is_reproductive(f).reproductive)
    res.check("g(canonical) reproductive", is_reproductive(g_of(canonical)).reproductive)
    if oracle.dimension > 0:
        res.count("instances with positive-dimensional solution set")
        for d in oracle.basis:
            x0 = canonical + d
            res.check("distinct x0 solves", contains(oracle, x0))
            res.check("g(distinct x0) not reproductive", not is_reproductive(g_of(x0)).reproductive)
            res.count("distinct x0 tried")
            break


def repro_suite(seed: int = 0, per_family: int = 100) -> SweepResult:
    """Random consistent rational instances of each family."""
    rng = random.Random(seed)
    res = SweepResult(f"reproductivity classification over Q, seed={seed}")

    done = 0
    while done < per_family:
        p, q = rng.choice((2, 3)), rng.choice((2, 3))
        a, b = random_square(rng, p), random_square(rng, q)
        m, n = max(1, index(a)) + rng.randint(0, 1), max(1, index(b)) + rng.randint(0, 1)
        c = a ** m @ random_matrix(rng, p, q) @ b ** n
        prob = ClineProblem(a, b, c, m, n)
        ctx = cline_context(prob)
        oracle = solve(prob.system())
        res.check("cline consistent by construction", cline_consistent(ctx, prob).consistent and oracle.consistent)
        _repro_checks(res, cline_f_generator(ctx, prob), lambda x: cline_g_generator(ctx, prob, x),
                      cline_particular(ctx, prob), oracle)
        res.count("cline instances")
        done += 1
    res.instances += done

    done = 0
    while done < per_family:
        p, q = rng.choice((2, 3)), rng.choice((2, 3))
        a, d = random_square(rng, p), random_square(rng, q)
        m, n = max(1, index(a)) + rng.randint(0, 1), max(1, index(d)) + rng.randint(0, 1)
        x = random_matrix(rng, p, q)
        prob = PenroseProblem(a, a ** m @ x, d, x @ d ** n, m, n)
        ctx = penrose_context(prob)
        oracle = solve(prob.system())
        res.check("penrose consistent by construction", penrose_consistent(ctx, prob).consistent)
        _repro_checks(res, penrose_f_generator(ctx, prob), lambda x0: penrose_g_generator(ctx, prob, x0),
                      ctx.x1, oracle)
        res.count("penrose instances")
        done += 1
    res.instances += done

    done = 0
    while done < per_family:
        p = rng.choice((2, 3))
        prob = KCommProblem(random_square(rng, p), rng.randint(1, 3))
        ctx = find_kcomm_inverse(prob)
        res.count("kcomm draws")
        if ctx is None:
            continue
        oracle = solve(prob.system())
        _repro_checks(res, kcomm_f_generator(ctx, prob), lambda x0: kcomm_g_generator(ctx, prob, x0),
                      ctx.xhat, oracle)
        res.count("kcomm instances")
        done += 1
    res.instances += done
    res.consistent = res.instances
    return res


# -- primitives -----------------------------------------------------------------------------


def naive_index(a: Matrix, rank_fn: Callable[[Matrix], int] = rank) -> int:
    """Index by the literal definition, with powers rebuilt from scratch each step."""
    k = 0
    while True:
        pk = Matrix.identity(a.rows, a.field)
        for _ in range(k):
            pk = pk @ a
        if rank_fn(pk) == rank_fn(pk @ a):
            return k
        k += 1


def primitives_suite(seed: int = 0, count: int = 500, rank_fn: Callable[[Matrix], int] = rank) -> SweepResult:
    rng = random.Random(seed)
    res = SweepResult(f"primitive cross-checks, seed={seed}")
    fields = (QQ, GF(2), GF(3), GF(5))
    for n in range(count):
        field = QQ if n % 2 == 0 else fields[1 + (n // 2) % 3]
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        a = random_matrix(rng, rows, cols, field)
        if rng.random() < 0.5 and rows > 1:
            data = a.tolist()
            data[rng.randrange(rows)] = list(data[rng.randrange(rows)])
            a = Matrix(data, field)
        cert = one_inverse(a)
        res.check("one_inverse in all_one_inverses", contains(all_one_inverses(a), cert.g), repr(a))
        res.instances += 1
    for n in range(count):
        field = QQ if n % 2 == 0 else fields[1 + (n // 2) % 3]
        a = random_square(rng, 4, field)
        k = index(a)
        res.check("index matches naive definition", k == naive_index(a, rank_fn), repr(a))
        res.count(f"index={k}")
        res.instances += 1
    return res


SUITES = {
    "cline": cline_suite,
    "penrose": penrose_suite,
    "kcomm": kcomm_suite,
    "unreached": unreached_solution_search,
    "repro": repro_suite,
    "primitives": primitives_suite,
}
