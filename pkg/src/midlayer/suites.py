"""Named verification suites over the other modules.

Each suite runs a bundle of related invariant checks at a caller-chosen
scale and returns a SuiteResult listing every check with its outcome.
The suites only use public predicates and the brute-force oracles, so a
passing run is an end-to-end cross-check of the construction engine
rather than a tautology.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import islice, product
from math import comb
from random import Random

from . import analysis, construct, lattice, trees
from .bitcube import f_alpha, weight
from .construct import build, state_for_prefix
from .lattice import D_EQ0, D_GT0, D_MINUS, DOWN, UP, enumerate_class
from .search import alpha_vectors, random_sequence


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    @property
    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, passed, detail in self.checks if not passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, passed, detail))


def _suffix(ps: set, a: int, b: int) -> set:
    return {p + (a, b) for p in ps}


def suite_lattice(max_len: int = 16, max_alpha_len: int = 12, max_card: int = 10) -> SuiteResult:
    """Oracle checks on the path classes: the five step-append recursions,
    map-invariance of the two balanced classes, the mirrored pivot, class
    cardinalities, and decomposability."""
    res = SuiteResult("lattice")
    U, D = UP, DOWN

    # the two four-term recursions on the upper range k = n+2 .. 2n+1,
    # and the three middle-range equations, checked as exact set equality
    # with pairwise-disjoint parts; length 2 is skipped because the
    # single-point path fits neither side of the middle equations cleanly
    for n in range(1, (max_len - 2) // 2 + 1):
        m = 2 * n
        for tag in (D_EQ0, D_MINUS):
            for k in range(n + 2, 2 * n + 2):
                parts = [
                    _suffix(enumerate_class(m, k, tag), D, D),
                    _suffix(enumerate_class(m, k - 1, tag), U, D),
                    _suffix(enumerate_class(m, k - 1, tag), D, U),
                    _suffix(enumerate_class(m, k - 2, tag), U, U),
                ]
                _check_partition(
                    res, f"recursion {tag}({k}) at length {m + 2}",
                    parts, enumerate_class(m + 2, k, tag),
                )
        for k in range(n + 2, 2 * n + 2):
            parts = [
                _suffix(enumerate_class(m, k + 1, D_GT0), D, D),
                _suffix(enumerate_class(m, k, D_GT0), U, D),
                _suffix(enumerate_class(m, k, D_GT0), D, U),
                _suffix(enumerate_class(m, k - 1, D_GT0), U, U),
            ]
            _check_partition(
                res, f"recursion {D_GT0}({k + 1}) at length {m + 2}",
                parts, enumerate_class(m + 2, k + 1, D_GT0),
            )
        parts = [
            _suffix(
                enumerate_class(m, n + 1, D_EQ0) | enumerate_class(m, n + 1, D_GT0),
                D, D,
            ),
            _suffix(enumerate_class(m, n, D_EQ0), U, D),
        ]
        _check_partition(
            res, f"recursion {D_EQ0}({n + 1}) at length {m + 2}",
            parts, enumerate_class(m + 2, n + 1, D_EQ0),
        )
        parts = [
            _suffix(enumerate_class(m, n + 2, D_GT0), D, D),
            _suffix(enumerate_class(m, n + 1, D_GT0), U, D),
            _suffix(enumerate_class(m, n + 1, D_GT0), D, U),
        ]
        _check_partition(
            res, f"recursion {D_GT0}({n + 2}) at length {m + 2}",
            parts, enumerate_class(m + 2, n + 2, D_GT0),
        )
        parts = [
            _suffix(enumerate_class(m, n + 1, D_MINUS), D, D),
            _suffix(enumerate_class(m, n, D_MINUS), U, D),
            _suffix(enumerate_class(m, n, D_EQ0), D, U),
        ]
        _check_partition(
            res, f"recursion {D_MINUS}({n + 1}) at length {m + 2}",
            parts, enumerate_class(m + 2, n + 1, D_MINUS),
        )

    # invariance of the two balanced classes under every swap/mirror map,
    # plus the mirrored pivot abscissa on the once-below class
    for n in range(1, max_alpha_len // 2 + 1):
        m = 2 * n
        eq0 = enumerate_class(m, n, D_EQ0)
        dminus = enumerate_class(m, n, D_MINUS)
        bad = []
        for alpha in product((0, 1), repeat=n - 1):
            if {lattice.f_alpha_path(alpha, p) for p in eq0} != eq0:
                bad.append(f"eq0 alpha={alpha}")
            images = {}
            for p in dminus:
                images[p] = lattice.f_alpha_path(alpha, p)
            if set(images.values()) != dminus:
                bad.append(f"dminus alpha={alpha}")
            for p, q in images.items():
                if lattice.decompose(q).pivot != m - lattice.decompose(p).pivot:
                    bad.append(f"pivot alpha={alpha} p={lattice.format_path(p)}")
        res.add(f"class invariance at length {m}", not bad, "; ".join(bad[:3]))

    for n in range(1, max_card + 1):
        got = len(enumerate_class(2 * n, n, D_EQ0))
        res.add(
            f"balanced class size at length {2 * n}",
            got == trees.catalan(n),
            f"{got} != catalan({n})",
        )

    bad = 0
    for m in range(max_len + 1):
        for code in range(1 << m):
            p = lattice.phi(code, m)
            tag = lattice.classify(p).tag
            if tag == lattice.NONE:
                continue
            end = lattice.heights(p)[-1]
            in_domain = (
                tag == D_EQ0
                or (tag == D_GT0 and end >= 2)
                or (tag == D_MINUS and end >= 0)
            )
            try:
                lattice.decompose(p)
            except ValueError:
                bad += in_domain
            except AssertionError:
                bad += 1
    res.add("decompose recomposition", bad == 0, f"{bad} failures")
    return res


def _check_partition(res: SuiteResult, name: str, parts: list[set], whole: set) -> None:
    total = sum(len(p) for p in parts)
    union = set().union(*parts)
    ok = total == len(union) and union == whole
    res.add(name, ok, f"|parts|={total} |union|={len(union)} |whole|={len(whole)}")


def suite_trees(n_max: int = 8, psi_len: int = 16) -> SuiteResult:
    """Tree bijection and counting checks: round trips and active depth
    for every nonnegative path, rotation classes partitioning the trees,
    and closed-form counts against both brute force and known values."""
    res = SuiteResult("trees")

    bad = []
    for m in range(psi_len + 1):
        for code in range(1 << m):
            p = lattice.phi(code, m)
            if min(lattice.heights(p)) < 0:
                continue
            k = sum(1 for s in p if s == UP)
            t, depth = trees.psi(p)
            if depth != 2 * k - m:
                bad.append(f"depth of {lattice.format_path(p)}")
            elif trees.psi_inv(t, depth) != p:
                bad.append(f"round trip of {lattice.format_path(p)}")
            if len(bad) > 3:
                break
    res.add(f"psi round trip through length {psi_len}", not bad, "; ".join(bad[:3]))

    for n in range(1, n_max + 1):
        ts = {trees.psi(p)[0] for p in enumerate_class(2 * n, n, D_EQ0)}
        res.add(
            f"psi injective on {n}-edge trees",
            len(ts) == trees.catalan(n),
            f"{len(ts)} != {trees.catalan(n)}",
        )
        classes: dict[str, int] = {}
        covered = 0
        sizes_ok = True
        for t in ts:
            code = trees.canonical_plane_tree(t)
            if code in classes:
                continue
            cls = trees.rotation_class(t)
            classes[code] = len(cls)
            covered += len(cls)
            if (2 * n) % len(cls):
                sizes_ok = False
        res.add(
            f"rotation classes partition {n}-edge trees",
            covered == trees.catalan(n) and sizes_ok,
            f"covered {covered}, sizes divide 2n: {sizes_ok}",
        )
        res.add(
            f"plane-tree count at {n} edges",
            len(classes) == trees.count_plane_trees(n),
            f"{len(classes)} != {trees.count_plane_trees(n)}",
        )
        full = sum(1 for s in classes.values() if s == 2 * n)
        res.add(
            f"asymmetric count at {n} edges",
            full == trees.count_asymmetric(n),
            f"{full} != {trees.count_asymmetric(n)}",
        )

    known_catalan = (1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)
    known_plane = (1, 1, 2, 3, 6, 14, 34, 95, 280, 854)
    known_asym = (0, 0, 0, 1, 3, 9, 28, 85, 262, 827)
    res.add(
        "catalan sequence",
        tuple(trees.catalan(i) for i in range(1, 11)) == known_catalan,
    )
    res.add(
        "plane-tree sequence",
        tuple(trees.count_plane_trees(i) for i in range(1, 11)) == known_plane,
    )
    res.add(
        "asymmetric sequence",
        tuple(trees.count_asymmetric(i) for i in range(1, 11)) == known_asym,
    )
    return res


def _state_sample(n: int, seed: int, count: int):
    """A few level-n states: the all-zero prefix plus seeded random ones
    (exhaustive instead whenever that is at most count states)."""
    if n == 1:
        return [state_for_prefix(())]
    rng = Random(seed)
    prefixes = {tuple(random_sequence(rng, n - 1)) for _ in range(count)}
    if 1 << ((n - 1) * (n - 2) // 2) <= count:
        prefixes = set(
            product(*[alpha_vectors(level) for level in range(1, n)])
        )
    prefixes.add(tuple(tuple([0] * (i - 1)) for i in range(1, n)))
    return [state_for_prefix(p) for p in sorted(prefixes)]


def suite_paths(n_max: int = 6, seed: int = 2024, states_per_level: int = 4) -> SuiteResult:
    """Structure of the stored path families: endpoint classes, coverage,
    the length formula, the endpoint decomposition relations, and the
    alpha-independence of the length multisets."""
    res = SuiteResult("paths")
    for n in range(1, n_max + 1):
        m = 2 * n
        length_multisets: dict[int, Counter] = {}
        for si, state in enumerate(_state_sample(n, seed + n, states_per_level)):
            label = f"n={n} state {si}"
            for k, fam in state.families.items():
                F, S, L = construct.fsl_sets(state, k)
                img = lambda vs: {lattice.phi(v, m) for v in vs}
                res.add(
                    f"{label} endpoint classes k={k}",
                    img(F) == enumerate_class(m, k, D_EQ0)
                    and img(S) == enumerate_class(m, k + 1, D_GT0)
                    and img(L) == enumerate_class(m, k, D_MINUS),
                )
                bad = []
                for p in fam:
                    d = lattice.decompose(lattice.phi(p[0], m))
                    ds = lattice.decompose(lattice.phi(p[1], m))
                    dl = lattice.decompose(lattice.phi(p[-1], m))
                    if len(p) - 1 != 2 * len(d.ell) + 2:
                        bad.append(f"length of path at {p[0]:#x}")
                    if (d.ell, d.r) != (ds.ell, ds.r):
                        bad.append(f"first/second split at {p[0]:#x}")
                    if (len(d.ell), len(d.r)) != (len(dl.ell), len(dl.r)):
                        bad.append(f"last split lengths at {p[0]:#x}")
                res.add(f"{label} length and split relations k={k}", not bad, "; ".join(bad[:3]))
                mset = Counter(len(p) for p in fam)
                prev = length_multisets.setdefault(k, mset)
                res.add(f"{label} alpha-independent lengths k={k}", mset == prev)

            # coverage: the middle family spans both its levels; every
            # higher family misses below exactly the second vertices one
            # family down
            vs = {v for p in state.families[n] for v in p}
            expect = {x for x in range(1 << m) if weight(x) in (n, n + 1)}
            res.add(f"{label} middle coverage", vs == expect)
            for k in sorted(state.families):
                if k == n:
                    continue
                fam = state.families[k]
                upper = {v for p in fam for v in p if weight(v) == k + 1}
                lower = {v for p in fam for v in p if weight(v) == k}
                missing = {x for x in range(1 << m) if weight(x) == k} - lower
                _, S_below, _ = construct.fsl_sets(state, k - 1)
                res.add(
                    f"{label} upper coverage k={k}",
                    upper == {x for x in range(1 << m) if weight(x) == k + 1}
                    and missing == S_below,
                )

        # the map built from each final alpha keeps the endpoint sets fixed
        state = state_for_prefix(
            tuple(tuple([0] * (i - 1)) for i in range(1, n))
        )
        F, _, L = construct.fsl_sets(state, n)
        bad = []
        for alpha in alpha_vectors(n):
            if {f_alpha(alpha, v) for v in F} != F:
                bad.append(f"F alpha={alpha}")
            if {f_alpha(alpha, v) for v in L} != L:
                bad.append(f"L alpha={alpha}")
        res.add(f"n={n} endpoint sets invariant", not bad, "; ".join(bad[:3]))

    # with the all-zero prefix the second/last decompositions agree exactly
    for n in range(1, min(n_max + 2, 9)):
        state = state_for_prefix(
            tuple(tuple([0] * (i - 1)) for i in range(1, n))
        )
        m = 2 * n
        bad = []
        for p in state.families[n]:
            ds = lattice.decompose(lattice.phi(p[1], m))
            dl = lattice.decompose(lattice.phi(p[-1], m))
            if (ds.ell, ds.r) != (dl.ell, dl.r):
                bad.append(f"{p[0]:#x}")
        res.add(f"n={n} all-zero second/last split", not bad, "; ".join(bad[:3]))
    return res


def suite_parity(n: int, samples: int = 1000, seed: int = 7) -> SuiteResult:
    """Observed cycle-count parity against the closed-form prediction;
    exhaustive through n=6, seeded samples beyond."""
    from .search import iter_exhaustive, iter_random

    res = SuiteResult("parity")
    if n <= 6:
        stream = iter_exhaustive(n)
        label = f"n={n} exhaustive"
    else:
        stream = islice(iter_random(n, seed), samples)
        label = f"n={n} {samples} samples"
    bad = []
    for _, seq, sp in stream:
        if sum(sp.values()) % 2 != analysis.predicted_parity(seq[-1], n):
            bad.append(str(seq))
    res.add(label, not bad, "; ".join(bad[:3]))
    return res


def suite_tau(n_max: int = 5) -> SuiteResult:
    """Every pair of sequences differing by reversal of the final vector
    maps onto each other under the permute-and-invert automorphism."""
    res = SuiteResult("tau")
    for n in range(1, n_max + 1):
        prefixes = list(product(*[alpha_vectors(level) for level in range(1, n)]))
        bad = []
        for prefix in prefixes:
            state = state_for_prefix(prefix)
            for alpha in alpha_vectors(n):
                tf = construct.assemble_two_factor(state, alpha)
                other = construct.assemble_two_factor(state, alpha[::-1])
                image = analysis.tau_image(tf, alpha[::-1])
                if analysis.edge_set(image) != analysis.edge_set(other):
                    bad.append(f"{prefix}+{alpha}")
        res.add(f"n={n} reversed-pair automorphism", not bad, "; ".join(bad[:3]))
    return res


def suite_distinct(n_max: int = 4, random_pairs: int = 0, seed: int = 11) -> SuiteResult:
    """Pairwise distinctness of the produced edge sets: exhaustive up to
    n_max, optionally plus seeded random pairs at n_max+1 and n_max+2."""
    res = SuiteResult("distinct")
    for n in range(1, n_max + 1):
        seqs = [
            prefix + (alpha,)
            for prefix in product(*[alpha_vectors(level) for level in range(1, n)])
            for alpha in alpha_vectors(n)
        ]
        res.add(
            f"n={n} all {len(seqs)} sequences distinct",
            analysis.distinct_check(n, seqs),
        )
    rng = Random(seed)
    for n in (n_max + 1, n_max + 2):
        if not random_pairs:
            break
        bad = 0
        for _ in range(random_pairs):
            a = tuple(random_sequence(rng, n))
            b = tuple(random_sequence(rng, n))
            while b == a:
                b = tuple(random_sequence(rng, n))
            if analysis.edge_set(build(a)) == analysis.edge_set(build(b)):
                bad += 1
        res.add(f"n={n} {random_pairs} random pairs distinct", bad == 0, f"{bad} collisions")
    return res


def suite_all_zero(n_max: int = 9) -> SuiteResult:
    """Cycle structure of the all-zero sequences against the closed-form
    tree counts and the extreme cycle lengths."""
    res = SuiteResult("all_zero")
    expected_cycles = {n: trees.count_plane_trees(n) for n in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        seq = tuple(tuple([0] * (i - 1)) for i in range(1, n + 1))
        sp = construct.cycle_spectrum(state_for_prefix(seq[:-1], k_cap=n), seq[-1])
        ncyc = sum(sp.values())
        res.add(
            f"n={n} cycle count", ncyc == expected_cycles[n],
            f"{ncyc} != {expected_cycles[n]}",
        )
        if n >= 2:
            res.add(
                f"n={n} shortest cycle",
                min(sp) == 2 * (4 * n + 2),
                f"{min(sp)} != {2 * (4 * n + 2)}",
            )
        if n >= 4:
            res.add(
                f"n={n} longest cycle",
                max(sp) == 2 * n * (4 * n + 2)
                and sp[max(sp)] == trees.count_asymmetric(n),
                f"longest {max(sp)} x{sp.get(max(sp))}",
            )
    return res
