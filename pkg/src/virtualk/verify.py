"""Machine verification suites for every ring identity the engine exposes.

Each suite re-derives a family of identities from an independent route and
compares exactly.  The product and Adams oracles transport the polynomial
ground truth through the decomposition map and compare with the closed-form
tables; the psi-ring suite checks the operation axioms on the monomial
basis; the remaining suites certify line elements, their span, the ring
presentation and the resolution comparison.  A report is deterministic for
fixed inputs: wall-clock timing is kept out of the canonical serialization.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from . import linalg
from .cyclotomic import Cyc, zeta_pow
from .line_elements import (
    LineElt,
    is_line_element,
    line_element,
    line_inverse,
    line_mul,
    line_realize,
    nu,
    realize_combo,
    sigma,
    span_block,
    span_rank,
)
from .localization import (
    from_u_basis,
    gamma,
    gamma_inverse,
    loc_adams,
    loc_augmentation,
    loc_basis,
    loc_mul,
    loc_one,
    loc_pow,
    loc_unit,
    loc_x00,
    to_u_basis,
    u_adams,
    u_basis,
    u_gen,
    u_mul,
    u_one00,
    u_pow,
    u_unit,
    u_zero,
)
from .presentation import verify_presentation, verify_resolution_isomorphism
from .virtual_ring import (
    EulerFn,
    KClass,
    k_monomial,
    k_one,
    lambda_from_adams,
    monomial_basis,
    virtual_adams,
    virtual_augmentation,
    virtual_mul,
)

_SEED = 0x5EC7


@dataclass
class Check:
    id: str
    status: str
    lhs: str
    rhs: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    n_min: int
    n_max: int
    k_max: int | None
    suites: tuple[str, ...]
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = False) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "k_max": self.k_max,
            "suites": list(self.suites),
            "summary": {"checks": len(self.checks), "failures": len(self.failures)},
            "checks": [
                {"id": c.id, "status": c.status, "lhs": c.lhs, "rhs": c.rhs}
                for c in self.checks
            ],
            "timing": self.elapsed if include_timing else None,
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True)

    def text_summary(self, verbose: bool = False) -> str:
        lines = []
        per_suite: dict[str, list[Check]] = {}
        for c in self.checks:
            per_suite.setdefault(c.id.split("/", 1)[0], []).append(c)
        for name, checks in per_suite.items():
            bad = [c for c in checks if not c.passed]
            mark = "FAIL" if bad else "PASS"
            lines.append("[%s] %-14s %d checks, %d failures" % (mark, name, len(checks), len(bad)))
        if verbose:
            for c in self.checks:
                lines.append("  [%s] %s" % ("PASS" if c.passed else "FAIL", c.id))
                if not c.passed:
                    lines.append("      lhs: %s" % c.lhs)
                    lines.append("      rhs: %s" % c.rhs)
        else:
            for c in self.failures[:50]:
                lines.append("  FAIL %s" % c.id)
                lines.append("      lhs: %s" % c.lhs)
                lines.append("      rhs: %s" % c.rhs)
            if len(self.failures) > 50:
                lines.append("  ... %d further failures" % (len(self.failures) - 50))
        lines.append(
            "total: %d checks, %d failures (%.2fs)"
            % (len(self.checks), len(self.failures), self.elapsed)
        )
        return "\n".join(lines)


def _eq(checks: list[Check], cid: str, lhs, rhs, fmt=str) -> None:
    ok = lhs == rhs
    checks.append(Check(cid, "pass" if ok else "fail", fmt(lhs), fmt(rhs)))


def _fmt_loc(v) -> str:
    from .expr import format_value

    return format_value("loc", v)


def _fmt_u(v) -> str:
    from .expr import format_value

    return format_value("loc", from_u_basis(v), display="u")


def _fmt_k(v) -> str:
    from .expr import format_value

    return format_value("sector", v)


# ---------------------------------------------------------------------------
# product-oracle


def checks_gamma_roundtrip(n: int) -> list[Check]:
    out: list[Check] = []
    for label, e in loc_basis(n):
        _eq(out, "product-oracle/n=%d/roundtrip-loc/%s" % (n, label),
            gamma(gamma_inverse(e)), e, _fmt_loc)
    for label, a in monomial_basis(n):
        _eq(out, "product-oracle/n=%d/roundtrip-sector/%s" % (n, label),
            gamma_inverse(gamma(a)), a, _fmt_k)
    return out


def checks_product_oracle(n: int, euler: EulerFn | None = None) -> list[Check]:
    """Localized product table against the transported polynomial product."""
    out: list[Check] = []
    basis = loc_basis(n)
    pre = [(label, e, gamma_inverse(e)) for label, e in basis]
    for i, (la, ea, ka) in enumerate(pre):
        for lb, eb, kb in pre[i:]:
            oracle = gamma(virtual_mul(ka, kb, euler=euler))
            _eq(out, "product-oracle/n=%d/pair/%s*%s" % (n, la, lb),
                loc_mul(ea, eb), oracle, _fmt_loc)
    for la, ea in basis:
        for lb, eb in basis:
            if la < lb:
                _eq(out, "product-oracle/n=%d/symmetry/%s*%s" % (n, la, lb),
                    loc_mul(ea, eb), loc_mul(eb, ea), _fmt_loc)
    # Semisimple structure constants: Kronecker products and square-zero row 0.
    ubasis = u_basis(n)
    for la, ua in ubasis:
        for lb, ub in ubasis:
            prod = u_mul(ua, ub)
            if la == "e[0,0]" and lb == "e[0,0]":
                expected = u_one00(n)
            elif la == "e[0,0]":
                expected = ub if lb.startswith("u[0,") else u_zero(n)
            elif lb == "e[0,0]":
                expected = ua if la.startswith("u[0,") else u_zero(n)
            else:
                expected = ua if la == lb and not la.startswith("u[0,") else u_zero(n)
            _eq(out, "product-oracle/n=%d/u-product/%s*%s" % (n, la, lb),
                prod, expected, _fmt_u)
    # The two coordinate systems agree on products of dense classes.
    rng = random.Random(_SEED + n)
    for trial in range(8):
        a = _random_u(rng, n)
        b = _random_u(rng, n)
        via_u = u_mul(a, b)
        via_loc = to_u_basis(loc_mul(from_u_basis(a), from_u_basis(b)))
        _eq(out, "product-oracle/n=%d/u-loc-consistency/%d" % (n, trial),
            via_u, via_loc, _fmt_u)
    # Remaining presentation-ideal families: the unit decomposes into the row
    # idempotents, rows sum to their idempotent, idempotents are orthogonal,
    # and each row idempotent fixes exactly its own semisimple generators.
    unit_decomp = loc_one(n, 0, 0)
    for l in range(1, n):
        unit_decomp = unit_decomp + loc_one(n, 0, l)
    _eq(out, "product-oracle/n=%d/ideal/unit-decomposition" % n,
        unit_decomp, loc_unit(n), _fmt_loc)
    for l in range(1, n):
        total = u_zero(n)
        for q in range(n):
            total = total + u_gen(n, l, q)
        _eq(out, "product-oracle/n=%d/ideal/row-sum/l=%d" % (n, l),
            from_u_basis(total), loc_one(n, 0, l), _fmt_loc)
    for l1 in range(n):
        e1 = loc_one(n, 0, l1)
        for l2 in range(n):
            expected = e1 if l1 == l2 else loc_unit(n).scale(0)
            _eq(out, "product-oracle/n=%d/ideal/idempotents/l=%d,%d" % (n, l1, l2),
                loc_mul(e1, loc_one(n, 0, l2)), expected, _fmt_loc)
        for l2 in range(n):
            for q in range(n):
                ug = from_u_basis(u_gen(n, l2, q))
                expected = ug if l1 == l2 else loc_unit(n).scale(0)
                _eq(out, "product-oracle/n=%d/ideal/row-unit/u[%d,%d]*e[0,%d]" % (n, l2, q, l1),
                    loc_mul(ug, e1), expected, _fmt_loc)
    # Powers of x_00 collapse linearly.
    x = loc_x00(n)
    e00 = loc_one(n, 0, 0)
    power = x
    for k in range(2, 11):
        power = loc_mul(power, x)
        _eq(out, "product-oracle/n=%d/x00-power/k=%d" % (n, k),
            power, x.scale(k) - e00.scale(k - 1), _fmt_loc)
    return out


def _random_cyc(rng: random.Random, n: int) -> Cyc:
    from .cyclotomic import phi_degree

    return Cyc(n, [rng.randint(-3, 3) for _ in range(phi_degree(n))], rng.choice([1, 1, 2, 3]))


def _random_u(rng: random.Random, n: int):
    from .localization import UClass, _freeze

    rows = [[_random_cyc(rng, n) for _ in range(n)] for _ in range(n)]
    return UClass(n, _random_cyc(rng, n), _freeze(rows))


def suite_product_oracle(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    return checks_gamma_roundtrip(n) + checks_product_oracle(n, euler)


# ---------------------------------------------------------------------------
# adams-oracle


def checks_adams_oracle(n: int, k_max: int | None = None,
                        euler: EulerFn | None = None) -> list[Check]:
    out: list[Check] = []
    if k_max is None:
        k_max = 2 * n
    pre = [(label, e, gamma_inverse(e)) for label, e in loc_basis(n)]
    for k in range(1, k_max + 1):
        for label, e, ke in pre:
            _eq(out, "adams-oracle/n=%d/loc/%s/k=%d" % (n, label, k),
                loc_adams(e, k), gamma(virtual_adams(ke, k)), _fmt_loc)
    for k in range(1, k_max + 1):
        for label, b in u_basis(n):
            _eq(out, "adams-oracle/n=%d/u/%s/k=%d" % (n, label, k),
                u_adams(b, k), to_u_basis(loc_adams(from_u_basis(b), k)), _fmt_u)
    # The Adams operations are multiplicative for the virtual product; this
    # family touches every Euler case, so it is sensitive to the case table.
    for m1 in range(n):
        for m2 in range(n):
            a = k_monomial(n, m1, 1)
            b = k_monomial(n, m2, 1)
            ab = virtual_mul(a, b, euler=euler)
            for k in (2, 3):
                _eq(out, "adams-oracle/n=%d/psi-mult/x[%d]*x[%d]/k=%d" % (n, m1, m2, k),
                    virtual_adams(ab, k),
                    virtual_mul(virtual_adams(a, k), virtual_adams(b, k), euler=euler),
                    _fmt_k)
    return out


def suite_adams_oracle(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    return checks_adams_oracle(n, k_max, euler)


# ---------------------------------------------------------------------------
# psi-ring


def checks_psi_ring(n: int, k_max: int | None = None) -> list[Check]:
    out: list[Check] = []
    basis = monomial_basis(n)
    unit = k_one(n)
    for label, a in basis:
        _eq(out, "psi-ring/n=%d/identity-op/%s" % (n, label),
            virtual_adams(a, 1), a, _fmt_k)
        _eq(out, "psi-ring/n=%d/unit-law/%s" % (n, label),
            virtual_mul(unit, a), a, _fmt_k)
    for k in range(1, 5):
        for l in range(1, 5):
            for label, a in basis:
                _eq(out, "psi-ring/n=%d/composition/%s/k=%d,l=%d" % (n, label, k, l),
                    virtual_adams(virtual_adams(a, l), k),
                    virtual_adams(a, k * l), _fmt_k)
    for i, (la, a) in enumerate(basis):
        for lb, b in basis[i:]:
            ab = virtual_mul(a, b)
            _eq(out, "psi-ring/n=%d/commutativity/%s*%s" % (n, la, lb),
                ab, virtual_mul(b, a), _fmt_k)
            for k in range(2, 5):
                _eq(out, "psi-ring/n=%d/homomorphism/%s*%s/k=%d" % (n, la, lb, k),
                    virtual_adams(ab, k),
                    virtual_mul(virtual_adams(a, k), virtual_adams(b, k)), _fmt_k)
    for label, a in basis:
        ea = virtual_augmentation(a)
        for k in range(1, 7):
            pa = virtual_adams(a, k)
            _eq(out, "psi-ring/n=%d/augmentation/eps-psi/%s/k=%d" % (n, label, k),
                virtual_augmentation(pa), ea, _fmt_k)
            _eq(out, "psi-ring/n=%d/augmentation/psi-eps/%s/k=%d" % (n, label, k),
                virtual_adams(ea, k), ea, _fmt_k)
    if n <= 4:
        triples = [(a, b, c) for _, a in basis for _, b in basis for _, c in basis]
        labels = [(la, lb, lc) for la, _ in basis for lb, _ in basis for lc, _ in basis]
    else:
        rng = random.Random(_SEED + 31 * n)
        idx = [tuple(rng.randrange(len(basis)) for _ in range(3)) for _ in range(40)]
        triples = [(basis[i][1], basis[j][1], basis[k][1]) for i, j, k in idx]
        labels = [(basis[i][0], basis[j][0], basis[k][0]) for i, j, k in idx]
    for (a, b, c), (la, lb, lc) in zip(triples, labels):
        _eq(out, "psi-ring/n=%d/associativity/%s*%s*%s" % (n, la, lb, lc),
            virtual_mul(virtual_mul(a, b), c),
            virtual_mul(a, virtual_mul(b, c)), _fmt_k)
    return out


def suite_psi_ring(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    return checks_psi_ring(n, k_max)


# ---------------------------------------------------------------------------
# line-elements


def _random_line(rng: random.Random, n: int) -> LineElt:
    f = [rng.randrange(n) for _ in range(n)]
    beta = [_random_cyc(rng, n) for _ in range(n)]
    return line_element(n, f, beta)


def checks_line_elements(n: int, k_max: int | None = None) -> list[Check]:
    out: list[Check] = []
    if k_max is None:
        k_max = 2 * n
    rng = random.Random(_SEED + 7 * n)
    gens = [("sigma[%d]" % i, sigma(n, i)) for i in range(n)]
    gens += [("nu[%d]" % j, nu(n, j)) for j in range(n)]
    gens += [("random[%d]" % t, _random_line(rng, n)) for t in range(4)]
    for label, L in gens:
        b = line_realize(L)
        power = b
        for k in range(2, k_max + 1):
            power = u_mul(power, b)
            _eq(out, "line-elements/n=%d/power-law/%s/k=%d" % (n, label, k),
                u_adams(b, k), power, _fmt_u)
        cert = is_line_element(b, k_max)
        _eq(out, "line-elements/n=%d/certificate/%s" % (n, label),
            (cert.ok, cert.params), (True, L),
            lambda t: "ok=%s params=%s" % (t[0], t[1]))
        _eq(out, "line-elements/n=%d/inverse/%s" % (n, label),
            u_mul(b, line_realize(line_inverse(L))), u_unit(n), _fmt_u)
    for la, La in gens[: n + 2]:
        for lb, Lb in gens[: n + 2]:
            _eq(out, "line-elements/n=%d/group-law/%s*%s" % (n, la, lb),
                line_realize(line_mul(La, Lb)),
                u_mul(line_realize(La), line_realize(Lb)), _fmt_u)
    for i in range(n):
        torsion = sigma(n, i)
        power = torsion
        for _ in range(n - 1):
            power = line_mul(power, torsion)
        _eq(out, "line-elements/n=%d/torsion/sigma[%d]^%d" % (n, i, n),
            line_realize(power), u_unit(n), _fmt_u)
    # Failure modes: the zero-unit class and a scaled unit are not line elements.
    _eq(out, "line-elements/n=%d/reject-noninvertible" % n,
        is_line_element(u_gen(n, 1, 0), k_max).ok, False)
    _eq(out, "line-elements/n=%d/reject-scaled-unit" % n,
        is_line_element(u_unit(n).scale(2), k_max).ok, False)
    if n <= 5:
        for t in range(20):
            L = _random_line(rng, n)
            a = gamma_inverse(from_u_basis(line_realize(L)))
            for i in (2, 3):
                _eq(out, "line-elements/n=%d/lambda-positivity/%d/i=%d" % (n, t, i),
                    lambda_from_adams(a, i).is_zero(), True)
    return out


def suite_line_elements(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    return checks_line_elements(n, k_max)


# ---------------------------------------------------------------------------
# span


def checks_span(n: int) -> list[Check]:
    out: list[Check] = []
    witnesses = span_rank(n)
    _eq(out, "span/n=%d/rank" % n, witnesses.rank, n * (n - 1))
    B = span_block(n)
    sq = [[sum((B[r][t] * B[t][c] for t in range(n - 1)), Cyc.zero(n))
           for c in range(n - 1)] for r in range(n - 1)]
    ok = all(
        sq[r][c] == (2 * n if (r + 1) + (c + 1) == n else n)
        for r in range(n - 1)
        for c in range(n - 1)
    )
    _eq(out, "span/n=%d/block-square-pattern" % n, ok, True)
    expected = {"1": u_unit(n)}
    for q in range(n):
        expected["u[0,%d]" % q] = u_gen(n, 0, q)
        for l in range(1, n):
            expected["u[%d,%d]" % (l, q)] = u_gen(n, l, q)
    for key, target in expected.items():
        combo = witnesses.combos[key]
        _eq(out, "span/n=%d/witness/%s" % (n, key),
            realize_combo(n, combo), target, _fmt_u)
    return out


def suite_span(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    return checks_span(n)


# ---------------------------------------------------------------------------
# presentation / resolution


def suite_presentation(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    out = []
    for rep in verify_presentation(n):
        out.append(Check("presentation/n=%d/%s" % (n, rep.relation),
                         "pass" if rep.equal else "fail", rep.lhs, rep.rhs))
    return out


def checks_resolution(n: int, k_max: int | None = None) -> list[Check]:
    out = []
    if k_max is None:
        k_max = 2 * n
    for rep in verify_resolution_isomorphism(n, k_max):
        out.append(Check("resolution/n=%d/%s" % (n, rep.relation),
                         "pass" if rep.equal else "fail", rep.lhs, rep.rhs))
    # Augmentation compatibility across the decomposition map.
    for label, a in monomial_basis(n):
        _eq(out, "resolution/n=%d/augmentation-transport/%s" % (n, label),
            gamma(virtual_augmentation(a)), loc_augmentation(gamma(a)), _fmt_loc)
        ea = virtual_augmentation(a)
        for k in range(1, k_max + 1):
            _eq(out, "resolution/n=%d/augmentation-stability/%s/k=%d" % (n, label, k),
                virtual_augmentation(virtual_adams(a, k)), ea, _fmt_k)
    return out


def suite_resolution(n: int, k_max: int | None, euler: EulerFn | None) -> list[Check]:
    return checks_resolution(n, k_max)


# ---------------------------------------------------------------------------
# Runner


SUITES = {
    "product-oracle": suite_product_oracle,
    "adams-oracle": suite_adams_oracle,
    "psi-ring": suite_psi_ring,
    "line-elements": suite_line_elements,
    "span": suite_span,
    "presentation": suite_presentation,
    "resolution": suite_resolution,
}


def run_verify(n_min: int = 2, n_max: int = 5, suites: tuple[str, ...] = ("all",),
               k_max: int | None = None, euler: EulerFn | None = None) -> Report:
    """Run the selected suites over n_min..n_max and collect a report.

    ``k_max`` of None means 2n per weight.  ``euler`` substitutes the Euler
    case table inside the transported products (used by negative controls).
    """
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    names = []
    for s in suites:
        if s == "all":
            names.extend(SUITES)
        elif s in SUITES:
            names.append(s)
        else:
            raise ValueError("unknown suite %r (choose from %s)" % (s, ", ".join(SUITES)))
    seen = set()
    names = [s for s in names if not (s in seen or seen.add(s))]
    report = Report(n_min, n_max, k_max, tuple(names))
    start = time.perf_counter()
    for n in range(n_min, n_max + 1):
        for name in names:
            report.checks.extend(SUITES[name](n, k_max, euler))
    report.elapsed = time.perf_counter() - start
    return report
