"""Acceptance suite: one test per exit criterion, at the stated ranges.

Every check is an exact equality over Q(zeta_n); there are no tolerances.
Each test prints a single PASS/FAIL line (run pytest with -s to see them).
"""

import random

from conftest import perturbed_euler
from virtualk.cyclotomic import Cyc
from virtualk.line_elements import (
    is_line_element,
    line_element,
    line_mul,
    line_realize,
    nu,
    realize_combo,
    sigma,
    span_rank,
)
from virtualk.localization import (
    from_u_basis,
    gamma,
    gamma_inverse,
    loc_basis,
    u_adams,
    u_gen,
    u_mul,
    u_pow,
    u_unit,
)
from virtualk.verify import (
    checks_adams_oracle,
    checks_gamma_roundtrip,
    checks_line_elements,
    checks_product_oracle,
    checks_psi_ring,
    checks_resolution,
    checks_span,
    run_verify,
)
from virtualk.virtual_ring import lambda_from_adams, monomial_basis


def _report(num: int, title: str, checks) -> None:
    bad = [c for c in checks if not c.passed]
    status = "FAIL" if bad else "PASS"
    print("criterion %2d [%s] %s (%d checks)" % (num, status, title, len(checks)))
    for c in bad[:5]:
        print("   FAIL %s\n     lhs=%s\n     rhs=%s" % (c.id, c.lhs, c.rhs))
    assert not bad


def test_criterion_1_localization_inverse():
    checks = []
    for n in range(2, 9):
        checks.extend(checks_gamma_roundtrip(n))
    _report(1, "gamma and gamma^(-1) are mutually inverse, n=2..8", checks)


def test_criterion_2_product_table_oracle():
    checks = []
    for n in range(2, 9):
        checks.extend(checks_product_oracle(n))
    _report(2, "localized product table = transported virtual product, n=2..8", checks)


def test_criterion_3_adams_oracle():
    checks = []
    for n in range(2, 9):
        checks.extend(checks_adams_oracle(n, 2 * n))
    _report(3, "localized/semisimple Adams = transported virtual Adams, k<=2n, n=2..8", checks)


def test_criterion_4_psi_ring_axioms():
    checks = []
    for n in range(2, 6):
        checks.extend(checks_psi_ring(n))
    _report(4, "augmented psi-ring axioms on the monomial basis, n=2..5", checks)


def test_criterion_5_line_element_classification():
    checks = []
    for n in range(2, 9):
        checks.extend(checks_line_elements(n, 2 * n))
    rng = random.Random(1211)
    extra_ok = True
    for n in range(2, 9):
        for _ in range(5):
            a = line_element(n, [rng.randrange(n) for _ in range(n)],
                             [rng.randint(-2, 2) for _ in range(n)])
            b = line_element(n, [rng.randrange(n) for _ in range(n)],
                             [rng.randint(-2, 2) for _ in range(n)])
            prod = line_mul(a, b)
            extra_ok &= line_realize(prod) == u_mul(line_realize(a), line_realize(b))
            cert = is_line_element(line_realize(a), 2 * n)
            extra_ok &= cert.ok and cert.params == a
    assert extra_ok
    _report(5, "power law, recovery and group law for line elements, n=2..8", checks)


def test_criterion_6_span():
    checks = []
    for n in range(2, 9):
        checks.extend(checks_span(n))
    _report(6, "rank(A) = n(n-1) with reconstruction witnesses, n=2..8", checks)


def test_criterion_7_presentation():
    from virtualk.presentation import verify_presentation

    failures = []
    total = 0
    for n in range(2, 7):
        for rep in verify_presentation(n):
            total += 1
            if not rep.equal:
                failures.append((n, rep))
    print("criterion  7 [%s] sigma/nu presentation and generation, n=2..6 (%d checks)"
          % ("FAIL" if failures else "PASS", total))
    assert not failures


def test_criterion_8_resolution_isomorphism():
    checks = []
    for n in range(2, 9):
        checks.extend(checks_resolution(n, 2 * n))
    _report(8, "psi-ring isomorphism with the resolution K-theory, n=2..8", checks)


def test_criterion_9_lambda_positivity():
    rng = random.Random(2024)
    failures = []
    total = 0
    for n in range(2, 6):
        for t in range(20):
            L = line_element(n, [rng.randrange(n) for _ in range(n)],
                             [rng.randint(-3, 3) for _ in range(n)])
            a = gamma_inverse(from_u_basis(line_realize(L)))
            for i in (2, 3):
                total += 1
                if not lambda_from_adams(a, i).is_zero():
                    failures.append((n, t, i))
    print("criterion  9 [%s] lambda^i vanishes on line elements for i=2,3, n=2..5 (%d checks)"
          % ("FAIL" if failures else "PASS", total))
    assert not failures


def test_criterion_10_negative_control():
    report = run_verify(2, 4, ("product-oracle", "adams-oracle"), euler=perturbed_euler)
    failed = report.failures
    suites_hit = {c.id.split("/", 1)[0] for c in failed}
    ok = (
        not report.ok
        and suites_hit == {"product-oracle", "adams-oracle"}
        and len(failed) < len(report.checks) / 4
        and any("pair" in c.id and "e[" in c.id for c in failed)
        and any("psi-mult" in c.id for c in failed)
    )
    print("criterion 10 [%s] perturbed Euler case fails both oracles with localized diagnosis"
          " (%d of %d checks failed)" % ("PASS" if ok else "FAIL", len(failed), len(report.checks)))
    assert ok
