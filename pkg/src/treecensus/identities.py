"""Exact-rational verification of the census identities.

Every check compares a closed form against a summation (or a summation of
summations) in fractions.Fraction arithmetic; there is no tolerance, only
exact equality.  The two "general-a" identities replace the vertex count in
one side of a normalized identity by a free rational parameter a; they
reduce to the plain normalized identities at a = n.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check.

    lhs is the closed-form side, rhs the summation side; holds means exact
    equality.  detail is empty unless the check failed, in which case it
    lists the partial sums so a transcription bug can be localized.
    """

    identity: str
    params: dict
    lhs: Fraction
    rhs: Fraction
    holds: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": {name: str(value) for name, value in self.params.items()},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            **({"detail": self.detail} if self.detail else {}),
        }


def _report(identity: str, params: dict, lhs, terms) -> IdentityReport:
    lhs = Fraction(lhs)
    terms = list(terms)
    rhs = sum(terms, start=Fraction(0))
    holds = lhs == rhs
    detail = ""
    if not holds:
        partials = []
        running = Fraction(0)
        for term in terms:
            running += term
            partials.append(str(running))
        detail = f"partial sums: [{', '.join(partials)}]"
    return IdentityReport(identity, params, lhs, rhs, holds, detail)


def _check_n(n: int, minimum: int) -> None:
    if n < minimum:
        raise ValueError(f"n must be at least {minimum}")


def _identity1_terms(n: int):
    return (
        Fraction(n - 1 - k) * Fraction(n) ** (n - 2 - k) * Fraction(n - 1) ** (k - 1)
        for k in range(n)
    )


def verify_identity1(n: int) -> IdentityReport:
    """(n-1)^(n-1) equals the sum over roots of the K_n census counts."""
    _check_n(n, 2)
    return _report("identity1", {"n": n}, Fraction(n - 1) ** (n - 1), _identity1_terms(n))


def _identity2_terms(m: int, n: int):
    return (
        Fraction(m) ** (n - 2)
        * Fraction(n) ** (m - k - 1)
        * Fraction(n - 1) ** (k - 1)
        * (m + n - k)
        for k in range(1, m + 1)
    )


def verify_identity2(m: int, n: int) -> IdentityReport:
    """m^(n-1) n^(m-1) equals the sum over highest children of the K_{m,n} counts."""
    if m < 1:
        raise ValueError("m must be at least 1")
    _check_n(n, 2)
    lhs = Fraction(m) ** (n - 1) * Fraction(n) ** (m - 1)
    return _report("identity2", {"m": m, "n": n}, lhs, _identity2_terms(m, n))


def _refinement_terms(n: int, k: int):
    return (
        Fraction(n) ** (n - k - j - 2)
        * Fraction(n - 1) ** (k + j - 2)
        * (2 * n - k - j - 1)
        for j in range(1, n - k)
    )


def verify_refinement(n: int, k: int) -> IdentityReport:
    """The root-(n-k) census count equals the sum of its highest-child refinements."""
    _check_n(n, 2)
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} out of range 0..{n - 2}")
    lhs = Fraction(n - 1 - k) * Fraction(n) ** (n - 2 - k) * Fraction(n - 1) ** (k - 1)
    return _report("refinement", {"n": n, "k": k}, lhs, _refinement_terms(n, k))


def verify_sumrefine(n: int) -> IdentityReport:
    """(n-1)^(n-1) equals the double sum over roots and highest children."""
    _check_n(n, 2)
    terms = (
        term for k in range(n) for term in _refinement_terms(n, k)
    )
    return _report("sumrefine", {"n": n}, Fraction(n - 1) ** (n - 1), terms)


def verify_simplified_1(n: int) -> IdentityReport:
    """n-1 = sum_k (n/(n-1))^(n-2-k) (1 - k/(n-1)): the normalized root sum."""
    _check_n(n, 2)
    ratio = Fraction(n, n - 1)
    terms = (ratio ** (n - 2 - k) * (1 - Fraction(k, n - 1)) for k in range(n))
    return _report("simplified-1", {"n": n}, n - 1, terms)


def verify_simplified_2(m: int, n: int) -> IdentityReport:
    """m = sum_j ((n-1)/n)^(j-1) (m+n-j)/n: the normalized child sum."""
    if m < 1:
        raise ValueError("m must be at least 1")
    _check_n(n, 2)
    ratio = Fraction(n - 1, n)
    terms = (ratio ** (j - 1) * Fraction(m + n - j, n) for j in range(1, m + 1))
    return _report("simplified-2", {"m": m, "n": n}, m, terms)


def verify_general_a(n: int, a) -> IdentityReport:
    """The normalized root sum with a free rational parameter a in place of n.

    Checks sum_k (a/(a-1))^(n-2-k) (1 - k/(a-1)) = (n-1) + (a-n)/a for
    a outside {0, 1}; a = n recovers the simplified-1 identity.
    """
    _check_n(n, 2)
    a = Fraction(a)
    if a in (0, 1):
        raise ValueError("parameter a must avoid 0 and 1")
    ratio = a / (a - 1)
    lhs = (n - 1) + (a - n) / a
    terms = (ratio ** (n - 2 - k) * (1 - k / (a - 1)) for k in range(n))
    return _report("general-a", {"n": n, "a": a}, lhs, terms)


def _kn_minus_edge_terms(n: int):
    yield Fraction(n) ** (n - 3) * (n - 2)
    for k in range(1, n - 1):
        yield (
            Fraction(n) ** (n - 2 - k)
            * Fraction(n - 1) ** (k - 1)
            * ((n - 3 - k) + Fraction(2 * n * k + n - k - 2, n * (n - 1)))
        )


def verify_kn_minus_edge_total(n: int) -> IdentityReport:
    """(n-1)^(n-3) (n-2)^2 equals the summed root census of K_n minus {1,n}."""
    _check_n(n, 3)
    lhs = Fraction(n - 1) ** (n - 3) * (n - 2) ** 2
    return _report("kn-minus-edge-total", {"n": n}, lhs, _kn_minus_edge_terms(n))


def verify_kn_minus_edge_norm(n: int) -> IdentityReport:
    """n-2 equals the normalized form of the K_n-minus-edge census sum."""
    _check_n(n, 3)
    ratio = Fraction(n, n - 1)

    def terms():
        yield ratio ** (n - 3)
        for k in range(1, n - 1):
            yield ratio ** (n - 2 - k) * (
                Fraction(n - 3 - k, n - 2)
                + Fraction(2 * n * k + n - k - 2, n * (n - 1) * (n - 2))
            )

    return _report("kn-minus-edge-norm", {"n": n}, n - 2, terms())


def verify_general_a_minus_edge(n: int, a) -> IdentityReport:
    """The normalized K_n-minus-edge sum with a free rational parameter a.

    Checks (a/(a-1))^(n-3) + sum_k (a/(a-1))^(n-2-k) ((a-3-k)/(a-2)
    + (2ak+a-k-2)/(a(a-1)(a-2))) = (n-2) + (1 + (n-(n-1)a)/(a(a-2))) for
    a outside {0, 1, 2}; a = n recovers the kn-minus-edge-norm identity.
    """
    _check_n(n, 3)
    a = Fraction(a)
    if a in (0, 1, 2):
        raise ValueError("parameter a must avoid 0, 1 and 2")
    ratio = a / (a - 1)
    lhs = (n - 2) + (1 + (n - (n - 1) * a) / (a * (a - 2)))

    def terms():
        yield ratio ** (n - 3)
        for k in range(1, n - 1):
            yield ratio ** (n - 2 - k) * (
                (a - 3 - k) / (a - 2)
                + (2 * a * k + a - k - 2) / (a * (a - 1) * (a - 2))
            )

    return _report("general-a-minus-edge", {"n": n, "a": a}, lhs, terms())


def verify_all(n_max: int, m_max: int, a_samples=()) -> list[IdentityReport]:
    """Run every verifier over its full grid up to the bounds.

    a_samples supplies rational parameters for the two general-a identities;
    samples at an identity's excluded points are skipped for that identity.
    The report order is fixed: identity by identity, parameters ascending.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    samples = [Fraction(a) for a in a_samples]
    reports = []
    for n in range(2, n_max + 1):
        reports.append(verify_identity1(n))
    for m in range(1, m_max + 1):
        for n in range(2, n_max + 1):
            reports.append(verify_identity2(m, n))
    for n in range(2, n_max + 1):
        for k in range(n - 1):
            reports.append(verify_refinement(n, k))
    for n in range(2, n_max + 1):
        reports.append(verify_sumrefine(n))
    for n in range(2, n_max + 1):
        reports.append(verify_simplified_1(n))
    for m in range(1, m_max + 1):
        for n in range(2, n_max + 1):
            reports.append(verify_simplified_2(m, n))
    for a in samples:
        if a not in (0, 1):
            for n in range(2, n_max + 1):
                reports.append(verify_general_a(n, a))
    for n in range(3, n_max + 1):
        reports.append(verify_kn_minus_edge_total(n))
    for n in range(3, n_max + 1):
        reports.append(verify_kn_minus_edge_norm(n))
    for a in samples:
        if a not in (0, 1, 2):
            for n in range(3, n_max + 1):
                reports.append(verify_general_a_minus_edge(n, a))
    return reports
