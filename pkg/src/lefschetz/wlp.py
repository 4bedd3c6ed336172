"""Weak Lefschetz elements: checking, searching, certification, transfer.

A weak Lefschetz element for an Artinian reduction A = k[complex]/Theta is a
linear form w such that every multiplication map .w : A_i -> A_{i+1}, i < d,
is injective or surjective.  Verdicts always come from exact ranks; equal
dimensions alone never count as a pass.

The searching convention throughout: Theta is sampled first and held fixed,
then w is sampled; on an l.s.o.p. failure both are resampled together.
Searches run on trial-indexed derived RNG streams so results are
reproducible and order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import exactla, facering, homology
from .complexes import apply_bistellar, boundary_simplex, join, simplex
from .errors import (
    CertificationFailed,
    HypothesisViolated,
    NotAManifold,
    NotBuchsbaum,
    NotCohenMacaulay,
    NotConnected,
    NotGorensteinStar,
    NotOrientableManifold,
    FormulaMismatch,
    SchenzelMismatch,
    SearchExhausted,
    ShapeMismatch,
    TransferFailed,
)
from .exactla import QQ, Matrix, as_rng, parse_field, spawn_rng, symmetric_lift
from .facering import (
    GradedQuotient,
    LinearSystem,
    is_lsop,
    multiplication_map,
    random_lsop,
    socle,
)
from .homology import reduced_betti
from .vectors import GradedVector, MSequenceResult, h_vector, is_m_sequence


# ---- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class DegreeVerdict:
    degree: int
    dim_from: int
    dim_to: int
    rank: int

    @property
    def injective(self):
        return self.rank == self.dim_from

    @property
    def surjective(self):
        return self.rank == self.dim_to

    @property
    def ok(self):
        return self.injective or self.surjective

    @property
    def verdict(self):
        if self.injective and self.surjective:
            return "bijective"
        if self.injective:
            return "injective"
        if self.surjective:
            return "surjective"
        return "neither"


@dataclass(frozen=True)
class WlpCertificate:
    """Everything needed to re-verify a weak-Lefschetz claim bit-exactly."""

    field_name: str
    prime: object
    theta: tuple
    omega: tuple
    verdicts: tuple
    seed: object = None
    tries: object = None
    certified_over_q: bool = False
    method: str = "direct"

    @property
    def ok(self):
        return bool(self.verdicts) and all(v.ok for v in self.verdicts)

    def __bool__(self):
        return self.ok

    def to_dict(self):
        enc = (lambda x: str(x)) if self.prime is None else (lambda x: int(x))
        return {
            "schema_version": 1,
            "field": self.field_name,
            "prime": self.prime,
            "seed": self.seed,
            "tries": self.tries,
            "certified_over_q": self.certified_over_q,
            "method": self.method,
            "theta": [[enc(x) for x in row] for row in self.theta],
            "omega": [enc(x) for x in self.omega],
            "verdicts": [
                {"degree": v.degree, "dim_from": v.dim_from,
                 "dim_to": v.dim_to, "rank": v.rank, "verdict": v.verdict}
                for v in self.verdicts
            ],
            "ok": self.ok,
        }

    @classmethod
    def from_dict(cls, data):
        f = parse_field(data["field"])
        dec = Fraction if f.char == 0 else int
        return cls(
            field_name=data["field"],
            prime=data["prime"],
            seed=data.get("seed"),
            tries=data.get("tries"),
            certified_over_q=data.get("certified_over_q", False),
            method=data.get("method", "direct"),
            theta=tuple(tuple(dec(x) for x in row) for row in data["theta"]),
            omega=tuple(dec(x) for x in data["omega"]),
            verdicts=tuple(
                DegreeVerdict(degree=v["degree"], dim_from=v["dim_from"],
                              dim_to=v["dim_to"], rank=v["rank"])
                for v in data["verdicts"]
            ),
        )

    def field(self):
        return parse_field(self.field_name)


def _omega_verdicts(quotient, omega):
    out = []
    for i in range(quotient.d):
        mat = multiplication_map(quotient, omega, i)
        out.append(DegreeVerdict(degree=i, dim_from=mat.ncols,
                                 dim_to=mat.nrows, rank=exactla.rank(mat)))
    return tuple(out)


def _certificate(system, omega, verdicts, **extra):
    f = system.field
    return WlpCertificate(
        field_name=f.name,
        prime=None if f.char == 0 else f.prime,
        theta=system.rows,
        omega=tuple(omega),
        verdicts=verdicts,
        **extra,
    )


def check_wle(c, system, omega, field=None):
    """Exact per-degree rank classification of .omega on k[c]/Theta.

    Returns a certificate whose ok flag says whether omega is a weak
    Lefschetz element.  The complex must be Cohen-Macaulay over the field.
    """
    f = system.field
    if field is not None and field is not f:
        raise ShapeMismatch("requested field disagrees with the system's field")
    if not homology.is_cohen_macaulay(c, f):
        raise NotCohenMacaulay("complex is not Cohen-Macaulay over %s" % f.name)
    q = GradedQuotient(c, system)
    omega = tuple(f.convert(x) for x in omega)
    return _certificate(system, omega, _omega_verdicts(q, omega))


def check_wle_middle(c, system, omega, field=None):
    """Surjectivity of the single middle map .omega : A_n -> A_{n+1} with
    n = floor(d/2).  For homology spheres this is equivalent to the full
    per-degree test."""
    f = system.field
    if field is not None and field is not f:
        raise ShapeMismatch("requested field disagrees with the system's field")
    if not homology.is_gorenstein_star(c, f):
        raise NotGorensteinStar("middle-degree shortcut needs a homology sphere")
    q = GradedQuotient(c, system)
    omega = tuple(f.convert(x) for x in omega)
    n = q.d // 2
    mat = multiplication_map(q, omega, n)
    return exactla.rank(mat) == mat.nrows


_GENERIC_MINOR_BUDGET = 2000


def _sample_system(c, f, rng):
    m, d = len(c.vertices), c.dim + 1
    want_generic = comb(m, d) <= _GENERIC_MINOR_BUDGET
    return random_lsop(c, f, rng, require_generic=want_generic)


def find_wle(c, f, rng, max_tries=5):
    """Sample (Theta, omega) pairs until one passes check_wle.

    rng may be an integer seed or a Random; trials use derived per-trial
    streams, so the result depends only on (complex, field, seed).
    """
    if isinstance(rng, int):
        base_seed = rng
    else:
        base_seed = as_rng(rng).getrandbits(63)
    if not homology.is_cohen_macaulay(c, f):
        raise NotCohenMacaulay("complex is not Cohen-Macaulay over %s" % f.name)
    m = len(c.vertices)
    for trial in range(max_tries):
        trng = spawn_rng(base_seed, trial)
        system = _sample_system(c, f, trng)
        omega = tuple(f.random_element(trng) for _ in range(m))
        q = GradedQuotient(c, system)
        verdicts = _omega_verdicts(q, omega)
        if all(v.ok for v in verdicts):
            return _certificate(system, omega, verdicts,
                                seed=base_seed, tries=trial + 1)
    raise SearchExhausted("no weak Lefschetz element in %d tries" % max_tries)


def certify_over_q(c, certificate):
    """Lift an F_p certificate to Q by the symmetric lift of its entries and
    re-verify exactly.  Returns the rational certificate on success."""
    if certificate.prime is None:
        q_theta = certificate.theta
        q_omega = certificate.omega
    else:
        p = certificate.prime
        q_theta = tuple(tuple(Fraction(symmetric_lift(x, p)) for x in row)
                        for row in certificate.theta)
        q_omega = tuple(Fraction(symmetric_lift(x, p)) for x in certificate.omega)
    system = LinearSystem.from_rows(QQ, q_theta, c.vertices)
    if not is_lsop(c, system):
        raise CertificationFailed("lifted system is not an l.s.o.p. over Q")
    quotient = GradedQuotient(c, system)
    verdicts = _omega_verdicts(quotient, q_omega)
    if not all(v.ok for v in verdicts):
        raise CertificationFailed("lifted pair fails the rank test over Q")
    return WlpCertificate(
        field_name=QQ.name,
        prime=None,
        theta=system.rows,
        omega=q_omega,
        verdicts=verdicts,
        seed=certificate.seed,
        tries=certificate.tries,
        certified_over_q=True,
        method=certificate.method,
    )


# ---- transfer across a bistellar move --------------------------------------


def _adapt_rows(rows, before_vertices, after_vertices, f, rng, fill_zero=False):
    idx = {v: j for j, v in enumerate(before_vertices)}
    out = []
    for row in rows:
        new = []
        for v in after_vertices:
            j = idx.get(v)
            if j is not None:
                new.append(row[j])
            elif fill_zero:
                new.append(f.zero)
            else:
                new.append(f.random_element(rng))
        out.append(tuple(new))
    return tuple(out)


def wle_transfer(before, certificate, move, max_search_tries=5):
    """Carry a weak-Lefschetz certificate across a bistellar move.

    Tries the old omega unchanged first.  If that fails, scans
    omega + t * x_v for vertices v entering with the move and
    t = 1, 2, ..., d*h_n + 1 (n the middle degree); the obstruction is a
    polynomial in t of bounded degree, so the scan is guaranteed to hit a
    witness whenever one exists in the scanned pencil.  Falls back to a
    fresh search, and raises TransferFailed (listing the tried values) only
    when that fails too.
    """
    f = certificate.field()
    after = apply_bistellar(before, move)
    base_seed = certificate.seed if certificate.seed is not None else 0
    rng = spawn_rng(base_seed, 1 << 20)

    theta = _adapt_rows(certificate.theta, before.vertices, after.vertices,
                        f, rng)
    system = LinearSystem.from_rows(f, theta, after.vertices)
    if not is_lsop(after, system):
        system = random_lsop(after, f, rng)
    (omega,) = _adapt_rows([certificate.omega], before.vertices,
                           after.vertices, f, rng, fill_zero=True)
    omega = tuple(omega)

    quotient = GradedQuotient(after, system)
    verdicts = _omega_verdicts(quotient, omega)
    if all(v.ok for v in verdicts):
        return _certificate(system, omega, verdicts, seed=certificate.seed,
                            method="transfer:unchanged")

    d = after.dim + 1
    n = d // 2
    h_n = h_vector(after)[n]
    bound = d * h_n + 1
    vindex = {v: j for j, v in enumerate(after.vertices)}
    tried = []
    for v in sorted(move.replacement):
        j = vindex[v]
        for t in range(1, bound + 1):
            tv = f.convert(t)
            cand = list(omega)
            cand[j] = cand[j] + tv if f.char == 0 else (cand[j] + tv) % f.prime
            cand = tuple(cand)
            verdicts = _omega_verdicts(quotient, cand)
            tried.append((v, t))
            if all(vv.ok for vv in verdicts):
                return _certificate(system, cand, verdicts,
                                    seed=certificate.seed,
                                    method="transfer:scan(v=%d,t=%d)" % (v, t))
    try:
        cert = find_wle(after, f, spawn_rng(base_seed, 1 << 21),
                        max_tries=max_search_tries)
    except (SearchExhausted, NotCohenMacaulay) as e:
        raise TransferFailed("transfer scan and fallback search both failed",
                             tried=tuple(tried)) from e
    return WlpCertificate(
        field_name=cert.field_name, prime=cert.prime, theta=cert.theta,
        omega=cert.omega, verdicts=cert.verdicts, seed=cert.seed,
        tries=cert.tries, method="transfer:search")


# ---- rigidity --------------------------------------------------------------


@dataclass(frozen=True)
class RigidityReport:
    dims: tuple
    inequalities_ok: bool
    injective: bool
    hypothesis_met: bool
    tries: int

    @property
    def ok(self):
        return self.inequalities_ok and self.injective

    def __bool__(self):
        return self.ok


def rigidity_check(c, f, rng, max_tries=8):
    """h'_0 <= h'_1 <= h'_2 plus injectivity of a generic .omega in degree
    1 -> 2, on a connected homology manifold.

    The underlying inequality statement assumes dimension at least 3; for
    lower-dimensional manifolds the report still carries the computed data
    with hypothesis_met set to False.
    """
    if not homology.is_homology_manifold(c, f):
        raise NotAManifold("rigidity check needs a homology manifold")
    if not homology.is_connected(c):
        raise NotConnected("rigidity check needs a connected complex")
    rng = as_rng(rng)
    m = len(c.vertices)
    last = None
    for attempt in range(1, max_tries + 1):
        system = _sample_system(c, f, rng)
        q = GradedQuotient(c, system)
        dims = (q.dimension(0), q.dimension(1), q.dimension(2))
        omega = tuple(f.random_element(rng) for _ in range(m))
        mat = multiplication_map(q, omega, 1)
        injective = exactla.rank(mat) == mat.ncols
        report = RigidityReport(
            dims=dims,
            inequalities_ok=dims[0] <= dims[1] <= dims[2],
            injective=injective,
            hypothesis_met=c.dim >= 3,
            tries=attempt,
        )
        if report.ok:
            return report
        last = report
    return last


# ---- join lemmas -----------------------------------------------------------


def _top_face_classes_nonzero(c, degree, faces, f, rng, tries=8):
    """True when every listed face's monomial class is nonzero in the given
    degree of a generic reduction (which must be one-dimensional there)."""
    rng = as_rng(rng)
    for _ in range(tries):
        system = random_lsop(c, f, rng,
                             require_generic=comb(len(c.vertices), c.dim + 1)
                             <= _GENERIC_MINOR_BUDGET)
        q = GradedQuotient(c, system)
        if q.dimension(degree) != 1:
            return False
        if all(any(x != f.zero for x in facering.face_monomial_class(q, s))
               for s in faces):
            return True
    return False


def lemma35_check(i, j, f, rng):
    """In Delta^i * (boundary Delta^j) with generic Theta, every
    (j-1)-dimensional face has nonzero monomial class in degree j."""
    if i < 0 or j < 1:
        raise HypothesisViolated("need i >= 0 and j >= 1")
    a = simplex(i + 1)
    b = boundary_simplex(j, offset=i + 1)
    c = join(a, b)
    return _top_face_classes_nonzero(c, j, c.faces(j - 1), f, rng)


def lemma36_check(i, sphere, v, f, rng):
    """In Delta^i * L, L a homology sphere whose link at v is a simplex
    boundary, every face containing v with |face| = dim L + 1 has nonzero
    class in that degree."""
    from .complexes import link, _is_simplex_boundary

    if i < 0:
        raise HypothesisViolated("need i >= 0")
    j = sphere.dim + 1
    if not homology.is_homology_sphere(sphere, f):
        raise HypothesisViolated("L must be a homology sphere")
    lk = link(sphere, (v,))
    if len(lk.vertices) != j or not _is_simplex_boundary(lk, lk.vertices):
        raise HypothesisViolated(
            "the link of v in L must be the boundary of a %d-simplex" % (j - 1))
    a = simplex(i + 1, offset=max(sphere.vertices))
    c = join(a, sphere)
    faces = [s for s in c.faces(j - 1) if v in s]
    return _top_face_classes_nonzero(c, j, faces, f, rng)


# ---- Schenzel and Kalai vectors --------------------------------------------


def _schenzel_h_prime(c, f):
    h = h_vector(c)
    d = c.dim + 1
    betti = reduced_betti(c, f)
    out = []
    for i in range(d + 1):
        corr = sum((-1) ** j * betti[i - j - 1] for j in range(1, i))
        out.append(h[i] - comb(d, i) * corr)
    return tuple(out)


def h_prime(c, f, rng, max_tries=8):
    """Graded dimensions of a generic Artinian reduction of a Buchsbaum
    complex, cross-checked against the Betti-number correction formula."""
    if not homology.is_buchsbaum(c, f):
        raise NotBuchsbaum("h' needs a Buchsbaum complex over %s" % f.name)
    expected = _schenzel_h_prime(c, f)
    rng = as_rng(rng)
    seen = None
    for _ in range(max_tries):
        system = _sample_system(c, f, rng)
        dims = GradedQuotient(c, system).dims
        if tuple(dims) == expected:
            return GradedVector(expected, kind="h_prime")
        seen = tuple(dims)
    raise SchenzelMismatch(
        "ring dims %r never matched the formula %r" % (seen, expected))


def h_doubleprime(c, f, rng):
    """h'' from h' by removing the socle correction below top degree."""
    hp = h_prime(c, f, rng)
    d = c.dim + 1
    betti = reduced_betti(c, f)
    out = [hp[i] - comb(d, i) * betti[i - 1] if i < d else hp[i]
           for i in range(d + 1)]
    return GradedVector(out, kind="h_doubleprime")


def g_doubleprime(c, f, rng):
    """First differences of h'' up to the middle degree."""
    hpp = h_doubleprime(c, f, rng)
    d = c.dim + 1
    g = [hpp[0]] + [hpp[i] - hpp[i - 1] for i in range(1, d // 2 + 1)]
    return GradedVector(g, kind="g_doubleprime")


# ---- socle structure of manifold reductions --------------------------------


@dataclass(frozen=True)
class NovikSwartzReport:
    socle_dims: tuple
    expected_socle_dims: tuple
    formula_ok: bool
    quotient_dims: tuple
    pairing_ok: bool
    tries: int

    @property
    def ok(self):
        return self.formula_ok and self.pairing_ok

    def __bool__(self):
        return self.ok


def _pairing_ok(q, soc, qdims):
    """Nondegeneracy of (A/I)_j x (A/I)_{d-j} -> (A/I)_d for all j, where I
    is the socle below top degree.  Needs dim (A/I)_d = 1."""
    f = q.field
    d = q.d
    if qdims[d] != 1 or qdims[0] != 1:
        return False
    for j in range(d + 1):
        k = d - j
        bj, bk = q.basis(j), q.basis(k)
        rows = []
        for m1 in bj:
            row = []
            for m2 in bk:
                vec = q.reduce_monomial(tuple(sorted(m1 + m2)))
                row.append(vec[0])
            rows.append(row)
        mat = Matrix(f, rows, ncols=len(bk))
        if exactla.rank(mat) != qdims[j] or qdims[j] != qdims[k]:
            return False
    return True


def novik_swartz_check(c, f, rng, max_tries=8):
    """Socle dimension formula and Poincare duality after the socle quotient,
    for a connected orientable homology manifold."""
    if not homology.is_orientable(c, f):
        raise NotOrientableManifold("need an orientable homology manifold")
    d = c.dim + 1
    betti = reduced_betti(c, f)
    expected = tuple(comb(d, i) * betti[i - 1] for i in range(1, d))
    rng = as_rng(rng)
    last = None
    for attempt in range(1, max_tries + 1):
        system = _sample_system(c, f, rng)
        q = GradedQuotient(c, system)
        soc = socle(q)
        got = tuple(soc.dims[: d - 1])
        formula_ok = got == expected
        qdims = tuple(q.dimension(i) - (soc.dims[i - 1] if 1 <= i < d else 0)
                      for i in range(d + 1))
        pairing_ok = formula_ok and _pairing_ok(q, soc, qdims)
        report = NovikSwartzReport(
            socle_dims=got, expected_socle_dims=expected,
            formula_ok=formula_ok, quotient_dims=qdims,
            pairing_ok=pairing_ok, tries=attempt)
        if report.ok:
            return report
        last = report
    if not last.formula_ok:
        raise FormulaMismatch(
            "socle dims %r != expected %r after %d tries"
            % (last.socle_dims, last.expected_socle_dims, max_tries))
    return last


@dataclass(frozen=True)
class KalaiReport:
    g_doubleprime: GradedVector
    m_result: MSequenceResult

    @property
    def ok(self):
        return bool(self.m_result)

    def __bool__(self):
        return self.ok


def kalai_g_check(c, f, rng):
    """Compute g'' up to the middle degree and test the M-sequence property."""
    g = g_doubleprime(c, f, rng)
    return KalaiReport(g_doubleprime=g, m_result=is_m_sequence(tuple(g)))
