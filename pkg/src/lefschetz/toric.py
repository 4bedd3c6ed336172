"""Complete simplicial rational fans and the graded dimensions of their
even-degree rational cohomology.

A fan is stored as primitive integer ray generators plus cones given by
1-based ray index sets.  The cohomology dims are the graded dimensions of
the reduction of the fan's underlying complex by the PINNED linear forms
theta_k = sum_i ray_i[k] * x_i read off the ray matrix; nothing here is
randomized except the optional omega search in toric_wle.

Completeness is verified by proxy: the underlying complex must be a
rational homology (d-1)-sphere and every ridge must lie in exactly two
facets.  Exact support-coverage testing is out of scope.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import exactla
from .complexes import SimplicialComplex, stellar_subdivision
from .errors import InvalidFan, NotLsop, ParseError, SearchExhausted
from .exactla import QQ, as_rng, spawn_rng
from .facering import GradedQuotient, LinearSystem, is_lsop
from .homology import is_homology_sphere
from .vectors import GradedVector, MSequenceResult, is_m_sequence
from .wlp import WlpCertificate, _certificate, _omega_verdicts


def _primitivize(ray):
    g = 0
    for x in ray:
        g = gcd(g, x)
    if g == 0:
        raise InvalidFan("zero vector is not a valid ray")
    if g > 1:
        warnings.warn("ray %r is not primitive; dividing by %d" % (tuple(ray), g))
    return tuple(x // g for x in ray)


@dataclass(frozen=True)
class Fan:
    """A simplicial rational fan: primitive rays and maximal cone index sets.

    Cones are kept 1-based to match the text format and the vertex labels of
    the underlying complex; faces of cones are implicit.
    """

    dim: int
    rays: tuple
    cones: tuple

    def __init__(self, dim, rays, cones):
        if dim < 1:
            raise InvalidFan("ambient dimension must be at least 1")
        prim = []
        for ray in rays:
            ray = tuple(int(x) for x in ray)
            if len(ray) != dim:
                raise InvalidFan("ray %r does not have %d coordinates" % (ray, dim))
            prim.append(_primitivize(ray))
        if len(set(prim)) != len(prim):
            raise InvalidFan("duplicate ray")
        m = len(prim)
        seen = set()
        norm_cones = []
        for cone in cones:
            cone = tuple(sorted(set(int(i) for i in cone)))
            if not cone:
                raise InvalidFan("empty cone")
            if any(i < 1 or i > m for i in cone):
                raise InvalidFan("cone %r references a missing ray" % (cone,))
            if len(cone) > dim:
                raise InvalidFan("cone %r has more rays than the dimension" % (cone,))
            if self._rank([prim[i - 1] for i in cone]) != len(cone):
                raise InvalidFan("cone %r is not simplicial" % (cone,))
            if cone not in seen:
                seen.add(cone)
                norm_cones.append(cone)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rays", tuple(prim))
        object.__setattr__(self, "cones", tuple(sorted(norm_cones)))

    @staticmethod
    def _rank(int_rows):
        rows = [[Fraction(x) for x in r] for r in int_rows]
        _, pivots = exactla.rref_rows(QQ, rows, len(int_rows[0]))
        return len(pivots)


def underlying_complex(fan):
    """The simplicial complex whose faces are the cones' ray index sets."""
    return SimplicialComplex(fan.cones)


def validate_complete(fan):
    """Completeness/validity proxy; raises InvalidFan when it fails."""
    c = underlying_complex(fan)
    if c.vertices != tuple(range(1, len(fan.rays) + 1)):
        raise InvalidFan("every ray must appear in some cone")
    if c.dim != fan.dim - 1:
        raise InvalidFan("maximal cones do not have full dimension %d" % fan.dim)
    if not c.is_pure():
        raise InvalidFan("fan is not pure of full dimension")
    for ridge in c.faces(fan.dim - 2):
        n = sum(1 for F in c.facets if set(ridge) <= set(F))
        if n != 2:
            raise InvalidFan("ridge %r lies in %d facets, expected 2" % (ridge, n))
    if not is_homology_sphere(c, QQ):
        raise InvalidFan("underlying complex is not a rational homology sphere")
    return c


def ray_system(fan, c=None):
    """The pinned linear system read off the ray matrix (over Q)."""
    if c is None:
        c = underlying_complex(fan)
    rows = [tuple(Fraction(ray[k]) for ray in fan.rays) for k in range(fan.dim)]
    system = LinearSystem.from_rows(QQ, rows, c.vertices)
    if not is_lsop(c, system):
        raise NotLsop("ray forms are not an l.s.o.p.; fan data inconsistent")
    return system


def toric_betti(fan):
    """Graded dims of the reduction by the ray forms: the even-degree
    rational cohomology dimensions (odd degrees all vanish)."""
    c = validate_complete(fan)
    system = ray_system(fan, c)
    return GradedVector(GradedQuotient(c, system).dims, kind="betti")


@dataclass(frozen=True)
class ToricMReport:
    mu: GradedVector
    differences: GradedVector
    m_result: MSequenceResult

    @property
    def ok(self):
        return bool(self.m_result)

    def __bool__(self):
        return self.ok


def toric_m_check(fan):
    """M-sequence test on successive differences of the cohomology dims up
    to the middle degree."""
    mu = toric_betti(fan)
    half = fan.dim // 2
    diffs = [mu[0]] + [mu[i] - mu[i - 1] for i in range(1, half + 1)]
    g = GradedVector(diffs, kind="g")
    return ToricMReport(mu=mu, differences=g, m_result=is_m_sequence(tuple(g)))


def toric_wle(fan, rng, max_tries=5):
    """Search a weak Lefschetz element for the PINNED ray-form reduction.

    Only omega is sampled; the linear system is fixed by the fan geometry.
    """
    c = validate_complete(fan)
    system = ray_system(fan, c)
    quotient = GradedQuotient(c, system)
    if isinstance(rng, int):
        base_seed = rng
    else:
        base_seed = as_rng(rng).getrandbits(63)
    m = len(c.vertices)
    for trial in range(max_tries):
        trng = spawn_rng(base_seed, trial)
        omega = tuple(QQ.random_element(trng) for _ in range(m))
        verdicts = _omega_verdicts(quotient, omega)
        if all(v.ok for v in verdicts):
            return _certificate(system, omega, verdicts,
                                seed=base_seed, tries=trial + 1, method="toric")
    raise SearchExhausted("no toric WLE in %d tries" % max_tries)


def stellar_refine(fan, cone):
    """Refine a fan by stellar subdivision of one of its cones, inserting the
    primitivized ray sum as the new ray."""
    cone = tuple(sorted(cone))
    c = underlying_complex(fan)
    if c.vertices != tuple(range(1, len(fan.rays) + 1)):
        raise InvalidFan("every ray must appear in some cone")
    if not c.has_face(cone):
        raise InvalidFan("%r is not a cone of the fan" % (cone,))
    new_ray = _primitivize(tuple(
        sum(fan.rays[i - 1][k] for i in cone) for k in range(fan.dim)))
    if new_ray in fan.rays:
        raise InvalidFan("refinement ray %r already present" % (new_ray,))
    refined = stellar_subdivision(c, cone)
    return Fan(fan.dim, fan.rays + (new_ray,), refined.facets)


# ---- fixtures ----------------------------------------------------------


def projective_plane_fan():
    """The fan of the projective plane: rays e1, e2, -e1-e2."""
    return Fan(2, [(1, 0), (0, 1), (-1, -1)], [(1, 2), (2, 3), (3, 1)])


def product_of_lines_fan():
    """The fan of a product of two projective lines: the four quadrants."""
    return Fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)],
               [(1, 2), (2, 3), (3, 4), (4, 1)])


# ---- file formats ----------------------------------------------------------


def parse_fan(text):
    """Fan text format: a header line with the ambient dimension, then one
    ray per line (d integers), then a blank line, then one cone per line
    (1-based ray indices).  '#' starts a comment."""
    dim = None
    rays = []
    cones = []
    mode = "rays"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if dim is not None and rays and mode == "rays":
                mode = "cones"
            continue
        try:
            values = [int(tok) for tok in line.replace(",", " ").split()]
        except ValueError:
            raise ParseError("expected integers", line=lineno)
        if dim is None:
            if len(values) != 1 or values[0] < 1:
                raise ParseError("header must be a single positive dimension",
                                 line=lineno)
            dim = values[0]
        elif mode == "rays":
            if len(values) != dim:
                raise ParseError("ray needs exactly %d coordinates" % dim,
                                 line=lineno)
            rays.append(tuple(values))
        else:
            cones.append(tuple(values))
    if dim is None:
        raise ParseError("empty fan file")
    if not rays or not cones:
        raise ParseError("fan file needs rays, a blank line, then cones")
    return Fan(dim, rays, cones)


def format_fan(fan):
    lines = [str(fan.dim)]
    lines.extend(" ".join(str(x) for x in ray) for ray in fan.rays)
    lines.append("")
    lines.extend(" ".join(str(i) for i in cone) for cone in fan.cones)
    return "\n".join(lines) + "\n"


def fan_to_json(fan):
    return json.dumps(
        {"dim": fan.dim,
         "rays": [list(r) for r in fan.rays],
         "cones": [list(c) for c in fan.cones]},
        sort_keys=True)


def fan_from_json(text):
    try:
        data = json.loads(text)
        dim, rays, cones = data["dim"], data["rays"], data["cones"]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError("bad fan JSON: %s" % e)
    return Fan(dim, rays, cones)


def load_fan(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return fan_from_json(text)
    return parse_fan(text)
