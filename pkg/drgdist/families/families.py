from __future__ import annotations
from dataclasses import dataclass, field
from typing import TYPE_CHECKING
from fractions import Fraction
from logging import getLogger
from math import isqrt, sqrt

from human_readable import listing

from ..shared import FamilyParameterError, UnknownFamily
from ..scheme import IntersectionArray
from .classical import ClassicalParameters, classical_to_ia
from .gaussian import q_int

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    Param = int | Fraction


_LOG = "families"


@dataclass(kw_only=True, frozen=True, slots=True)
class Family:
    """
    A named family of distance-regular graphs
    Exactly one of classical and array generates the intersection array
    """

    id: str
    title: str
    params: tuple[str, ...]
    valid: str
    closed_form: Callable[..., float]
    classical: Callable[..., ClassicalParameters] | None = None
    array: Callable[..., tuple[tuple[int, ...], tuple[int, ...]]] | None = None
    aliases: tuple[str, ...] = field(default=())


@dataclass(kw_only=True, frozen=True, slots=True)
class ClosedFormRow:
    """
    One row of a closed-form table: a family instance, its closed-form c_2(G)^2 and the formula source
    """

    family: str
    params: tuple[Param, ...]
    c2_sq: float
    source: str


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise FamilyParameterError(f"Parameters out of range: need {what}")


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(i for i in range(2, q + 1) if q % i == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _classical_b_pos(p: ClassicalParameters) -> float:
    return float(p.c2_sq_upper())


#
# Classical parameters, b >= 1
#


def _hamming(d: int, q: int) -> ClassicalParameters:
    _require(d >= 1 and q >= 2, "d >= 1 and q >= 2")
    return ClassicalParameters(d=d, b=1, alpha=0, beta=q - 1)


def _johnson(n: int, d: int) -> ClassicalParameters:
    _require(d >= 1 and n >= 2 * d, "d >= 1 and n >= 2d")
    return ClassicalParameters(d=d, b=1, alpha=1, beta=n - d)


def _halved_cube(n: int) -> ClassicalParameters:
    _require(n >= 4, "n >= 4")
    return ClassicalParameters(d=n // 2, b=1, alpha=2, beta=2 * ((n + 1) // 2) - 1)


def _doob(d: int) -> ClassicalParameters:
    _require(d >= 2, "d >= 2")
    return ClassicalParameters(d=d, b=1, alpha=0, beta=3)


def _grassmann(q: int, n: int, d: int) -> ClassicalParameters:
    _require(_is_prime_power(q) and d >= 1 and n >= 2 * d, "q a prime power, d >= 1 and n >= 2d")
    return ClassicalParameters(d=d, b=q, alpha=q, beta=q_int(n - d + 1, q) - 1)


def _bilinear(d: int, e: int, q: int) -> ClassicalParameters:
    _require(_is_prime_power(q) and 1 <= d <= e, "q a prime power and 1 <= d <= e")
    return ClassicalParameters(d=d, b=q, alpha=q - 1, beta=q**e - 1)


def _dual_polar(d: int, e: Param, q: int) -> ClassicalParameters:
    e = Fraction(e)
    _require(_is_prime_power(q) and d >= 1, "q a prime power and d >= 1")
    _require(e in (0, Fraction(1, 2), 1, Fraction(3, 2), 2), "e in {0, 1/2, 1, 3/2, 2}")
    root = isqrt(q)
    _require(e.denominator == 1 or root * root == q, "q a square when e is a half-integer")
    beta = q ** int(e) if e.denominator == 1 else root ** int(2 * e)
    return ClassicalParameters(d=d, b=q, alpha=0, beta=beta)


def _alternating(n: int, q: int) -> ClassicalParameters:
    _require(_is_prime_power(q) and n >= 2, "q a prime power and n >= 2")
    m = 2 * ((n + 1) // 2) - 1
    return ClassicalParameters(d=n // 2, b=q * q, alpha=q * q - 1, beta=q**m - 1)


def _half_dual_polar(n: int, q: int) -> ClassicalParameters:
    _require(_is_prime_power(q) and n >= 4, "q a prime power and n >= 4")
    m = 2 * ((n + 1) // 2) - 1
    return ClassicalParameters(d=n // 2, b=q * q, alpha=q * q + q, beta=q_int(m + 1, q) - 1)


def _gosset() -> ClassicalParameters:
    return ClassicalParameters(d=3, b=1, alpha=4, beta=9)


def _e77(q: int) -> ClassicalParameters:
    _require(_is_prime_power(q), "q a prime power")
    return ClassicalParameters(d=3, b=q**4, alpha=q_int(5, q) - 1, beta=q_int(10, q) - 1)


def _affine_e6(q: int) -> ClassicalParameters:
    _require(_is_prime_power(q), "q a prime power")
    return ClassicalParameters(d=3, b=q**4, alpha=q**4 - 1, beta=q**9 - 1)


def _unitary_dual_polar(d: int, r: int) -> ClassicalParameters:
    _require(_is_prime_power(r) and d >= 1, "r a prime power and d >= 1")
    return ClassicalParameters(d=d, b=r * r, alpha=0, beta=r)


#
# Classical parameters, b <= -1
#


def _witt_m24() -> ClassicalParameters:
    return ClassicalParameters(d=3, b=-2, alpha=-4, beta=10)


def _witt_m23() -> ClassicalParameters:
    return ClassicalParameters(d=3, b=-2, alpha=-2, beta=5)


def _ternary_golay() -> ClassicalParameters:
    return ClassicalParameters(d=3, b=-2, alpha=-3, beta=8)


def _triality(q: int) -> ClassicalParameters:
    _require(_is_prime_power(q), "q a prime power")
    return ClassicalParameters(d=3, b=-q, alpha=Fraction(q, 1 - q), beta=q * q + q)


def _hermitian(d: int, q: int) -> ClassicalParameters:
    _require(_is_prime_power(q) and d >= 1, "q a prime power and d >= 1")
    return ClassicalParameters(d=d, b=-q, alpha=-q - 1, beta=-((-q) ** d) - 1)


def unitary_dual_polar_negative(d: int, r: int) -> ClassicalParameters:
    """
    The second classical parameter set of U(2d, r), with b = -r
    """
    _require(_is_prime_power(r) and d >= 1, "r a prime power and d >= 1")
    return ClassicalParameters(
        d=d, b=-r, alpha=Fraction(r * r + r, 1 - r), beta=Fraction(r - (-r) ** (d + 1), 1 - r)
    )


#
# Explicit arrays
#


def _hadamard(mu: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _require(mu == 1 or (mu >= 2 and mu % 2 == 0), "mu = 1 or mu even")
    return (2 * mu, 2 * mu - 1, mu, 1), (1, mu, 2 * mu - 1, 2 * mu)


def _taylor(k: int, mu: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _require(k >= 2 and 1 <= mu <= k - 1, "k >= 2 and 1 <= mu <= k-1")
    return (k, mu, 1), (1, mu, k)


def _hexagon(s: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _require(s >= 2 and t >= 2 and s <= t**3 and t <= s**3, "s, t >= 2, s <= t^3 and t <= s^3")
    return (s * (t + 1), s * t, s * t), (1, 1, t + 1)


def _octagon(s: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _require(s >= 2 and t >= 2 and s <= t**2 and t <= s**2, "s, t >= 2, s <= t^2 and t <= s^2")
    return (s * (t + 1), s * t, s * t, s * t), (1, 1, 1, t + 1)


def _odd(d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _require(d >= 2, "d >= 2")
    return tuple(d + 1 - (i + 1) // 2 for i in range(d)), tuple((i + 1) // 2 for i in range(1, d + 1))


#
# Closed forms
#


def hadamard_closed_form(mu: int) -> float:
    """
    max of the r = 3 and r = 4 bounds: 9(s-1)/(s+1) and 8(s-1)/s with s = sqrt(2 mu)
    """
    s = sqrt(2 * mu)
    return max(9 * (s - 1) / (s + 1), 8 * (s - 1) / s)


def hadamard_counterexample_threshold() -> int:
    """
    The least even mu for which the distance 3 bound strictly beats the distance 4 bound
    """
    mu = 2
    while 9 * sqrt(2 * mu) <= 8 * (sqrt(2 * mu) + 1):
        mu += 2
    return mu


def _taylor_closed_form(k: int, mu: int) -> float:
    z = k - 1 - 2 * mu
    z1 = (z + sqrt(z * z + 4 * k)) / 2
    return 9 * (k - z1) / (2 * k)


def _hexagon_closed_form(s: int, t: int) -> float:
    u = sqrt(s * t)
    return 9 * t * u / ((u + 1) * (t + 1))


def _octagon_closed_form(s: int, t: int) -> float:
    st = s * t
    return 16 * s * t * t * (st - sqrt(2 * st) + 1) / ((t + 1) * (st * st + 1))


def _odd_closed_form(d: int) -> float:
    ell = d // 2
    if d % 2 == 0:
        return d * d * (4 * ell - 2) / (4 * ell * ell + ell - 1)
    return d * d * (4 * ell + 2) / (4 * ell * ell + 7 * ell + 3)


def odd_closed_form_ratio(d: int, r: int) -> float:
    """
    (1 - w_r(theta)) / r^2 for O_{d+1} at its second largest eigenvalue theta = d - 1
    """
    _require(d >= 2 and 1 <= r <= d, "d >= 2 and 1 <= r <= d")
    den = 2 * d * (d * d - 1)
    if r % 2 == 0:
        return (2 * (2 * d * d - 1) / r - (2 * d - 1)) / den
    return (4 * d * d / r - (2 * d + 1) / r**2 - (2 * d - 1)) / den


def hermitian_closed_form_ratio(d: int, q: int, r: int) -> float:
    """
    (1 - w_r(theta)) / r^2 for the Hermitian forms graph at its second largest eigenvalue
    """
    _require(d >= 1 and q >= 2 and 1 <= r <= d, "d >= 1, q >= 2 and 1 <= r <= d")
    num = q ** (2 * d - 1) * (1 - q ** (-2 * r)) + (q - 1) * ((-1) ** r * q ** (-r) - 1)
    return num / ((q ** (2 * d - 1) - q) * (1 - q ** (-2 * d)) * r * r)


def _hermitian_closed_form(d: int, q: int) -> float:
    b = Fraction(-q)
    val = d * d * (b**d + b ** (d - 1) + b + 1) * b ** (d - 1) / ((b**d + b + 1) * q_int(d, -q))
    return float(val)


def _fixed(value: Fraction) -> Callable[[], float]:
    return lambda: float(value)


#
# Registry
#


def _cl(fn: Callable[..., ClassicalParameters]) -> Callable[..., float]:
    return lambda *args: _classical_b_pos(fn(*args))


_FAMILIES: tuple[Family, ...] = (
    Family(id="hamming", title="Hamming graph H(d,q)", params=("d", "q"), valid="d >= 1, q >= 2",
           classical=_hamming, closed_form=lambda d, q: float(d)),
    Family(id="johnson", title="Johnson graph J(n,d)", params=("n", "d"), valid="d >= 1, n >= 2d",
           classical=_johnson, closed_form=lambda n, d: float(d)),
    Family(id="halved-cube", title="Halved n-cube", params=("n",), valid="n >= 4",
           classical=_halved_cube, closed_form=lambda n: float(n // 2)),
    Family(id="doob", title="Doob graph", params=("d",), valid="d >= 2",
           classical=_doob, closed_form=lambda d: float(d)),
    Family(id="grassmann", title="Grassmann graph J_q(n,d)", params=("q", "n", "d"),
           valid="q a prime power, d >= 1, n >= 2d", classical=_grassmann, closed_form=_cl(_grassmann),
           aliases=("twisted-grassmann",)),
    Family(id="bilinear", title="Bilinear forms graph", params=("d", "e", "q"),
           valid="q a prime power, 1 <= d <= e", classical=_bilinear, closed_form=_cl(_bilinear)),
    Family(id="dual-polar", title="Dual polar graph", params=("d", "e", "q"),
           valid="q a prime power, e in {0,1/2,1,3/2,2}, q square if e is a half-integer",
           classical=_dual_polar, closed_form=_cl(_dual_polar), aliases=("pseudo-dm",)),
    Family(id="alternating", title="Alternating forms graph Alt(n,q)", params=("n", "q"),
           valid="q a prime power, n >= 2", classical=_alternating, closed_form=_cl(_alternating),
           aliases=("quadratic",)),
    Family(id="half-dual-polar", title="Half dual polar graph D_{n,n}(q)", params=("n", "q"),
           valid="q a prime power, n >= 4", classical=_half_dual_polar, closed_form=_cl(_half_dual_polar),
           aliases=("symplectic-1or2",)),
    Family(id="gosset", title="Gosset graph E_7(1)", params=(), valid="no parameters",
           classical=_gosset, closed_form=_fixed(Fraction(3))),
    Family(id="e77", title="Exceptional Lie graph E_{7,7}(q)", params=("q",), valid="q a prime power",
           classical=_e77, closed_form=_cl(_e77)),
    Family(id="affine-e6", title="Affine E_6(q) graph", params=("q",), valid="q a prime power",
           classical=_affine_e6, closed_form=_cl(_affine_e6)),
    Family(id="unitary-dual-polar", title="Unitary dual polar graph U(2d,r)", params=("d", "r"),
           valid="r a prime power, d >= 1", classical=_unitary_dual_polar,
           closed_form=_cl(_unitary_dual_polar)),
    Family(id="witt-m24", title="Witt graph M_24", params=(), valid="no parameters",
           classical=_witt_m24, closed_form=_fixed(Fraction(168, 25))),
    Family(id="witt-m23", title="Witt graph M_23", params=(), valid="no parameters",
           classical=_witt_m23, closed_form=_fixed(Fraction(84, 13))),
    Family(id="ternary-golay", title="Extended ternary Golay code graph", params=(), valid="no parameters",
           classical=_ternary_golay, closed_form=_fixed(Fraction(33, 5))),
    Family(id="triality", title="Triality graph 3D_{4,2}(q)", params=("q",), valid="q a prime power",
           classical=_triality, closed_form=lambda q: 9 * q**5 / ((q**3 + 1) * (q**2 + 1))),
    Family(id="hermitian", title="Hermitian forms graph", params=("d", "q"), valid="q a prime power, d >= 1",
           classical=_hermitian, closed_form=_hermitian_closed_form),
    Family(id="hadamard", title="Hadamard graph", params=("mu",), valid="mu = 1 or mu even",
           array=_hadamard, closed_form=hadamard_closed_form),
    Family(id="taylor", title="Taylor graph", params=("k", "mu"), valid="k >= 2, 1 <= mu <= k-1",
           array=_taylor, closed_form=_taylor_closed_form),
    Family(id="hexagon", title="Generalized hexagon point graph", params=("s", "t"),
           valid="s, t >= 2, s <= t^3, t <= s^3", array=_hexagon, closed_form=_hexagon_closed_form),
    Family(id="octagon", title="Generalized octagon point graph", params=("s", "t"),
           valid="s, t >= 2, s <= t^2, t <= s^2", array=_octagon, closed_form=_octagon_closed_form),
    Family(id="odd", title="Odd graph O_{d+1}", params=("d",), valid="d >= 2",
           array=_odd, closed_form=_odd_closed_form),
)  # fmt: skip
_BY_ID: dict[str, Family] = {a: i for i in _FAMILIES for a in (i.id, *i.aliases)}


def list_families() -> list[Family]:
    return sorted(_FAMILIES, key=lambda i: i.id)


def get_family(name: str) -> Family:
    """
    :raises UnknownFamily: if name is neither a family id nor an alias
    """
    if (ret := _BY_ID.get(name)) is None:
        raise UnknownFamily(f"Unknown family {name!r}; known: {listing(sorted(_BY_ID), ',', 'and')}")
    return ret


def parse_param(text: str | Param) -> Param:
    """
    Integers stay integers; other rationals, ex. 1/2, become Fractions
    """
    try:
        ret = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise FamilyParameterError(f"Not a rational number: {text!r}") from e
    return int(ret) if ret.denominator == 1 else ret


def _bind(name: str, params: Sequence[str | Param]) -> tuple[Family, tuple[Param, ...]]:
    fam = get_family(name)
    if len(params) != len(fam.params):
        want = listing(list(fam.params), ",", "and") if fam.params else "no parameters"
        raise FamilyParameterError(f"{fam.id} takes {want}; got {len(params)} value(s)")
    vals = tuple(parse_param(i) for i in params)
    if bad := [p for p, v in zip(fam.params, vals) if isinstance(v, Fraction) and fam.id != "dual-polar"]:
        raise FamilyParameterError(f"{fam.id}: {bad[0]} must be an integer")
    return fam, vals


def classical_parameters(name: str, params: Sequence[str | Param]) -> ClassicalParameters | None:
    """
    :return: The classical parameters of the instance, or None if the family is not given by them
    """
    fam, vals = _bind(name, params)
    return None if fam.classical is None else fam.classical(*vals)


def family_ia(name: str, params: Sequence[str | Param]) -> IntersectionArray:
    """
    The intersection array of a family instance, named like hamming(3,2)
    :raises UnknownFamily: on an unknown name
    :raises FamilyParameterError: on parameters outside the family's validity range
    """
    fam, vals = _bind(name, params)
    tag = f"{fam.id}({','.join(map(str, vals))})"
    if fam.classical is not None:
        return classical_to_ia(fam.classical(*vals), name=tag)
    assert fam.array is not None
    b, c = fam.array(*vals)
    getLogger(_LOG).debug("%s -> b=%s c=%s", tag, b, c)
    return IntersectionArray(b=b, c=c, name=tag)


def closed_form_c2_sq(name: str, params: Sequence[str | Param]) -> float:
    """
    The family's closed-form c_2(G)^2, an evaluation path independent of analyze
    """
    fam, vals = _bind(name, params)
    if fam.classical is not None:
        fam.classical(*vals)
    else:
        assert fam.array is not None
        fam.array(*vals)
    return fam.closed_form(*vals)


def closed_form_row(name: str, params: Sequence[str | Param], source: str) -> ClosedFormRow:
    fam, vals = _bind(name, params)
    return ClosedFormRow(family=fam.id, params=vals, c2_sq=closed_form_c2_sq(name, vals), source=source)
