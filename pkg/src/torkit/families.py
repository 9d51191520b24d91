"""The four T(n,2) invariant families and the substitutions between them.

Each family starts from its defining crossing relationship

    c_plus * P(+) + c_minus * P(-) = c_zero * P(0)

which rearranges (divide by the single-term c_plus) into the step form
P(+) = l1 P(0) + l2 P(-) with l1 = c_zero / c_plus and l2 = -c_minus / c_plus.
For the torus braids T(n,2) that step is exactly P(n+1) = l1 P(n) +
l2 P(n-1), and composing it once gives the knot-only pair (k1, k2).

Family data, with m = (n-1)/2 for odd n:

    alexander              t        l1 = t^(1/2) - t^(-1/2)   l2 = 1
                                    closed form [m+1]_t - [m]_t
    generalized-alexander  q, p     l1 = q^(1/2) - p^(1/2)    l2 = (qp)^(1/2)
                                    closed form [m+1]_{q,p} - qp [m]_{q,p}
    jones                  t        l1 = t^(3/2) - t^(1/2)    l2 = t^2
                                    closed form [m+1]_{t^3,t} - t^4 [m]_{t^3,t}
    homfly                 a, z     l1 = a z                  l2 = a^2

Note on the alexander step: with l2 = 1 and k1 = t + t^(-1), only
l1 = +/-(t^(1/2) - t^(-1/2)) satisfies l1^2 + 2 l2 = k1; the superficially
similar sum t^(1/2) + t^(-1/2) squares to t + 2 + t^(-1) and overshoots k1
by 4.  The difference form is therefore the only consistent choice, and the
canonical-positive sign convention picks the leading coefficient +1.

The generalized invariant reduces to alexander under p -> q^(-1) (the
surviving variable is written t here, t and q being the same axis) and to
jones under (q, p) -> (t^3, t).  The homfly invariant maps onto the
generalized one under a -> (qp)^(1/4), z -> (qp)^(-1/4) (q - p) expressed as
q^(1/4) p^(-1/4) - q^(-1/4) p^(1/4).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .laurent import (
    ContextMismatch,
    LaurentPoly,
    Monomial,
    QuarterExp,
    TorkitError,
    VarContext,
    parse,
)
from .qnumbers import jones_number, q_number, qp_number
from .skein import KnotStepPair, SkeinPair, gen_odd_sequence, l_to_k


class EvenIndexUnsupported(TorkitError):
    """T(n,2) with even n is a link, whose n=2 base value no family supplies."""


T_CTX = VarContext(("t",))
QP_CTX = VarContext(("q", "p"))
AZ_CTX = VarContext(("a", "z"))


@dataclass(frozen=True)
class FamilySpec:
    """Everything one invariant family carries.

    skein_form holds (c_plus, c_minus, c_zero) of the defining relationship;
    skein and knot_step are derived from it.  closed_form, when present, maps
    m to the T(2m+1,2) value.  hopf, when present, is the n=2 torus-link
    value consistent with the knot values (the generalized family has none:
    l1 * base2 = l1^2 + l2 - l2^2 has no Laurent-polynomial solution there).
    """

    name: str
    context: VarContext
    skein_form: tuple[LaurentPoly, LaurentPoly, LaurentPoly]
    skein: SkeinPair
    knot_step: KnotStepPair
    closed_form: Optional[Callable[[int], LaurentPoly]] = None
    hopf: Optional[LaurentPoly] = None


def _invert_monomial(m: Monomial) -> Monomial:
    if m.coeff not in (1, -1):
        raise ValueError("only +/-1 monomials invert exactly")
    return Monomial(tuple(QuarterExp(-e.quarters) for e in m.exps), m.coeff)


def _build_family(
    name: str,
    context: VarContext,
    c_plus: str,
    c_minus: str,
    c_zero: str,
    closed_form: Optional[Callable[[int], LaurentPoly]] = None,
    hopf: Optional[str] = None,
) -> FamilySpec:
    plus = parse(c_plus, context)
    minus = parse(c_minus, context)
    zero = parse(c_zero, context)
    # Rearrange c_plus*P(+) + c_minus*P(-) = c_zero*P(0) into
    # P(+) = l1*P(0) + l2*P(-):  l1 = c_zero/c_plus, l2 = -c_minus/c_plus.
    # c_plus is a single +/-1 monomial in every family, so the division is
    # an exact monomial inverse (for jones, c_plus = t^(-1), this is the
    # multiply-through-by-t step).
    inv = LaurentPoly.from_monomial(context, _invert_monomial(plus.leading_monomial()))
    pair = SkeinPair(zero * inv, -(minus * inv))
    return FamilySpec(
        name=name,
        context=context,
        skein_form=(plus, minus, zero),
        skein=pair,
        knot_step=l_to_k(pair),
        closed_form=closed_form,
        hopf=parse(hopf, context) if hopf else None,
    )


_QP = parse("q*p", QP_CTX)
_T4 = parse("t^4", T_CTX)


def _alexander_closed(m: int) -> LaurentPoly:
    return q_number(m + 1, "t") - q_number(m, "t")


def _generalized_closed(m: int) -> LaurentPoly:
    return qp_number(m + 1) - _QP * qp_number(m)


def _jones_closed(m: int) -> LaurentPoly:
    return jones_number(m + 1) - _T4 * jones_number(m)


ALEXANDER = _build_family(
    "alexander",
    T_CTX,
    c_plus="1",
    c_minus="-1",
    c_zero="t^(1/2) - t^(-1/2)",
    closed_form=_alexander_closed,
    hopf="t^(1/2) - t^(-1/2)",
)

GENERALIZED_ALEXANDER = _build_family(
    "generalized-alexander",
    QP_CTX,
    c_plus="1",
    c_minus="-q^(1/2)*p^(1/2)",
    c_zero="q^(1/2) - p^(1/2)",
    closed_form=_generalized_closed,
    hopf=None,
)

JONES = _build_family(
    "jones",
    T_CTX,
    c_plus="t^(-1)",
    c_minus="-t",
    c_zero="t^(1/2) - t^(-1/2)",
    closed_form=_jones_closed,
    hopf="-t^(1/2) - t^(5/2)",
)

HOMFLY = _build_family(
    "homfly",
    AZ_CTX,
    c_plus="a^(-1)",
    c_minus="-a",
    c_zero="z",
    closed_form=None,
    hopf="a*z + a*z^(-1) - a^3*z^(-1)",
)

FAMILIES: dict[str, FamilySpec] = {
    spec.name: spec for spec in (ALEXANDER, GENERALIZED_ALEXANDER, JONES, HOMFLY)
}


def _check_odd_index(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"torus index must be a positive integer, got {n!r}")
    if n % 2 == 0:
        raise EvenIndexUnsupported(
            f"T({n},2) is a two-component link; no n=2 base value is defined, "
            "so even indices need a caller-supplied gen_full_sequence"
        )
    return (n - 1) // 2


def alexander_torus(n: int) -> LaurentPoly:
    """Alexander value of T(n,2), odd n: [m+1]_t - [m]_t with m = (n-1)/2."""
    m = _check_odd_index(n)
    return _alexander_closed(m)


def generalized_alexander_torus(n: int) -> LaurentPoly:
    """Generalized Alexander value of T(n,2), odd n: [m+1]_{q,p} - qp [m]_{q,p}."""
    m = _check_odd_index(n)
    return _generalized_closed(m)


def jones_torus(n: int) -> LaurentPoly:
    """Jones value of T(n,2), odd n, generated by the knot-only recurrence."""
    _check_odd_index(n)
    return gen_odd_sequence(JONES.knot_step, n, "jones").entry(n)


def homfly_torus(n: int) -> LaurentPoly:
    """Homfly value of T(n,2), odd n, generated by the knot-only recurrence."""
    _check_odd_index(n)
    return gen_odd_sequence(HOMFLY.knot_step, n, "homfly").entry(n)


def torus_invariant(family: str, n: int) -> LaurentPoly:
    """Dispatch by family name as used by the command-line interface."""
    builders = {
        "alexander": alexander_torus,
        "generalized-alexander": generalized_alexander_torus,
        "jones": jones_torus,
        "homfly": homfly_torus,
    }
    if family not in builders:
        raise KeyError(f"unknown family {family!r}; choose from {sorted(builders)}")
    return builders[family](n)


def _require_context(f: LaurentPoly, context: VarContext, what: str) -> None:
    if f.context != context:
        raise ContextMismatch(f"{what} expects variables {context.names}, got {f.context.names}")


def to_alexander(f: LaurentPoly) -> LaurentPoly:
    """Specialize p -> q^(-1); the surviving axis is written t."""
    _require_context(f, QP_CTX, "to_alexander")
    return f.substitute_monomial(T_CTX, {"q": "t", "p": "t^(-1)"})


def to_jones(f: LaurentPoly) -> LaurentPoly:
    """Specialize (q, p) -> (t^3, t)."""
    _require_context(f, QP_CTX, "to_jones")
    return f.substitute_monomial(T_CTX, {"q": "t^3", "p": "t"})


def homfly_to_generalized(f: LaurentPoly) -> LaurentPoly:
    """Substitute a -> (qp)^(1/4) and z -> q^(1/4) p^(-1/4) - q^(-1/4) p^(1/4).

    z is replaced by a genuine two-term polynomial, so f must carry only
    nonnegative powers of z; torus-knot homfly values do.
    """
    _require_context(f, AZ_CTX, "homfly_to_generalized")
    return f.substitute_poly(
        QP_CTX,
        {
            "a": "q^(1/4)*p^(1/4)",
            "z": "q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)",
        },
    )
