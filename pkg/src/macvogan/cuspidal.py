"""Cuspidal representations of GL_d(F_q) as Frobenius orbits of characters.

A character of ``F_{q^d}^*`` is an index ``a`` mod ``q^d - 1``; Frobenius
acts by ``a -> q*a``.  Regular characters have orbits of size exactly
``d`` and their orbits label the cuspidal representations of GL_d(F_q).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from sympy import divisors, factorint
from sympy import mobius

from .exceptions import CapacityError, DomainError

WORD_LIMIT = 2**63


@dataclass(frozen=True)
class FieldParams:
    """Residue field size ``q = p**r``."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise DomainError(f"q must be an integer >= 2, got {self.q!r}")
        if len(factorint(self.q)) != 1:
            raise DomainError(f"q={self.q} is not a prime power")

    @property
    def p(self) -> int:
        return next(iter(factorint(self.q)))

    @property
    def r(self) -> int:
        return next(iter(factorint(self.q).values()))

    @property
    def units(self) -> int:
        """Order of ``k_F^*``."""
        return self.q - 1


def _field(F) -> FieldParams:
    return F if isinstance(F, FieldParams) else FieldParams(int(F))


def _modulus(q: int, d: int) -> int:
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    n = q**d - 1
    if n >= WORD_LIMIT:
        raise CapacityError(f"q^d - 1 = {q}^{d} - 1 exceeds the 64-bit capacity bound")
    return n


def frobenius_orbit(a: int, q: int, d: int) -> tuple:
    """The orbit ``{a, qa, q^2 a, ...}`` mod ``q^d - 1``, sorted."""
    n = _modulus(q, d)
    a %= n
    orbit = {a}
    x = a * q % n
    while x != a:
        orbit.add(x)
        x = x * q % n
    return tuple(sorted(orbit))


@dataclass(frozen=True, order=True)
class CuspidalDatum:
    """Cuspidal representation of GL_d(F_q), stored by minimal orbit element.

    Instances compare by ``(d, orbit)``; build them with :meth:`from_index`
    unless the index is already canonical.
    """

    d: int
    orbit: int
    q: int

    def __post_init__(self):
        orb = frobenius_orbit(self.orbit, self.q, self.d)
        if len(orb) != self.d:
            raise DomainError(
                f"character {self.orbit} mod {self.q}^{self.d}-1 is not regular "
                f"(orbit size {len(orb)})"
            )
        if orb[0] != self.orbit:
            raise DomainError(f"{self.orbit} is not the minimal element of its orbit {orb}")

    @classmethod
    def from_index(cls, a: int, q: int, d: int) -> "CuspidalDatum":
        return cls(d, frobenius_orbit(a, q, d)[0], q)

    @classmethod
    def trivial(cls, q: int) -> "CuspidalDatum":
        """The trivial character of GL_1(F_q)."""
        return cls(1, 0, q)

    @property
    def modulus(self) -> int:
        return self.q**self.d - 1

    def orbit_elements(self) -> tuple:
        return frobenius_orbit(self.orbit, self.q, self.d)

    def twist(self, b: int) -> "CuspidalDatum":
        return twist_cuspidal(self, ResidueCharacter(b, self.q))

    def __str__(self):
        return f"[{self.orbit}]_{self.d}"


@dataclass(frozen=True)
class ResidueCharacter:
    """Character ``b`` of ``k_F^*`` (an index mod ``q - 1``)."""

    b: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "b", self.b % (self.q - 1))

    def inverse(self) -> "ResidueCharacter":
        return ResidueCharacter(-self.b, self.q)


def twist_cuspidal(tau: CuspidalDatum, chi) -> CuspidalDatum:
    """Tensor a cuspidal with ``chi o det``.

    The dual of the norm ``F_{q^d}^* -> F_q^*`` multiplies indices by
    ``(q^d - 1)/(q - 1)``, so the orbit of ``a`` moves to the orbit of
    ``a + b (q^d - 1)/(q - 1)``.
    """
    b = chi.b if isinstance(chi, ResidueCharacter) else int(chi)
    q, d = tau.q, tau.d
    if isinstance(chi, ResidueCharacter) and chi.q != q:
        raise DomainError("character and cuspidal live over different fields")
    b %= q - 1
    if b == 0:
        return tau
    n = tau.modulus
    return CuspidalDatum.from_index(tau.orbit + b * (n // (q - 1)), q, d)


@lru_cache(maxsize=None)
def _enumerate(q: int, d: int) -> tuple:
    n = _modulus(q, d)
    if n > 10**7:
        raise CapacityError(f"refusing to enumerate {n} characters of F_{q}^{d}")
    seen = bytearray(n)
    out = []
    for a in range(n):
        if seen[a]:
            continue
        orb = frobenius_orbit(a, q, d)
        for x in orb:
            seen[x] = 1
        if len(orb) == d:
            out.append(CuspidalDatum(d, a, q))
    return tuple(out)


def enumerate_cuspidals(F, d: int) -> list:
    """All cuspidal data of degree ``d`` over ``F``, sorted by orbit representative."""
    F = _field(F)
    return list(_enumerate(F.q, d))


def necklace_count(q: int, d: int) -> int:
    """Number of regular Frobenius orbits of size ``d`` via Moebius inversion."""
    total = sum(mobius(d // e) * (q**e - 1) for e in divisors(d))
    return int(total) // d


def cuspidal_count(F, d: int) -> int:
    F = _field(F)
    n = len(_enumerate(F.q, d))
    assert n == necklace_count(F.q, d), "orbit enumeration disagrees with necklace count"
    return n


def random_cuspidal(F, d: int, rng: random.Random) -> CuspidalDatum:
    """A uniformly random regular index, canonicalized; no enumeration needed."""
    F = _field(F)
    n = _modulus(F.q, d)
    if necklace_count(F.q, d) == 0:
        raise DomainError(f"no cuspidal representations of degree {d} over F_{F.q}")
    while True:
        orb = frobenius_orbit(rng.randrange(n), F.q, d)
        if len(orb) == d:
            return CuspidalDatum(d, orb[0], F.q)
