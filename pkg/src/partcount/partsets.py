"""Sets of allowed parts.

A ``PartSet`` is either a finite set or one of a few infinite families.  Infinite
families are only ever touched through ``elements_up_to``: every coefficient of
degree <= N in the generating functions depends on A ∩ [1, N] alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

KINDS = ("finite", "naturals", "primes", "ppowers", "odds", "complement")


class SetSpecError(ValueError):
    """Malformed or invalid set spec."""


class DomainError(ValueError):
    pass


class UnsupportedSetOperation(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


@dataclass(frozen=True)
class PartSet:
    """Immutable set A of positive integers allowed as parts.

    ``elements`` holds the members for ``finite`` and the excluded base for
    ``complement``; ``p`` is the prime for ``ppowers`` (which includes p**0 = 1).
    """

    kind: str
    elements: tuple[int, ...] = ()
    p: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SetSpecError(f"unknown set kind {self.kind!r}")
        if self.kind in ("finite", "complement"):
            els = self.elements
            if not els:
                raise DomainError(f"{self.kind} set needs a non-empty element list")
            if any(a < 1 for a in els):
                raise DomainError(f"parts must be positive integers, got {els}")
            if any(b <= a for a, b in zip(els, els[1:])):
                raise DomainError(f"elements must be strictly increasing, got {els}")
        elif self.elements:
            raise DomainError(f"{self.kind} takes no element list")
        if self.kind == "ppowers":
            if self.p is None or not is_prime(self.p):
                raise DomainError(f"ppowers needs a prime base, got {self.p}")
        elif self.p is not None:
            raise DomainError(f"{self.kind} takes no prime parameter")

    @classmethod
    def finite(cls, elements) -> PartSet:
        return cls("finite", tuple(sorted(set(elements))))

    @classmethod
    def complement_of(cls, elements) -> PartSet:
        return cls("complement", tuple(sorted(set(elements))))

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self) -> str:
        return to_spec(self)


NATURALS = PartSet("naturals")
PRIMES = PartSet("primes")
ODDS = PartSet("odds")


def ppowers(p: int) -> PartSet:
    return PartSet("ppowers", p=p)


BINARY = ppowers(2)


def _parse_int_list(body: str, text: str) -> tuple[int, ...]:
    if not body:
        raise SetSpecError(f"empty element list in {text!r}")
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise SetSpecError(f"bad element {tok!r} in {text!r}")
        out.append(int(tok))
    return tuple(out)


def parse_set_spec(text: str) -> PartSet:
    """Parse ``finite:1,2 | naturals | primes | ppowers:<p> | odds | complement:finite:...``."""
    text = text.strip()
    head, _, body = text.partition(":")
    if head in ("naturals", "primes", "odds"):
        if body:
            raise SetSpecError(f"unexpected token {body!r} after {head!r}")
        return PartSet(head)
    if head == "ppowers":
        if not body.isdigit():
            raise SetSpecError(f"bad prime token {body!r} in {text!r}")
        p = int(body)
        if not is_prime(p):
            raise SetSpecError(f"ppowers base {p} is not prime")
        return ppowers(p)
    if head == "finite":
        els = _parse_int_list(body, text)
        if 0 in els:
            raise SetSpecError(f"parts must be positive in {text!r}")
        return PartSet.finite(els)
    if head == "complement":
        inner, _, rest = body.partition(":")
        if inner != "finite":
            raise SetSpecError(f"bad token {inner!r}: complement takes a finite base")
        els = _parse_int_list(rest, text)
        if 0 in els:
            raise SetSpecError(f"parts must be positive in {text!r}")
        return PartSet.complement_of(els)
    raise SetSpecError(f"unknown set kind {head!r} in {text!r}")


def to_spec(s: PartSet) -> str:
    if s.kind == "finite":
        return "finite:" + ",".join(map(str, s.elements))
    if s.kind == "complement":
        return "complement:finite:" + ",".join(map(str, s.elements))
    if s.kind == "ppowers":
        return f"ppowers:{s.p}"
    return s.kind


def elements_up_to(s: PartSet, N: int) -> list[int]:
    """Members of A that are <= N, ascending."""
    if s.kind == "finite":
        return [a for a in s.elements if a <= N]
    if s.kind == "naturals":
        return list(range(1, N + 1))
    if s.kind == "odds":
        return list(range(1, N + 1, 2))
    if s.kind == "primes":
        return _primes_up_to(N)
    if s.kind == "ppowers":
        out, a = [], 1
        while a <= N:
            out.append(a)
            a *= s.p
        return out
    excluded = set(s.elements)
    return [a for a in range(1, N + 1) if a not in excluded]


def complement_up_to(s: PartSet, N: int) -> list[int]:
    """Members of ℕ∖A that are <= N."""
    if s.kind == "complement":
        return [a for a in s.elements if a <= N]
    if s.kind == "naturals":
        return []
    members = set(elements_up_to(s, N))
    return [a for a in range(1, N + 1) if a not in members]


def contains(s: PartSet, a: int) -> bool:
    if a < 1:
        return False
    kind = s.kind
    if kind == "finite":
        return a in s.elements
    if kind == "naturals":
        return True
    if kind == "odds":
        return a % 2 == 1
    if kind == "primes":
        return is_prime(a)
    if kind == "ppowers":
        while a % s.p == 0:
            a //= s.p
        return a == 1
    return a not in s.elements


def remove_element(s: PartSet, b: int) -> PartSet:
    """A∖{b}, for the kinds where the result is still representable."""
    if not contains(s, b):
        raise DomainError(f"{b} is not a member of {s}")
    if s.kind == "finite":
        rest = tuple(a for a in s.elements if a != b)
        if not rest:
            raise DomainError(f"removing {b} from {s} leaves the empty set")
        return PartSet("finite", rest)
    if s.kind == "naturals":
        return PartSet.complement_of((b,))
    if s.kind == "complement":
        return PartSet.complement_of(s.elements + (b,))
    raise UnsupportedSetOperation(f"cannot remove an element from {s}")


def parts_without(s: PartSet, b: int, N: int) -> list[int]:
    """Elements of A∖{b} up to N; works for every kind via truncation."""
    try:
        return elements_up_to(remove_element(s, b), N)
    except UnsupportedSetOperation:
        return [a for a in elements_up_to(s, N) if a != b]
    except DomainError:
        if not contains(s, b):
            raise
        return []  # A = {b}
