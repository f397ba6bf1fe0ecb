"""Congruence families of the partition counts, checked by sweep.

The classical Ramanujan congruences

    p(5n+4) = 0 (mod 5),  p(7n+5) = 0 (mod 7),  p(11n+6) = 0 (mod 11)

propagate to the restricted counts.  Writing (m, b) for the modulus and
progression offset, and using that p is the running sum of nu:

  * nu window: the m consecutive values nu(mn+b-m+1) .. nu(mn+b) sum to
    p(mn+b) - p(m(n-1)+b), so the window sum is 0 mod m for n >= 1.
    For m = 5 this window is exactly nu(5n) .. nu(5n+4); shorter windows
    quoted for 7 and 11 fail numerically (for example nu(7)+...+nu(12) =
    66, not divisible by 7) and are not used here.
  * no-part-m progression: nu_m(mn+b) = p(mn+b) - p(m(n-1)+b) = 0 mod m
    for n >= 1.
  * weighted gamma: expanding each nu in the window through the gamma
    recursion nu(j) = nu(j-1) + gamma(j) gives, with s = mn+b-m+1,
        sum_{t=1..m-1} t * gamma(s+t) = 0 (mod m)   for n >= 1,
    which for m = 5 reads gamma(5n+1) + 2 gamma(5n+2) + 3 gamma(5n+3)
    + 4 gamma(5n+4).  At n = 0 the mod-5 sum is 4, so the family starts
    at n = 1.

All derived families therefore use start_n = 1; the Ramanujan families
themselves start at n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import CountTable, nu_k, pentagonal_offsets

RAMANUJAN_PROGRESSIONS: dict[int, tuple[int, int]] = {5: (5, 4), 7: (7, 5), 11: (11, 6)}


@dataclass(frozen=True)
class CongruenceFamily:
    """One congruence family: arguments a*n + b checked modulo ``modulus``."""

    family_id: str
    modulus: int
    progression: tuple[int, int]
    start_n: int


@dataclass
class CongruenceReport:
    """Sweep outcome: empty violations iff the family held on the range."""

    family: CongruenceFamily
    range_checked: tuple[int, int]
    violations: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return not self.violations


def p_mod_m_table(limit: int, modulus: int) -> list[int]:
    """Residues p(n) mod ``modulus`` for n = 0..limit.

    Same pentagonal recurrence as the exact table, run entirely in
    modular arithmetic so sweeps can go far beyond big-integer range.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    offsets = pentagonal_offsets(limit)
    p = [0] * (limit + 1)
    p[0] = 1 % modulus
    for n in range(1, limit + 1):
        acc = 0
        for g, sign in offsets:
            if g > n:
                break
            if sign > 0:
                acc += p[n - g]
            else:
                acc -= p[n - g]
        p[n] = acc % modulus
    return p


def _known_progression(modulus: int) -> tuple[int, int]:
    if modulus not in RAMANUJAN_PROGRESSIONS:
        raise ValueError(f"modulus must be one of {sorted(RAMANUJAN_PROGRESSIONS)}, got {modulus}")
    return RAMANUJAN_PROGRESSIONS[modulus]


def check_progression(a: int, b: int, modulus: int, limit_n: int, *,
                      residues: list[int] | None = None,
                      family_id: str = "custom", start_n: int = 0) -> CongruenceReport:
    """Check p(a*n + b) = 0 (mod modulus) for n = start_n..limit_n."""
    if a < 1 or b < 0:
        raise ValueError(f"progression must have a >= 1 and b >= 0, got ({a}, {b})")
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    top = a * limit_n + b
    if residues is None:
        residues = p_mod_m_table(top, modulus)
    elif len(residues) <= top:
        raise ValueError(f"residue table too short: need index {top}, have {len(residues) - 1}")
    family = CongruenceFamily(family_id, modulus, (a, b), start_n)
    violations = []
    for n in range(start_n, limit_n + 1):
        r = residues[a * n + b] % modulus
        if r:
            violations.append((n, r))
    return CongruenceReport(family, (start_n, limit_n), violations)


def check_ramanujan(modulus: int, limit_n: int, *, residues: list[int] | None = None) -> CongruenceReport:
    """Check the Ramanujan progression for modulus 5, 7 or 11 up to n = limit_n."""
    a, b = _known_progression(modulus)
    return check_progression(a, b, modulus, limit_n, residues=residues, family_id="ramanujan")


def _require_exact(table: CountTable, needed: int, what: str) -> None:
    if needed > table.limit:
        raise ValueError(f"{what} needs exact values up to {needed}, table stops at {table.limit}")


def check_nu_window(modulus: int, limit_n: int, table: CountTable) -> CongruenceReport:
    """Check the m-term nu window ending at m*n+b, for n = 1..limit_n."""
    m = modulus
    a, b = _known_progression(m)
    _require_exact(table, a * limit_n + b, "nu window")
    family = CongruenceFamily("nu_window", m, (a, b), 1)
    violations = []
    for n in range(1, limit_n + 1):
        end = a * n + b
        r = sum(table.nu[end - m + 1 : end + 1]) % m
        if r:
            violations.append((n, r))
    return CongruenceReport(family, (1, limit_n), violations)


def check_nu_k_progression(modulus: int, limit_n: int, table: CountTable) -> CongruenceReport:
    """Check nu_m(m*n+b) = 0 (mod m) for n = 1..limit_n."""
    m = modulus
    a, b = _known_progression(m)
    _require_exact(table, a * limit_n + b, "nu_k progression")
    family = CongruenceFamily("nu_k_progression", m, (a, b), 1)
    violations = []
    for n in range(1, limit_n + 1):
        r = nu_k(a * n + b, m, table) % m
        if r:
            violations.append((n, r))
    return CongruenceReport(family, (1, limit_n), violations)


def check_gamma_weighted(modulus: int, limit_n: int, table: CountTable) -> CongruenceReport:
    """Check sum_{t=1..m-1} t * gamma(s+t) = 0 (mod m), s = m*n+b-m+1, n >= 1."""
    m = modulus
    a, b = _known_progression(m)
    _require_exact(table, a * limit_n + b, "weighted gamma")
    family = CongruenceFamily("gamma_weighted", m, (a, b), 1)
    violations = []
    for n in range(1, limit_n + 1):
        s = a * n + b - m + 1
        r = sum(t * table.gamma[s + t] for t in range(1, m)) % m
        if r:
            violations.append((n, r))
    return CongruenceReport(family, (1, limit_n), violations)


def parity_via_gamma(n: int, table: CountTable) -> int:
    """Parity of p(n) for even n >= 4, as sum of gamma over even 4..n, mod 2.

    The weighted-gamma expansion of p(n) reduces mod 2 to this sum when n
    is even; odd n is rejected.
    """
    if n % 2 or n < 4:
        raise ValueError(f"the gamma parity sum is defined for even n >= 4, got {n}")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds the table limit {table.limit}")
    return sum(table.gamma[4 : n + 1 : 2]) % 2
