"""Eta quotients, the membership criterion, and exhaustive cusp-form search.

An eta quotient at level N is a finite product prod_{delta | N}
eta(delta*z)^{r_delta}.  It lies in the weight-k modular (resp. cusp) space
for the level-N Hecke congruence subgroup when

  (i)    sum delta * r_delta == 0 (mod 24),
  (ii)   prod delta^{r_delta} is a square in Q,
  (iii)  0 < sum r_delta == 0 (mod 4),  with k = (1/2) sum r_delta,
  (iv)   for every d | N: sum_delta gcd(delta, d)^2 * r_delta / delta >= 0
         (strictly > 0 at every d for a cusp form).

`ligozat_check` evaluates exactly these conditions.  The classical
statement carries one more congruence, sum (N/delta) * r_delta == 0
(mod 24); it is exposed separately as `dual_congruence` and enforced by
the search only when strict=True (candidates are then certified members
of the level-N space, which basis repair relies on).

The exhaustive search walks exponent vectors depth-first.  All pruning is
driven by the integer cusp sums S_d = sum gcd(d, delta)^2 * (N/delta) *
r_delta (so S_d > 0 is the cusp condition at d, and S_N = 24*N*order at
infinity) together with the valence identity

    sum_{d | N} phi(g_d)/(g_d * d) * S_d = 2 * k2 * mu(N),   g_d = gcd(d, N/d),

which bounds every S_d above once all are positive.  Per-depth bounds on
the achievable suffix of each S_d are exact maxima/minima of a weighted
sum subject to the remaining exponent-sum budget (an assignment bound,
much tighter than +-bound * sum of weights).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import divisors, euler_phi, factorize, index_mu, prime_factors
from .qseries import QSeries, eta_quotient_series


@dataclass(frozen=True)
class EtaQuotient:
    """Level plus exponent map delta -> r_delta (absent divisors are 0)."""

    level: int
    exponents: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for d, _ in self.exponents:
            if self.level % d != 0:
                raise ValueError(f"exponent key {d} does not divide level {self.level}")

    @staticmethod
    def make(level: int, exponents: dict[int, int]) -> "EtaQuotient":
        cleaned = tuple(sorted((d, r) for d, r in exponents.items() if r != 0))
        return EtaQuotient(level, cleaned)

    @property
    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.exponents), 2)

    def vector(self) -> tuple[int, ...]:
        m = self.exponent_map
        return tuple(m.get(d, 0) for d in divisors(self.level))

    def series(self, T: int) -> QSeries:
        return eta_quotient_series(self.exponent_map, T)

    def substitute(self, t: int, level: int | None = None) -> "EtaQuotient":
        """q -> q^t image: eta(delta z) -> eta(t*delta z), level multiplied by t."""
        new_level = level if level is not None else self.level * t
        return EtaQuotient.make(new_level, {d * t: r for d, r in self.exponents})

    def at_level(self, level: int) -> "EtaQuotient":
        """Same quotient viewed at a multiple of its level."""
        if level % self.level != 0:
            raise ValueError(f"{level} is not a multiple of level {self.level}")
        return EtaQuotient.make(level, self.exponent_map)

    def label(self) -> str:
        parts = []
        for d, r in self.exponents:
            parts.append(f"eta({d}z)^{r}" if r != 1 else f"eta({d}z)")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class LigozatReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    orders: dict[int, Fraction] = field(compare=False)
    is_modular: bool = False
    is_cusp: bool = False
    weight: Fraction = Fraction(0)
    order_at_infinity: int | None = None


def ligozat_check(e: EtaQuotient) -> LigozatReport:
    """Evaluate conditions (i)-(iv') exactly; orders kept un-normalized."""
    N = e.level
    exps = e.exponent_map
    s24 = sum(d * r for d, r in exps.items())
    cond_i = s24 % 24 == 0
    cond_ii = _is_square_product(exps)
    ssum = sum(exps.values())
    cond_iii = ssum > 0 and ssum % 4 == 0
    orders = {
        d: sum(Fraction(gcd(d, delta) ** 2 * r, delta) for delta, r in exps.items())
        for d in divisors(N)
    }
    modular = cond_i and cond_ii and cond_iii and all(v >= 0 for v in orders.values())
    cusp = cond_i and cond_ii and cond_iii and all(v > 0 for v in orders.values())
    ord_inf = s24 // 24 if cond_i else None
    return LigozatReport(
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        orders=orders,
        is_modular=modular,
        is_cusp=cusp,
        weight=e.weight,
        order_at_infinity=ord_inf,
    )


def _is_square_product(exps: dict[int, int]) -> bool:
    # prod delta^{r_delta} is a rational square iff every prime valuation is even
    vals: dict[int, int] = {}
    for d, r in exps.items():
        for p, k in factorize(d):
            vals[p] = vals.get(p, 0) + r * k
    return all(v % 2 == 0 for v in vals.values())


def is_square_product_by_value(exps: dict[int, int]) -> bool:
    """Independent check of condition (ii): build the rational and test squares."""
    from math import isqrt

    num = den = 1
    for d, r in exps.items():
        if r >= 0:
            num *= d**r
        else:
            den *= d ** (-r)
    g = gcd(num, den)
    num //= g
    den //= g
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def dual_congruence(e: EtaQuotient) -> bool:
    """Classical companion congruence sum (N/delta)*r_delta == 0 (mod 24)."""
    N = e.level
    return sum((N // d) * r for d, r in e.exponents) % 24 == 0


def order_at_infinity(e: EtaQuotient) -> int:
    s24 = sum(d * r for d, r in e.exponents)
    if s24 % 24 != 0:
        raise ValueError("order at infinity is not integral (condition (i) fails)")
    return s24 // 24


# --- exhaustive search -----------------------------------------------------


def _dot_bounds(weights: list[int], B: int, t: int):
    """(min, max) of sum w_j r_j over |r_j| <= B with sum r_j = t; None if infeasible."""
    m = len(weights)
    if m == 0:
        return (0, 0) if t == 0 else None
    if abs(t) > m * B:
        return None
    ws = sorted(weights, reverse=True)
    wa = ws[::-1]
    best = worst = None
    for p in range(m):
        x = t - p * B + (m - 1 - p) * B
        if -B <= x <= B:
            hi = B * sum(ws[:p]) + x * ws[p] - B * sum(ws[p + 1 :])
            lo = B * sum(wa[:p]) + x * wa[p] - B * sum(wa[p + 1 :])
            best = hi if best is None else max(best, hi)
            worst = lo if worst is None else min(worst, lo)
    return (worst, best)


def _search_ctx(N: int, k2: int, B: int, max_order: int):
    divs = divisors(N)
    nd = len(divs)
    proc = sorted(divs, reverse=True)
    if proc[-1] != 1:
        proc.remove(1)
        proc.append(1)
    w = [[gcd(c, d) ** 2 * (N // d) for d in proc] for c in divs]
    mu = index_mu(N)
    coefs = [
        Fraction(euler_phi(gcd(c, N // c)), gcd(c, N // c) * c) for c in divs
    ]
    tot = 2 * k2 * mu
    caps = []
    for i in range(nd):
        rest = sum(coefs[j] for j in range(nd) if j != i)
        caps.append(int(Fraction(tot - rest) / coefs[i]))
    iN = divs.index(N)
    caps[iN] = min(caps[iN], 24 * N * max_order)
    off = nd * B
    bounds = []
    for i in range(nd + 1):
        row = []
        for t in range(-off, off + 1):
            if abs(t) > (nd - i) * B:
                row.append(None)
            else:
                row.append([_dot_bounds(w[ci][i:], B, t) for ci in range(nd)])
        bounds.append(row)
    order_at = [sorted(range(nd), key=lambda ci: -w[ci][i]) for i in range(nd)]
    pf = prime_factors(N)
    vp = {p: [0] * nd for p in pf}
    for p in pf:
        for i, d in enumerate(proc):
            t = d
            while t % p == 0:
                vp[p][i] += 1
                t //= p
    return divs, proc, w, caps, iN, off, bounds, order_at, pf, vp


def _crt_merge(a1, m1, a2, m2):
    g = gcd(m1, m2)
    if (a2 - a1) % g:
        return None
    l = m1 // g * m2
    t = ((a2 - a1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return ((a1 + m1 * t) % l, l)


def _search_range(N, k2, B, max_order, strict, first_values=None):
    """DFS over exponent vectors; first_values restricts the top-level branch."""
    divs, proc, w, caps, iN, off, bounds, order_at, pf, vp = _search_ctx(
        N, k2, B, max_order
    )
    nd = len(divs)
    SNlo, SNhi = 24 * N, 24 * N * max_order
    halfN = [N // d for d in proc]
    out = []
    S = [0] * nd
    path = [0] * nd

    def final_check(i, r):
        path[i] = r
        for p in pf:
            if sum(path[j] * vp[p][j] for j in range(nd)) % 2:
                return
        if strict and sum(halfN[j] * path[j] for j in range(nd)) % 24:
            return
        out.append({proc[j]: path[j] for j in range(nd) if path[j]})

    def two_left(i, sr):
        d = proc[i]
        t = k2 - sr
        lo = max(-B, t - B)
        hi = min(B, t + B)
        if lo > hi:
            return
        for ci in range(nd):
            a = w[ci][i] - w[ci][i + 1]
            base = S[ci] + w[ci][i + 1] * t
            if a == 0:
                if not (1 <= base <= caps[ci]):
                    return
            elif a > 0:
                lo = max(lo, -((base - 1) // a))
                hi = min(hi, (caps[ci] - base) // a)
            else:
                lo = max(lo, -((caps[ci] - base) // -a))
                hi = min(hi, (base - 1) // -a)
            if lo > hi:
                return
        cur = S[iN] // N
        a = (d - 1) % 24
        b = (-(cur + t)) % 24
        if a == 0:
            if b % 24:
                return
            sol = (0, 1)
        else:
            g = gcd(a, 24)
            if b % g:
                return
            step = 24 // g
            r0 = next((x for x in range(24) if (a * x) % 24 == b), None)
            if r0 is None:
                return
            sol = (r0 % step, step)
        if strict:
            cur2 = sum(halfN[j] * path[j] for j in range(i))
            a2 = (halfN[i] - halfN[i + 1]) % 24
            b2 = (-(cur2 + halfN[i + 1] * t)) % 24
            if a2 == 0:
                if b2 % 24:
                    return
            else:
                g2 = gcd(a2, 24)
                if b2 % g2:
                    return
                step2 = 24 // g2
                r02 = next((x for x in range(24) if (a2 * x) % 24 == b2), None)
                if r02 is None:
                    return
                merged = _crt_merge(sol[0], sol[1], r02 % step2, step2)
                if merged is None:
                    return
                sol = merged
        r0, step = sol
        start = lo + ((r0 - lo) % step)
        for r in range(start, hi + 1, step):
            SN = S[iN] + w[iN][i] * r + w[iN][i + 1] * (t - r)
            if not (SNlo <= SN <= SNhi) or SN % (24 * N):
                continue
            ok = True
            for ci in range(nd):
                v = S[ci] + w[ci][i] * r + w[ci][i + 1] * (t - r)
                if v <= 0 or v > caps[ci]:
                    ok = False
                    break
            if ok:
                path[i] = r
                final_check(i + 1, t - r)

    def dfs(i, sr):
        if i == nd - 2:
            two_left(i, sr)
            return
        values = first_values if (i == 0 and first_values is not None) else range(-B, B + 1)
        bnds = bounds[i + 1]
        oi = order_at[i]
        for r in values:
            t = k2 - sr - r
            if abs(t) > off:
                continue
            brow = bnds[t + off]
            if brow is None:
                continue
            ok = True
            for ci in oi:
                bb = brow[ci]
                v = S[ci] + r * w[ci][i]
                if v + bb[1] <= 0 or v + bb[0] > caps[ci]:
                    ok = False
                    break
            if ok:
                bb = brow[iN]
                v = S[iN] + r * w[iN][i]
                if v + bb[0] > SNhi or v + bb[1] < SNlo:
                    ok = False
            if ok:
                for ci in range(nd):
                    S[ci] += r * w[ci][i]
                path[i] = r
                dfs(i + 1, sr + r)
                for ci in range(nd):
                    S[ci] -= r * w[ci][i]

    if nd == 1:
        r = k2
        S0 = r * w[0][0]
        if abs(r) <= B and 0 < S0 <= caps[0] and S0 % 24 == 0 and SNlo <= S0 <= SNhi:
            final_check(0, r)
    elif nd == 2:
        two_left(0, 0)
    else:
        dfs(0, 0)
    return out


def _search_worker(args):
    N, k2, B, max_order, strict, first = args
    return _search_range(N, k2, B, max_order, strict, first_values=[first])


def search_cusp_forms(
    N: int,
    weight_times_two: int = 8,
    bound: int = 10,
    max_order: int | None = None,
    strict: bool = False,
    jobs: int = 1,
) -> list[EtaQuotient]:
    """All cusp eta quotients at level N with |r_delta| <= bound.

    weight_times_two = sum r_delta (8 for weight 4, 4 for weight 2); results
    are restricted to order at infinity <= max_order (default: the valence
    cap) and returned sorted lexicographically by exponent vector over
    ascending divisors, so output is reproducible regardless of jobs.
    """
    if bound < 1 or N < 1:
        raise ValueError("search_cusp_forms: N and bound must be >= 1")
    if max_order is None:
        max_order = (weight_times_two * index_mu(N)) // 12
    if max_order < 1:
        return []
    nd = len(divisors(N))
    if jobs > 1 and nd > 2:
        tasks = [
            (N, weight_times_two, bound, max_order, strict, r)
            for r in range(-bound, bound + 1)
        ]
        vecs = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_search_worker, tasks):
                vecs.extend(part)
    else:
        vecs = _search_range(N, weight_times_two, bound, max_order, strict)
    quotients = [EtaQuotient.make(N, e) for e in vecs]
    quotients.sort(key=lambda q: q.vector())
    return quotients
