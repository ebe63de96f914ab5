"""Weight-4 modular form spaces: dimensions, Eisenstein and cusp bases.

Dimension formulas for the trivial character (genus, elliptic point and
cusp counts), the Eisenstein basis {M(q^t) : t | N}, cusp-basis selection
from search candidates, the embedded fixture bases, and `repair_basis`,
which builds a certified cusp basis out of generators that provably lie in
the weight-4 cusp space (strict eta quotients, their substitutions from
sublevels, and weight-2 cusp quotients multiplied by weight-2 Eisenstein
combinations).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from math import gcd

from . import fixtures
from .arith import divisors, euler_phi, index_mu, prime_factors
from .eta import (
    EtaQuotient,
    ligozat_check,
    order_at_infinity,
    search_cusp_forms,
)
from .linalg import rank
from .qseries import QSeries, eisenstein_M, eisenstein_weight2


class BasisIncompleteError(ValueError):
    """Not enough independent cusp generators to reach dim S4."""


@dataclass(frozen=True)
class SpaceProfile:
    level: int
    index_mu: int
    eps2: int
    eps3: int
    cusp_count: int
    genus: int
    dim_E4: int
    dim_S4: int
    dim_M4: int


def profile(N: int) -> SpaceProfile:
    """Dimension data for weight 4 and trivial character at level N."""
    if N < 1:
        raise ValueError("profile: N must be >= 1")
    mu = index_mu(N)
    ps = prime_factors(N)
    if N % 4 == 0:
        eps2 = 0
    else:
        eps2 = 1
        for p in ps:
            if p == 2:
                continue  # factor 1 + chi_{-1}(2) with chi_{-1}(2) = 0
            eps2 *= 1 + (1 if p % 4 == 1 else -1)
    if N % 9 == 0:
        eps3 = 0
    else:
        eps3 = 1
        for p in ps:
            if p == 3:
                continue  # factor 1 + chi_{-3}(3) with chi_{-3}(3) = 0
            eps3 *= 1 + (1 if p % 3 == 1 else -1)
    cusps = sum(euler_phi(gcd(d, N // d)) for d in divisors(N))
    genus12 = 12 + mu - 3 * eps2 - 4 * eps3 - 6 * cusps
    if genus12 % 12 != 0:
        raise ArithmeticError(f"genus formula not integral at N={N}")
    genus = genus12 // 12
    dim_S4 = 3 * (genus - 1) + eps2 + eps3 + cusps
    dim_E4 = cusps
    return SpaceProfile(
        level=N,
        index_mu=mu,
        eps2=eps2,
        eps3=eps3,
        cusp_count=cusps,
        genus=genus,
        dim_E4=dim_E4,
        dim_S4=dim_S4,
        dim_M4=dim_E4 + dim_S4,
    )


def eisenstein_basis(N: int, T: int) -> list[QSeries]:
    """[M(q^t) for t | N], ascending t."""
    return [eisenstein_M(t, T) for t in divisors(N)]


KIND_ETA = "eta-quotient"
KIND_DECLARED = "declared-fixture"
KIND_PRODUCT = "eta-eisenstein-product"


@dataclass(frozen=True)
class CuspGenerator:
    """One cusp-space generator: an eta quotient, optionally times L(q)-t*L(q^t)."""

    kind: str
    eta: EtaQuotient
    e2_scale: int | None = None
    label: str = ""

    def series(self, T: int) -> QSeries:
        s = self.eta.series(T)
        if self.kind == KIND_PRODUCT:
            return s * eisenstein_weight2(self.e2_scale, T)
        return s

    def order(self) -> int:
        # the weight-2 Eisenstein factor has nonzero constant term
        return order_at_infinity(self.eta)

    def describe(self) -> str:
        if self.label:
            return self.label
        base = self.eta.label()
        if self.kind == KIND_PRODUCT:
            return f"{base} * (L(q) - {self.e2_scale} L(q^{self.e2_scale}))"
        return base


def eta_generator(level: int, exponents: dict[int, int], kind: str = KIND_ETA) -> CuspGenerator:
    return CuspGenerator(kind=kind, eta=EtaQuotient.make(level, exponents))


@dataclass
class ModularBasis:
    """Eisenstein degrees plus selected cusp generators, expanded to a precision."""

    level: int
    eisenstein: list[int]
    cusp: list[CuspGenerator]
    precision: int
    eis_series: list[QSeries] = field(repr=False)
    cusp_series: list[QSeries] = field(repr=False)
    defects: list[str] = field(default_factory=list)
    checksum: str = ""

    @property
    def dim_cusp(self) -> int:
        return len(self.cusp)

    def coefficient(self, j: int, n: int):
        """Coefficient of q^n in cusp generator j (0-based)."""
        return self.cusp_series[j].coefficient(n)

    def at_precision(self, T: int) -> "ModularBasis":
        if T <= self.precision:
            return self
        return build_basis(self.level, self.cusp, T, defects=list(self.defects))


def _matrix_checksum(cusp_series: list[QSeries], m: int) -> str:
    rows = []
    for n in range(1, m + 1):
        rows.append(",".join(str(s.coefficient(n)) for s in cusp_series))
    digest = hashlib.sha256("|".join(rows).encode()).hexdigest()
    return f"sha256:{digest[:16]}"


def build_basis(
    N: int,
    generators: list[CuspGenerator],
    T: int,
    defects: list[str] | None = None,
) -> ModularBasis:
    """Expand generators and package them with the Eisenstein block."""
    prof = profile(N)
    eis = divisors(N)
    series = [g.series(T) for g in generators]
    defects = list(defects or [])
    for i, (g, s) in enumerate(zip(generators, series), start=1):
        if s.coefficient(0) != 0:
            defects.append(f"generator {i} ({g.describe()}) has a nonzero constant term")
        if g.kind != KIND_PRODUCT:
            rep = ligozat_check(g.eta)
            if not rep.is_cusp:
                zero_at = [d for d, v in rep.orders.items() if v == 0]
                where = f" (cusp-order sum 0 at d={zero_at})" if zero_at else ""
                defects.append(f"generator {i} ({g.describe()}) is not cuspidal{where}")
    m = len(generators)
    checksum = _matrix_checksum(series, max(m, 1)) if m else "sha256:empty"
    basis = ModularBasis(
        level=N,
        eisenstein=eis,
        cusp=list(generators),
        precision=T,
        eis_series=eisenstein_basis(N, T),
        cusp_series=series,
        defects=defects,
        checksum=checksum,
    )
    if m != prof.dim_S4:
        basis.defects.append(f"{m} cusp generators for dim S4 = {prof.dim_S4}")
    return basis


def select_cusp_basis(
    N: int, candidates: list[CuspGenerator], T: int
) -> ModularBasis:
    """Pick dim S4 independent generators from candidates.

    Case 1: when every order 1..m is represented, take the first candidate
    per order (candidates are sorted by (order, exponent vector)); the
    sample matrix is then triangular with nonzero diagonal.  Case 2: greedy
    extension with an exact rank test after each addition, skipping any
    candidate that does not raise the rank.
    """
    m = profile(N).dim_S4
    if m == 0:
        return build_basis(N, [], T)
    if len(candidates) < m:
        have = sorted({g.order() for g in candidates})
        missing = [o for o in range(1, m + 1) if o not in have]
        raise BasisIncompleteError(
            f"level {N}: {len(candidates)} candidates for dim S4 = {m}; "
            f"orders missing among candidates: {missing}"
        )
    kind_rank = {KIND_ETA: 0, KIND_DECLARED: 1, KIND_PRODUCT: 2}
    ordered = sorted(
        candidates,
        key=lambda g: (g.order(), g.eta.vector(), kind_rank[g.kind], g.e2_scale or 0),
    )
    by_order: dict[int, CuspGenerator] = {}
    for g in ordered:
        by_order.setdefault(g.order(), g)
    if all(o in by_order for o in range(1, m + 1)):
        chosen = [by_order[o] for o in range(1, m + 1)]
        return build_basis(N, chosen, T)
    # Case 2: exact-rank greedy selection over sample rows 1..max(2m, m+8)
    depth = max(2 * m, m + 8)
    Ts = max(T, depth)
    series = [(g, g.series(Ts)) for g in ordered]
    chosen: list[CuspGenerator] = []
    cols: list[list] = []
    for g, s in series:
        if len(chosen) == m:
            break
        col = [s.coefficient(n) for n in range(1, depth + 1)]
        if rank([row + [c] for row, c in zip(_transpose(cols, depth), col)]) > len(chosen):
            chosen.append(g)
            cols.append(col)
    if len(chosen) < m:
        have = sorted({g.order() for g in chosen})
        missing = [o for o in range(1, m + 1) if o not in have]
        raise BasisIncompleteError(
            f"level {N}: only {len(chosen)} independent generators of {m} needed; "
            f"orders not represented: {missing}"
        )
    return build_basis(N, chosen, T)


def _transpose(cols: list[list], depth: int) -> list[list]:
    if not cols:
        return [[] for _ in range(depth)]
    return [[col[i] for col in cols] for i in range(depth)]


def load_fixture_basis(N: int, T: int) -> ModularBasis:
    """The embedded reference basis for a supported level, verbatim.

    Known defects (generators that are provably not cuspidal) are recorded
    on the returned basis; callers decide whether to proceed or repair.
    """
    if N not in fixtures.BASIS_TABLES:
        raise ValueError(f"no fixture basis for level {N} (have {sorted(fixtures.BASIS_TABLES)})")
    declared = fixtures.DECLARED_WEIGHT2.get(N, ())
    gens = []
    for i, exps in enumerate(fixtures.BASIS_TABLES[N], start=1):
        kind = KIND_DECLARED if i in declared else KIND_ETA
        gens.append(eta_generator(N, exps, kind=kind))
    basis = build_basis(N, gens, T)
    for i in declared:
        basis.defects.append(
            f"generator {i} ({gens[i - 1].describe()}) is a declared weight-2 auxiliary"
        )
    return basis


def search_basis(N: int, T: int, bound: int = 10, jobs: int = 1) -> ModularBasis:
    """Basis from the exhaustive search under the membership criterion as
    published (no companion congruence); selection by Case 1 / Case 2."""
    m = profile(N).dim_S4
    cands = [
        CuspGenerator(kind=KIND_ETA, eta=q)
        for q in search_cusp_forms(N, 8, bound, max_order=max(m, 1), jobs=jobs)
    ]
    return select_cusp_basis(N, cands, T)


def repair_candidates(N: int, bound: int = 10, jobs: int = 1) -> list[CuspGenerator]:
    """Certified weight-4 cusp generators at level N.

    Three certified families: (a) strict-condition cusp quotients from
    proper sublevels M | N, pushed up by every substitution q -> q^t with
    t | N/M; (b) weight-2 strict cusp quotients (likewise pushed up)
    multiplied by L(q) - t*L(q^t) for t | N, t > 1; (c) strict quotients at
    N itself.  Families (a)/(b) are cheap and usually suffice; (c) runs the
    full search at N.
    """
    m = max(profile(N).dim_S4, 1)
    out: list[CuspGenerator] = []
    seen: set[tuple] = set()

    def add(gen: CuspGenerator):
        key = (gen.kind, gen.eta.exponents, gen.e2_scale)
        if key not in seen:
            seen.add(key)
            out.append(gen)

    for M in divisors(N):
        if M == 1 or M == N:
            continue
        for q in search_cusp_forms(M, 8, bound, max_order=m, strict=True, jobs=jobs):
            for t in divisors(N // M):
                cand = q.substitute(t, level=N) if t > 1 else q.at_level(N)
                if order_at_infinity(cand) <= m:
                    add(CuspGenerator(kind=KIND_ETA, eta=cand))
    for M in divisors(N):
        if M == 1:
            continue
        for q in search_cusp_forms(M, 4, bound, max_order=m, strict=True, jobs=jobs):
            for s in divisors(N // M):
                base = q.substitute(s, level=N) if s > 1 else q.at_level(N)
                if order_at_infinity(base) > m:
                    continue
                for t in divisors(N):
                    if t > 1:
                        add(CuspGenerator(kind=KIND_PRODUCT, eta=base, e2_scale=t))
    return out


def repair_basis(N: int, T: int, bound: int = 10, jobs: int = 1) -> ModularBasis:
    """Certified basis: sublevel closure and products first, the strict
    search at N only when those do not span."""
    cands = repair_candidates(N, bound, jobs=jobs)
    try:
        basis = select_cusp_basis(N, cands, T)
    except BasisIncompleteError:
        m = max(profile(N).dim_S4, 1)
        extra = [
            CuspGenerator(kind=KIND_ETA, eta=q)
            for q in search_cusp_forms(N, 8, bound, max_order=m, strict=True, jobs=jobs)
        ]
        known = {c.eta.exponents for c in cands if c.kind == KIND_ETA}
        merged = cands + [g for g in extra if g.eta.exponents not in known]
        basis = select_cusp_basis(N, merged, T)
    return basis


def fixture_substitution_report(N: int, T: int = 64) -> list[tuple]:
    """Check the published substitution claims b_target(n) = b_source(n/k)
    against the actual expansions; returns (target, source, published_k,
    actual_k_or_None) rows."""
    rows = fixtures.BASIS_TABLES[N]
    out = []
    for target, source, published_k, _ in fixtures.SUBSTITUTION_CLAIMS.get(N, []):
        st = EtaQuotient.make(N, rows[target - 1]).series(T)
        ss = EtaQuotient.make(N, rows[source - 1]).series(T)
        actual = None
        for k in range(1, T):
            if all(
                st.coefficient(n) == (ss.coefficient(n // k) if n % k == 0 else 0)
                for n in range(T + 1)
            ):
                actual = k
                break
        out.append((target, source, published_k, actual))
    return out
