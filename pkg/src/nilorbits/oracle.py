"""Brute-force matrix realisations of classical algebras, triples and
involutions.

This is the independent verification path: sl_n is realised as traceless
matrices, so_n/sp_n as {X : X^T B + B X = 0} for an explicit integer form
B, nilpotent triples are built block-by-block from Jordan strings, and
every dimension (centralisers, kernels, grading layers) is recomputed by
exact rank arithmetic.  Nothing here consults the partition formulas or
the sl2-module calculus, so agreement between the two paths is a real
check.

Basis conventions: the invariant form on a length-p Jordan string is
  <v_i, v_{p-1-i}> = (-1)^i,
symmetric for p odd and alternating for p even; parts that need a partner
(even parts in so, odd parts in sp) are doubled with the cross form
[[0, C], [+-C^T, 0]].  For the gl_n subalgebras of so_2n/sp_2n the space
splits as W + W* with the hyperbolic form [[0, I], [+-I, 0]] and triples
act as M on W and -M^T on W*.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gradings import MixedGrading
from .involutions import SymmetricPair
from .linalg import (Matrix, commutator, is_zero, mat_mul,
                     mat_scale, mat_sub, rank, transpose, zeros)
from .orbits import ClassicalOrbit, Partition, is_divisible, valid_partitions


# ---------------------------------------------------------------------------
# Triples
# ---------------------------------------------------------------------------

@dataclass
class SL2Triple:
    kind: str          # ambient: sl / so / sp
    n: int
    e: Matrix
    h: Matrix
    f: Matrix
    form: Matrix | None  # None for sl

    def check_relations(self) -> bool:
        ok = (is_zero(mat_sub(commutator(self.h, self.e),
                              mat_scale(self.e, 2)))
              and is_zero(mat_sub(commutator(self.e, self.f), self.h))
              and is_zero(mat_sub(commutator(self.h, self.f),
                                  mat_scale(self.f, -2))))
        if ok and self.form is not None:
            for x in (self.e, self.h, self.f):
                ok = ok and is_zero(mat_sub(
                    mat_mul(transpose(x), self.form),
                    mat_scale(mat_mul(self.form, x), -1)))
        return ok

    @property
    def h_diagonal(self) -> list[int]:
        return [self.h[i][i] for i in range(self.n)]


def _string_block(p: int) -> tuple[Matrix, Matrix, Matrix]:
    e = zeros(p, p)
    f = zeros(p, p)
    h = zeros(p, p)
    for i in range(p):
        h[i][i] = p - 1 - 2 * i
    for i in range(p - 1):
        e[i][i + 1] = 1
        f[i + 1][i] = (i + 1) * (p - 1 - i)
    return e, h, f


def _string_form(p: int) -> Matrix:
    c = zeros(p, p)
    for i in range(p):
        c[i][p - 1 - i] = (-1) ** i
    return c


def _embed(dst: Matrix, block: Matrix, r0: int, c0: int):
    for i, row in enumerate(block):
        for j, v in enumerate(row):
            if v:
                dst[r0 + i][c0 + j] = v


def triple_from_partition(kind: str, n: int,
                          lam: Partition) -> SL2Triple:
    """Block triple for the orbit with the given Jordan type, inside a
    compatible bilinear form for so/sp."""
    ClassicalOrbit(kind, n, lam)  # validity
    e, h, f = zeros(n, n), zeros(n, n), zeros(n, n)
    form = None if kind == "sl" else zeros(n, n)
    pos = 0
    pending: dict[int, int] = {}  # part -> offset of an unpaired block
    for p in lam.parts:
        eb, hb, fb = _string_block(p)
        _embed(e, eb, pos, pos)
        _embed(h, hb, pos, pos)
        _embed(f, fb, pos, pos)
        if kind != "sl":
            needs_pair = (p % 2 == 0) if kind == "so" else (p % 2 == 1)
            if not needs_pair:
                _embed(form, _string_form(p), pos, pos)
            elif p in pending:
                q = pending.pop(p)
                c = _string_form(p)
                _embed(form, c, q, pos)
                sign = 1 if kind == "so" else -1
                _embed(form, mat_scale(transpose(c), sign), pos, q)
            else:
                pending[p] = pos
        pos += p
    assert not pending, "unpaired parts left over"
    return SL2Triple(kind, n, e, h, f, form)


# ---------------------------------------------------------------------------
# Adjoint action in coordinates
# ---------------------------------------------------------------------------

def _so_sp_coords(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "so":
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [(i, j) for i in range(n) for j in range(i, n)]


def _ad_matrix_so_sp(kind: str, n: int, e: Matrix) -> list[list[int]]:
    """Matrix of A -> -(e^T A + A e) on (anti)symmetric A.

    Writing X = B^{-1} A identifies so(B)/sp(B) with antisymmetric or
    symmetric matrices A, and for e in the algebra ad e acts on the
    A-coordinate by this formula, independently of B.
    """
    from .linalg import mat_add
    coords = _so_sp_coords(kind, n)
    sign = -1 if kind == "so" else 1
    et = transpose(e)
    m = [[0] * len(coords) for _ in range(len(coords))]
    for col, (i, j) in enumerate(coords):
        a = zeros(n, n)
        a[i][j] += 1
        if i != j:
            a[j][i] += sign
        img = mat_scale(mat_add(mat_mul(et, a), mat_mul(a, e)), -1)
        for row, (r, c) in enumerate(coords):
            m[row][col] = img[r][c]
    return m


def _ad_matrix_gl(n: int, e: Matrix) -> list[list[int]]:
    """Matrix of ad e on gl_n in elementary-matrix coordinates."""
    size = n * n
    m = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            col = i * n + j
            # [e, E_ij] = sum_r e[r][i] E_rj - sum_c e[j][c] E_ic
            for r in range(n):
                if e[r][i]:
                    m[r * n + j][col] += e[r][i]
            for c in range(n):
                if e[j][c]:
                    m[i * n + c][col] -= e[j][c]
    return m


def algebra_dim(kind: str, n: int) -> int:
    if kind == "sl":
        return n * n - 1
    if kind == "so":
        return n * (n - 1) // 2
    return n * (n + 1) // 2


def centralizer_dim(triple: SL2Triple) -> int:
    """dim of the centraliser of e in the ambient algebra, by exact rank."""
    kind, n, e = triple.kind, triple.n, triple.e
    if kind == "sl":
        ad = _ad_matrix_gl(n, e)
        return (n * n - rank(ad)) - 1
    ad = _ad_matrix_so_sp(kind, n, e)
    return algebra_dim(kind, n) - rank(ad)


def ker_ad_squared(triple: SL2Triple) -> int:
    kind, n, e = triple.kind, triple.n, triple.e
    if kind == "sl":
        ad = _ad_matrix_gl(n, e)
        ad2 = mat_mul(ad, ad)
        return (n * n - rank(ad2)) - 1
    ad = _ad_matrix_so_sp(kind, n, e)
    ad2 = mat_mul(ad, ad)
    return algebra_dim(kind, n) - rank(ad2)


# ---------------------------------------------------------------------------
# Involution realisations and oracle grids
# ---------------------------------------------------------------------------

@dataclass
class RealizedPair:
    pair: SymmetricPair
    triple: SL2Triple
    sign_vector: list[int] | None   # sigma = conjugation by diag(signs)
    twist: bool                     # sigma(X) = -B^{-1} X^T B (outer sl)

    def sigma(self, x: Matrix) -> Matrix:
        n = self.triple.n
        if self.twist:
            b = self.triple.form
            binv = _signed_perm_inverse(b)
            return mat_scale(mat_mul(binv, mat_mul(transpose(x), b)), -1)
        s = self.sign_vector
        return [[s[i] * s[j] * x[i][j] for j in range(n)] for i in range(n)]

    def fixed_space_dim(self) -> int:
        """dim of the +1 eigenspace of sigma on the ambient algebra."""
        tr = self.triple
        basis = _basis_with_h_weights(tr.kind, tr.n, tr.form, tr.h_diagonal)
        from .linalg import solve_in_span
        mats = [m for m, _ in basis]
        sig = [[0] * len(mats) for _ in range(len(mats))]
        for c, m in enumerate(mats):
            for r, v in enumerate(solve_in_span(mats, self.sigma(m))):
                sig[r][c] = int(v)
        from .linalg import eigenspace_dim
        return eigenspace_dim(sig, 1)


def _signed_perm_inverse(b: Matrix) -> Matrix:
    """Inverse of a signed permutation matrix."""
    n = len(b)
    inv = zeros(n, n)
    for i in range(n):
        for j in range(n):
            if b[i][j]:
                assert b[i][j] in (1, -1)
                inv[j][i] = b[i][j]
    return inv


def realize_pair(pair: SymmetricPair,
                 factor_partitions: list[Partition] | None = None
                 ) -> RealizedPair:
    kind, n = pair.ambient
    from .gradings import factor_regular_parts
    if factor_partitions is None:
        fparts = [Partition(factor_regular_parts(f)) for f in pair.factors]
    else:
        fparts = list(factor_partitions)
    gl_sub = pair.descriptor.startswith("gl") and kind in ("so", "sp")
    if gl_sub:
        w = fparts[0]
        m = w.n
        ew, hw, fw = zeros(m, m), zeros(m, m), zeros(m, m)
        pos = 0
        for p in w.parts:
            eb, hb, fb = _string_block(p)
            _embed(ew, eb, pos, pos)
            _embed(hw, hb, pos, pos)
            _embed(fw, fb, pos, pos)
            pos += p
        e = zeros(n, n)
        h = zeros(n, n)
        f = zeros(n, n)
        _embed(e, ew, 0, 0)
        _embed(e, mat_scale(transpose(ew), -1), m, m)
        _embed(h, hw, 0, 0)
        _embed(h, mat_scale(hw, -1), m, m)
        _embed(f, fw, 0, 0)
        _embed(f, mat_scale(transpose(fw), -1), m, m)
        form = zeros(n, n)
        eps = 1 if kind == "so" else -1
        for i in range(m):
            form[i][m + i] = 1
            form[m + i][i] = eps
        triple = SL2Triple(kind, n, e, h, f, form)
        signs = [1] * m + [-1] * m
        return RealizedPair(pair, triple, signs, twist=False)
    if kind == "sl" and len(pair.factors) == 1:
        fkind = pair.factors[0][0]
        triple = triple_from_partition(fkind, n, fparts[0])
        triple = SL2Triple("sl", n, triple.e, triple.h, triple.f, triple.form)
        return RealizedPair(pair, triple, None, twist=True)
    # block-diagonal factor sum: (sl, gl+gl), (so, so+so), (sp, sp+sp)
    e = zeros(n, n)
    h = zeros(n, n)
    f = zeros(n, n)
    form = None if kind == "sl" else zeros(n, n)
    pos = 0
    for (fkind, fn), lam in zip(pair.factors, fparts):
        if fkind == "gl":
            eb, hb, fb = zeros(fn, fn), zeros(fn, fn), zeros(fn, fn)
            at = 0
            for p in lam.parts:
                b_e, b_h, b_f = _string_block(p)
                _embed(eb, b_e, at, at)
                _embed(hb, b_h, at, at)
                _embed(fb, b_f, at, at)
                at += p
            tb = SL2Triple("sl", fn, eb, hb, fb, None)
        else:
            tb = triple_from_partition(fkind, fn, lam)
        _embed(e, tb.e, pos, pos)
        _embed(h, tb.h, pos, pos)
        _embed(f, tb.f, pos, pos)
        if form is not None:
            _embed(form, tb.form, pos, pos)
        pos += fn
    signs = [1] * pair.factors[0][1] + [-1] * (n - pair.factors[0][1])
    triple = SL2Triple(kind, n, e, h, f, form)
    return RealizedPair(pair, triple, signs, twist=False)


def _basis_with_h_weights(kind: str, n: int, form: Matrix | None,
                          h_diag: list[int]
                          ) -> list[tuple[Matrix, int]]:
    """Basis matrices of the ambient algebra, tagged with ad-h eigenvalue."""
    out = []
    if kind == "sl":
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                m = zeros(n, n)
                m[i][j] = 1
                out.append((m, h_diag[i] - h_diag[j]))
        for i in range(n - 1):
            m = zeros(n, n)
            m[i][i] = 1
            m[i + 1][i + 1] = -1
            out.append((m, 0))
        return out
    binv = _signed_perm_inverse(form)
    sign = -1 if kind == "so" else 1
    for (i, j) in _so_sp_coords(kind, n):
        a = zeros(n, n)
        a[i][j] += 1
        if i != j:
            a[j][i] += sign
        x = mat_mul(binv, a)
        out.append((x, _h_weight_of(x, h_diag)))
    return out


def _h_weight_of(x: Matrix, h_diag: list[int]) -> int:
    w = None
    for i in range(len(x)):
        for j in range(len(x)):
            if x[i][j]:
                cand = h_diag[i] - h_diag[j]
                assert w is None or w == cand, "basis vector mixes h-weights"
                w = cand
    assert w is not None
    return w


def oracle_grid(pair: SymmetricPair,
                factor_partitions: list[Partition] | None = None
                ) -> MixedGrading:
    """The grid d_j(i) recomputed from an explicit matrix realisation."""
    rp = realize_pair(pair, factor_partitions)
    assert rp.triple.check_relations(), "triple relations failed"
    tr = rp.triple
    assert is_zero(mat_sub(rp.sigma(tr.e), tr.e)), "e is not sigma-fixed"
    assert is_zero(mat_sub(rp.sigma(tr.h), tr.h)), "h is not sigma-fixed"
    basis = _basis_with_h_weights(tr.kind, tr.n, tr.form, tr.h_diagonal)
    # group basis indices by h-weight, then split by sigma within each block
    blocks: dict[int, list[int]] = {}
    for idx, (_, w) in enumerate(basis):
        blocks.setdefault(w, []).append(idx)
    from .linalg import eigenspace_dim, solve_in_span
    d: dict[tuple[int, int], int] = {}
    for w, idxs in sorted(blocks.items()):
        if w < 0:
            continue
        mats = [basis[i][0] for i in idxs]
        images = [rp.sigma(m) for m in mats]
        sig = [[0] * len(idxs) for _ in range(len(idxs))]
        for c, img in enumerate(images):
            coords = solve_in_span(mats, img)
            for r, v in enumerate(coords):
                assert v.denominator == 1
                sig[r][c] = int(v)
        plus = eigenspace_dim(sig, 1)
        minus = eigenspace_dim(sig, -1)
        assert plus + minus == len(idxs), "sigma is not an involution"
        d[(0, w)] = plus
        d[(1, w)] = minus
    hi = max((w for (_, w) in d), default=0)
    row0 = tuple(d.get((0, i), 0) for i in range(hi + 1))
    row1 = tuple(d.get((1, i), 0) for i in range(hi + 1))
    # sanity: the fixed subalgebra has the catalogued dimension
    fixed = row0[0] + 2 * sum(row0[1:])
    assert fixed == pair.dim_g0, (pair.descriptor, fixed, pair.dim_g0)
    return MixedGrading(row0, row1)


def sp_half_partition(lam: Partition, n: int) -> Partition:
    """Search for the Jordan type with the halved characteristic (sp only).

    No closed-form transform is recorded for sp; the result is found by
    matching weight strings over all valid sp partitions.
    """
    orbit = ClassicalOrbit("sp", n, lam)
    if not is_divisible(orbit):
        raise ValueError(f"{orbit} is not divisible")
    target = [v // 2 for v in lam.weight_string()]
    hits = [o.partition for o in valid_partitions("sp", n)
            if o.partition.weight_string() == target]
    assert len(hits) == 1, f"halved weight string matched {hits}"
    return hits[0]
