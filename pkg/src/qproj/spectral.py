"""Right eigenvalues, eigenvectors and Jordan form over H for 3x3 matrices.

Everything is computed through the 6x6 complex adjoint.  The right spectrum
of A is read off the adjoint's eigenvalues, which occur in conjugate pairs;
each pair collapses to one quaternionic similarity class.  Jordan structure
is recovered per class from the Schur-restricted operator on the class's
invariant subspace, and quaternionic chain vectors are obtained by lifting
complex chains through x = u - conj(v) * j.

Floating point makes Jordan detection ambiguous: a conjugated Jordan block
has its adjoint eigenvalues split by roughly eps^(1/k), and a defective real
eigenvalue is indistinguishable from a tight conjugate pair.  The extractor
therefore enumerates the few cluster partitions and real/complex readings
consistent with the data, polishes each candidate, and keeps the one with
the best reconstruction residual after a conditioning penalty.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import IllConditioned, LiftFailure, Singular, SpectralFailure
from .matrix import QMatrix3, det_h, inverse
from .quaternion import DEFAULT_TOL, ClassRep, Quaternion

# Accept a candidate immediately when its relative residual is this good;
# otherwise all candidates are scored and the best one wins.
_EARLY_ACCEPT = 1e-10
# Largest eigenvalue-gap (relative to spectral scale) that clustering may bridge.
_MERGE_CAP = 3e-2


@dataclass(frozen=True)
class EigenClass:
    """One quaternionic eigenvalue class with its multiplicities."""

    rep: ClassRep
    alg_mult: int
    geo_mult: int


@dataclass
class JordanData:
    """Jordan blocks, the similarity A = S J S^-1 and the shape tag."""

    blocks: list  # [(ClassRep, size)], canonical order
    S: QMatrix3
    shape_id: str  # "diag" | "j2" | "j3"
    residual: float

    def classes(self) -> list[EigenClass]:
        grouped: dict[tuple, list[int]] = {}
        order = []
        for rep, size in self.blocks:
            key = (rep.re, rep.im)
            if key not in grouped:
                grouped[key] = []
                order.append(key)
            grouped[key].append(size)
        out = []
        for key in order:
            sizes = grouped[key]
            out.append(EigenClass(ClassRep(*key), sum(sizes), len(sizes)))
        return out

    def jordan_matrix(self) -> QMatrix3:
        return _assemble_jordan(self.blocks)

    def to_json_dict(self) -> dict:
        return {
            "blocks": [
                {"re": rep.re, "im": rep.im, "size": size} for rep, size in self.blocks
            ],
            "S": self.S.to_json_dict(),
            "shape": self.shape_id,
        }


def _block_sort_key(block):
    rep, size = block
    return (-size, -rep.modulus(), rep.angle())


def _assemble_jordan(blocks) -> QMatrix3:
    J = np.zeros((3, 3), dtype=complex)
    col = 0
    for rep, size in blocks:
        lam = rep.as_complex()
        for k in range(size):
            J[col + k, col + k] = lam
            if k > 0:
                J[col + k - 1, col + k] = 1.0
        col += size
    return QMatrix3.from_complex(J)


def _shape_id(blocks) -> str:
    top = max(size for _, size in blocks)
    return {1: "diag", 2: "j2", 3: "j3"}[top]


# ---------------------------------------------------------------------------
# eigenvalue clustering


def _class_points(eigs):
    return np.column_stack([eigs.real, np.abs(eigs.imag)])


def _partitions_from_points(pts, tol_abs, scale):
    """Single-linkage partitions of the 6 adjoint eigenvalues, finest first.

    Returns [(clusters, level)], where each cluster is a tuple of indices and
    level is the merge threshold that produced the partition.  Partitions with
    an odd-sized cluster cannot be conjugate-closed and are dropped.
    """
    n = len(pts)
    dists = np.array(
        [[np.hypot(*(pts[i] - pts[j])) for j in range(n)] for i in range(n)]
    )
    base = max(10.0 * tol_abs, 1e4 * np.finfo(float).eps * scale)
    levels = [base]
    gaps = sorted({d for i in range(n) for d in dists[i, i + 1 :] if base < d <= _MERGE_CAP * scale})
    levels.extend(g * (1 + 1e-9) + base for g in gaps)

    seen = set()
    out = []
    for level in levels:
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(n):
            for j in range(i + 1, n):
                if dists[i, j] <= level:
                    parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        clusters = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
        if clusters in seen:
            continue
        seen.add(clusters)
        if any(len(c) % 2 for c in clusters):
            continue
        out.append((clusters, level))
    return out


# ---------------------------------------------------------------------------
# chains within one class's invariant subspace


class _CandidateFailed(Exception):
    pass


def _nullity(mat, floor):
    s = np.linalg.svd(mat, compute_uv=False)
    thr = max(1e-8 * s[0], floor)
    return int(np.sum(s < thr))


def _sizes_from_nullities(nullities, alg):
    """Block sizes from the quaternionic nullity chain q_1 <= q_2 <= ..."""
    q = [0] + nullities
    sizes = []
    for k in range(1, len(q)):
        at_least_k = q[k] - q[k - 1]
        if at_least_k < 0:
            raise _CandidateFailed("nullity chain not monotone")
        sizes.append(at_least_k)
    result = []
    for k in range(len(sizes), 0, -1):
        exact = sizes[k - 1] - (sizes[k] if k < len(sizes) else 0)
        result.extend([k] * exact)
    if sum(result) != alg or any(s <= 0 for s in result):
        raise _CandidateFailed("inconsistent block sizes")
    return sorted(result, reverse=True)


def _candidate_size_lists(N, alg, real_class, floor):
    """Block-size guesses for one class: nullity-based first, alternates after."""
    dim = N.shape[0]
    nullities = []
    P = np.eye(dim, dtype=complex)
    for _ in range(min(alg, 3)):
        P = P @ N
        d = _nullity(P, floor)
        nullities.append(d // 2 if real_class else d)
    guesses = []
    try:
        guesses.append(tuple(_sizes_from_nullities(nullities, alg)))
    except _CandidateFailed:
        pass
    for part in _partitions_of(alg):
        if part not in guesses:
            guesses.append(part)
    return guesses


def _partitions_of(n):
    if n == 1:
        return [(1,)]
    if n == 2:
        return [(2,), (1, 1)]
    return [(3,), (2, 1), (1, 1, 1)]


def _orth_columns(cols):
    if not cols:
        return np.zeros((0, 0), dtype=complex)
    m = np.column_stack(cols)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    keep = s > 1e-12 * max(1.0, s[0])
    return u[:, keep]


def _pick_independent(pool, forbidden_cols):
    """Unit vector in span(pool columns) farthest from span(forbidden_cols)."""
    if pool.shape[1] == 0:
        raise _CandidateFailed("empty candidate pool")
    if forbidden_cols.size:
        resid = pool - forbidden_cols @ (forbidden_cols.conj().T @ pool)
    else:
        resid = pool
    _, s, vh = np.linalg.svd(resid, full_matrices=False)
    if s[0] < 1e-8:
        raise _CandidateFailed("no independent vector available")
    v = pool @ vh[0].conj()
    return v / np.linalg.norm(v)


def _kernel_basis(mat, floor):
    u, s, vh = np.linalg.svd(mat)
    thr = max(1e-8 * s[0], floor)
    keep = s < thr
    return vh.conj().T[:, keep]


def _chain_from_lead(N, lead, size):
    chain = [lead]
    for _ in range(size - 1):
        chain.append(N @ chain[-1])
    chain.reverse()  # eigenvector first
    nrm_head = np.linalg.norm(chain[0])
    nrm_tail = np.linalg.norm(chain[-1])
    if nrm_head < 1e-14 * max(1.0, nrm_tail):
        raise _CandidateFailed("degenerate chain")
    scale = 1.0 / math.sqrt(nrm_head * nrm_tail)
    return [c * scale for c in chain]


def _class_chains(N, sizes, real_class, tau, floor):
    """Complex Jordan chains inside one class subspace.

    Returns one list of vectors per quaternionic block.  For real classes the
    complex structure is doubled, so newly picked vectors must stay independent
    of the tau-images (quaternionic structure map) of everything already used.
    """
    dim = N.shape[0]
    chains = []
    used = []

    for size in sorted(sizes, reverse=True):
        if size == 1:
            pool = _kernel_basis(N, floor) if np.linalg.norm(N) > floor else np.eye(dim, dtype=complex)
            if pool.shape[1] == 0:
                pool = np.eye(dim, dtype=complex)
            forb = list(used)
            if real_class:
                forb.extend(tau(c) for c in used)
            lead = _pick_independent(pool, _orth_columns(forb))
            chain = [lead]
        else:
            power = np.linalg.matrix_power(N, size - 1)
            _, s, vh = np.linalg.svd(power)
            if s[0] < floor:
                raise _CandidateFailed("nilpotent power vanished for requested size")
            ranked = vh.conj().T  # candidate leads, dominant image first
            chain = None
            for k in range(ranked.shape[1]):
                lead = ranked[:, k]
                try:
                    cand = _chain_from_lead(N, lead, size)
                except _CandidateFailed:
                    continue
                cols = list(itertools.chain(*chains)) + cand
                if real_class:
                    cols = cols + [tau(c) for c in cols]
                m = np.column_stack(cols)
                s2 = np.linalg.svd(m, compute_uv=False)
                if s2[-1] > 1e-6 * s2[0]:
                    chain = cand
                    break
            if chain is None:
                raise _CandidateFailed("no usable chain lead")
        chains.append(chain)
        used.extend(chain)
    return chains


# ---------------------------------------------------------------------------
# per-candidate extraction


def _lift_to_quaternionic(full):
    """C^6 -> H^3 with x = p - conj(q) j, as the complex pair (u, w)."""
    p = full[:3]
    q = full[3:]
    return p, -q.conj()


def _apply_qmatrix_to_pair(m: QMatrix3, u, w):
    return m.a @ u - m.b @ w.conj(), m.a @ w + m.b @ u.conj()


def _pair_norm(u, w):
    return math.sqrt(float(np.sum(np.abs(u) ** 2) + np.sum(np.abs(w) ** 2)))


def _reorder_schur(T0, Z0, mask):
    """Move the masked diagonal positions of a complex Schur form to the front."""
    select = np.zeros(T0.shape[0], dtype=np.int32)
    select[mask] = 1
    ts, qs, _, m, _, _, info = sla.lapack.ztrsen(select, T0, Z0, job=b"N", lwork=1)
    if info != 0 or m != len(mask):
        raise _CandidateFailed(f"schur reordering failed (info={info})")
    return ts, qs


def _realness_options(eigs, clusters, level, scale):
    """Per-cluster interpretations to try: real axis class or conjugate pair.

    A defective real eigenvalue perturbs into a tight conjugate pair, so a
    small centroid imaginary part is ambiguous; both readings are produced
    (complex first, the reconstruction residual arbitrates).
    """
    pts = _class_points(eigs)
    ambiguous_band = max(1e-3 * scale, 10.0 * level)
    options = []
    for cluster in clusters:
        idxs = list(cluster)
        centroid = pts[idxs].mean(axis=0)
        radius = max(np.hypot(*(pts[i] - centroid)) for i in idxs)
        if centroid[1] <= max(4.0 * radius, level):
            options.append((True,))
        elif centroid[1] <= ambiguous_band:
            options.append((False, True))
        else:
            options.append((False,))
    return options


def _extract_candidate(A, T0, Z0, eigs, clusters, level, tol_abs, scale, realness):
    pts = _class_points(eigs)
    specs = []
    for cluster, real_class in zip(clusters, realness):
        idxs = list(cluster)
        alg = len(idxs) // 2
        centroid = pts[idxs].mean(axis=0)
        rep_im = 0.0 if real_class else centroid[1]
        lam = complex(centroid[0], rep_im)
        specs.append((lam, alg, real_class, centroid))

    # assign every adjoint eigenvalue to its nearest class centroid; counts
    # must reproduce the clustering or the candidate is inconsistent
    centroids = np.array([spec[3] for spec in specs])
    assign = np.array(
        [int(np.argmin(np.hypot(*(centroids - pts[i]).T))) for i in range(len(eigs))]
    )
    for c, cluster in enumerate(clusters):
        if sorted(np.nonzero(assign == c)[0].tolist()) != sorted(cluster):
            raise _CandidateFailed("eigenvalue assignment disagrees with clustering")

    blocks = []
    columns = []  # per block, list of (u, w) complex pairs
    for c, (lam, alg, real_class, _) in enumerate(specs):
        members = np.nonzero(assign == c)[0]
        if real_class:
            mask = members
        else:
            mask = np.array([i for i in members if eigs[i].imag > 0])
        want = 2 * alg if real_class else alg
        if len(mask) != want:
            raise _CandidateFailed("conjugate halves of the class are unbalanced")
        T, Z = _reorder_schur(T0, Z0, mask)
        Z1 = Z[:, :want]
        M = T[:want, :want]
        lam_c = np.trace(M) / want
        if real_class:
            lam_c = complex(lam_c.real, 0.0)
        elif lam_c.imag < 0:
            lam_c = lam_c.conjugate()
        N = M - lam_c * np.eye(want)

        def tau(c, Z1=Z1):
            full = Z1 @ c
            tfull = np.concatenate([full[3:].conj(), -full[:3].conj()])
            return Z1.conj().T @ tfull

        floor = max(2.0 * level, tol_abs)
        rep = ClassRep(lam_c.real, abs(lam_c.imag))
        for sizes in _candidate_size_lists(N, alg, real_class, floor):
            try:
                chains = _class_chains(N, list(sizes), real_class, tau, floor)
            except _CandidateFailed:
                continue
            for size, chain in zip(sorted(sizes, reverse=True), chains):
                pairs = [_lift_to_quaternionic(Z1 @ c) for c in chain]
                blocks.append((rep, size))
                columns.append(pairs)
            break
        else:
            raise _CandidateFailed("no chain construction succeeded")

    order = sorted(range(len(blocks)), key=lambda k: _block_sort_key(blocks[k]))
    blocks = [blocks[k] for k in order]
    columns = [columns[k] for k in order]

    S = QMatrix3.zeros()
    col = 0
    for pairs in columns:
        for u, w in pairs:
            S.a[:, col] = u
            S.b[:, col] = w
            col += 1
    if col != 3:
        raise _CandidateFailed("chain columns do not fill H^3")

    phi_s = S.adjoint()
    sv = np.linalg.svd(phi_s, compute_uv=False)
    if sv[-1] < 1e-13 * sv[0]:
        raise _CandidateFailed("similarity transform numerically singular")

    data = JordanData(
        blocks=blocks, S=_normalize_similarity(S, blocks), shape_id=_shape_id(blocks), residual=np.inf
    )
    data.residual = _reconstruction_residual(A, data)
    return data


def _normalize_similarity(S: QMatrix3, blocks) -> QMatrix3:
    """Deterministic per-block gauge on the similarity transform.

    A whole chain may be rescaled by one right complex scalar without
    disturbing A = S J S^-1 (the scalar block commutes with its Jordan
    block), so each block's eigenvector column is normalized and its first
    non-negligible complex coordinate rotated to the positive real axis.
    """
    scalars = []
    col = 0
    for _, size in blocks:
        u = S.a[:, col]
        w = S.b[:, col]
        nrm = math.sqrt(float(np.sum(np.abs(u) ** 2) + np.sum(np.abs(w) ** 2)))
        h = 1.0 + 0j
        if nrm > 0.0:
            stacked = np.concatenate([u, w])
            cutoff = 0.5 * float(np.max(np.abs(stacked)))
            lead = next(v for v in stacked if abs(v) >= cutoff)
            h = (lead / abs(lead)).conjugate() / nrm
        scalars.extend([h] * size)
        col += size
    return S.scale_columns(scalars)


def _reconstruction_residual(A: QMatrix3, data: JordanData) -> float:
    J = data.jordan_matrix()
    try:
        S_inv = inverse(data.S, tol=1e-300)
    except Singular:
        return np.inf
    recon = data.S @ J @ S_inv
    return (A - recon).norm() / max(A.norm(), 1e-300)


# ---------------------------------------------------------------------------
# Sylvester polish


def _vec36(m: QMatrix3):
    return np.stack([m.a.real, m.a.imag, m.b.real, m.b.imag], axis=-1).ravel()


def _x_basis():
    basis = []
    for i in range(3):
        for j in range(3):
            for comp in range(4):
                b = QMatrix3.zeros()
                vals = [0.0, 0.0, 0.0, 0.0]
                vals[comp] = 1.0
                b[i, j] = Quaternion(*vals)
                basis.append(b)
    return basis


def _class_column_masks(blocks):
    """Column index sets of S grouped by eigenvalue class."""
    masks: dict[tuple, list[int]] = {}
    col = 0
    for rep, size in blocks:
        key = (rep.re, rep.im)
        masks.setdefault(key, []).extend(range(col, col + size))
        col += size
    return list(masks.values())


def _fold_negative_classes(blocks, S):
    """Flip classes whose representative drifted below the real axis.

    Right-multiplying a chain by j conjugates its eigenvalue, so the
    representative convention im >= 0 is restored without disturbing
    A = S J S^-1.
    """
    j_unit = Quaternion(0.0, 0.0, 1.0, 0.0)
    scalars = [1.0] * 3
    fixed = []
    col = 0
    for rep, size in blocks:
        if rep.im < 0.0:
            for k in range(col, col + size):
                scalars[k] = j_unit
            fixed.append((ClassRep(rep.re, -rep.im), size))
        else:
            fixed.append((rep, size))
        col += size
    return fixed, S.scale_columns(scalars)


def _sylvester_polish(A: QMatrix3, data: JordanData, max_iter=16):
    """Gauss-Newton refinement of (S, class representatives).

    Solves min ||R + JX - XJ - dJ||_F over quaternionic X and per-class
    complex eigenvalue shifts dJ, where R = S^-1 A S - J, then updates
    S <- S (I + X) and the block representatives.  The shift directions let a
    well-conditioned candidate with a slightly wrong representative (e.g. a
    real reading of a tiny-angle class) slide onto the correct orbit.
    """
    basis = _x_basis()
    best = data

    for _ in range(max_iter):
        J = best.jordan_matrix()
        masks = _class_column_masks(best.blocks)
        shift_dirs = []
        for mask in masks:
            for unit in (1.0, 1j):
                d = QMatrix3.zeros()
                for k in mask:
                    d[k, k] = Quaternion.from_scalar(unit)
                shift_dirs.append((mask, unit, d))
        try:
            S_inv = inverse(best.S, tol=1e-300)
        except Singular:
            return best
        R = (S_inv @ A @ best.S) - J
        cols = [_vec36(J @ b - b @ J) for b in basis]
        cols.extend(_vec36(-1.0 * d) for _, _, d in shift_dirs)
        op = np.column_stack(cols)
        sol, *_ = np.linalg.lstsq(op, -_vec36(R), rcond=None)

        X = QMatrix3.zeros()
        for coeff, b in zip(sol[: len(basis)], basis):
            X = X + float(coeff) * b
        shifts = sol[len(basis) :]

        def stepped(fraction):
            new_blocks = list(best.blocks)
            col = 0
            ranges = []
            for _, size in best.blocks:
                ranges.append((col, col + size))
                col += size
            for (mask, unit, _), coeff in zip(shift_dirs, shifts):
                delta = complex(unit) * float(coeff) * fraction
                for bi, (lo, _) in enumerate(ranges):
                    if lo in mask:
                        rep, size = new_blocks[bi]
                        lam = complex(rep.re, rep.im) + delta
                        new_blocks[bi] = (ClassRep(lam.real, lam.imag), size)
            folded_blocks, s_candidate = _fold_negative_classes(
                new_blocks, best.S @ (QMatrix3.identity() + fraction * X)
            )
            cand = JordanData(
                blocks=folded_blocks,
                S=_normalize_similarity(s_candidate, folded_blocks),
                shape_id=best.shape_id,
                residual=np.inf,
            )
            cand.residual = _reconstruction_residual(A, cand)
            return cand

        # Gauss-Newton overshoots near the defective orbit; backtrack
        cand = min((stepped(f) for f in (1.0, 0.5, 0.25)), key=lambda c: c.residual)
        if cand.residual < best.residual * 0.9:
            best = cand
            if best.residual < 1e-13:
                break
        else:
            break
    return best


# ---------------------------------------------------------------------------
# public operations


def jordan_form(A: QMatrix3, tol: float = DEFAULT_TOL) -> JordanData:
    """Jordan data of an invertible A: blocks, similarity S and shape tag.

    Raises IllConditioned when no candidate clustering reconstructs A within
    1e3 * tol relative residual (the best achieved residual is reported).
    """
    if det_h(A) <= tol:
        raise Singular("jordan_form requires an invertible matrix")
    phi = A.adjoint()
    try:
        T0, Z0 = sla.schur(phi, output="complex")
    except sla.LinAlgError as exc:
        raise SpectralFailure(f"Schur decomposition of the adjoint failed: {exc}") from exc
    eigs = np.diag(T0).copy()
    scale = max(1.0, float(np.max(np.abs(eigs))))
    tol_abs = tol * scale

    partitions = _partitions_from_points(_class_points(eigs), tol_abs, scale)
    if not partitions:
        raise SpectralFailure("adjoint eigenvalues admit no conjugate-closed clustering")

    # Candidates are scored by residual plus a conditioning penalty: anything
    # conjugated through S (witnesses, canonical factors) picks up roughly
    # eps * cond(Phi(S))^2 of error, so between two reconstructions of similar
    # quality the better-conditioned similarity must win.
    def score(data):
        sv = np.linalg.svd(data.S.adjoint(), compute_uv=False)
        cond = sv[0] / sv[-1]
        return data.residual + 1e-16 * cond * cond

    best = None
    best_score = np.inf
    for clusters, level in partitions:
        for realness in itertools.product(*_realness_options(eigs, clusters, level, scale)):
            try:
                data = _extract_candidate(
                    A, T0, Z0, eigs, clusters, level, tol_abs, scale, realness
                )
            except _CandidateFailed:
                continue
            if 1e-12 < data.residual <= 1e-1:
                data = _sylvester_polish(A, data)
            s = score(data)
            if s < best_score:
                best, best_score = data, s
            if best_score < _EARLY_ACCEPT:
                break
        if best_score < _EARLY_ACCEPT:
            break
    if best is None:
        raise SpectralFailure("no eigenvalue clustering produced a Jordan structure")

    target = 1e3 * tol
    if best.residual > target:
        raise IllConditioned(
            f"Jordan reconstruction residual {best.residual:.3e} exceeds {target:.1e}",
            residual=best.residual,
        )
    return best


def right_eigenvalues(A: QMatrix3, tol: float = DEFAULT_TOL) -> list[EigenClass]:
    """Eigenvalue classes of A as (representative, alg mult, geo mult)."""
    data = jordan_form(A, tol)
    return data.classes()


def eigenvector_lift(u, v, lam, A: QMatrix3 | None = None, tol: float = DEFAULT_TOL):
    """Lift an adjoint eigenvector (u; v) of eigenvalue lam to x with A x = x lam.

    Returns the quaternionic 3-vector as a list of Quaternion.  When A is
    supplied, the defining residual is checked and LiftFailure raised if it
    exceeds tol relative to |x|.
    """
    u = np.asarray(u, dtype=complex).reshape(3)
    v = np.asarray(v, dtype=complex).reshape(3)
    p, w = _lift_to_quaternionic(np.concatenate([u, v]))
    if A is not None:
        lam = complex(lam)
        au, aw = _apply_qmatrix_to_pair(A, p, w)
        ru = au - p * lam
        rw = aw - w * lam.conjugate()
        denom = max(_pair_norm(p, w), 1e-300) * max(1.0, A.norm())
        if _pair_norm(ru, rw) > tol * denom * 10:
            raise LiftFailure(
                f"lifted vector residual {_pair_norm(ru, rw) / denom:.3e} exceeds tolerance"
            )
    return [Quaternion.from_complex_pair(p[k], w[k]) for k in range(3)]


def is_diagonalizable(A: QMatrix3, tol: float = DEFAULT_TOL) -> bool:
    """True iff every Jordan block has size 1."""
    return all(size == 1 for _, size in jordan_form(A, tol).blocks)


def minimal_poly_structure(A: QMatrix3, tol: float = DEFAULT_TOL):
    """Real minimal-polynomial factors of A as (irreducible degree, power).

    Each distinct eigenvalue class contributes one factor: (x - lam)^s for a
    real class, (x^2 - 2 Re(lam) x + |lam|^2)^s for a non-real one, where s is
    the class's largest Jordan block.  Returns (factors, d) with
    d = max(degree * power); for real-spectrum matrices d is the largest
    Jordan block size.
    """
    data = jordan_form(A, tol)
    top: dict[tuple, int] = {}
    order = []
    for rep, size in data.blocks:
        key = (rep.re, rep.im)
        if key not in top:
            order.append(key)
            top[key] = size
        else:
            top[key] = max(top[key], size)
    factors = []
    for key in order:
        rep = ClassRep(*key)
        real = rep.im <= 1e3 * tol * max(1.0, rep.modulus())
        factors.append((1 if real else 2, top[key]))
    d = max(degree * power for degree, power in factors)
    return factors, d
