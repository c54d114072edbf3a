"""Exhaustive submodule-lattice oracle, independent of the MeatAxe search.

Spins every vector (one representative per projective line), closes the
resulting cyclic submodules under sums, and reads composition factors off a
maximal chain.  Prime fields get a numpy-batched reduction; extension
fields fall back to the generic pure-Python path.
"""

from __future__ import annotations

import numpy as np

from .errors import HopfRepError
from .linalg import coords_in_echelon, rref, subspace_key
from .algebra import ModuleRep, quotient_module, submodule_rep

_LATTICE_LIMIT = 50000


def _projective_reps(q: int, d: int):
    """One vector per line: first nonzero coordinate normalized to 1."""
    for lead in range(d):
        tail_len = d - lead - 1
        for code in range(q**tail_len):
            vec = [0] * lead + [1]
            m = code
            for _ in range(tail_len):
                vec.append(m % q)
                m //= q
            yield vec


def _one_shot_spin_rows(module: ModuleRep, v):
    return [module.action[i].mul_vec(list(v)) for i in range(len(module.action))]


def all_cyclic_submodules(module: ModuleRep) -> list[tuple[list[list[int]], list[int]]]:
    """Echelon bases of spin(v) over all projective representatives v."""
    F = module.algebra.field
    if module.dim == 0:
        return []
    if F.k == 1:
        return _cyclic_submodules_prime(module)
    seen: dict[tuple, tuple] = {}
    for v in _projective_reps(F.q, module.dim):
        ech, piv = rref(F, _one_shot_spin_rows(module, v))
        key = subspace_key(ech)
        if key not in seen:
            seen[key] = (ech, piv)
    return [seen[k] for k in sorted(seen)]


def _batch_rref_gfp(mats: np.ndarray, p: int):
    """Full Gauss-Jordan on a batch of matrices over GF(p).

    Returns (reduced, used, pivcol): per matrix, `used` marks pivot rows and
    `pivcol` records their pivot columns (sentinel c where unused).
    """
    n_mats, r, c = mats.shape
    work = mats % p
    inv_table = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv_table[a] = pow(a, p - 2, p)
    used = np.zeros((n_mats, r), dtype=bool)
    pivcol = np.full((n_mats, r), c, dtype=np.int64)
    idx = np.arange(n_mats)
    for col in range(c):
        colvals = work[:, :, col]
        cand = (colvals != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        pivrow = work[idx, piv, :]
        pivval = colvals[idx, piv]
        norm = (pivrow * inv_table[pivval][:, None]) % p
        delta = (colvals[:, :, None] * norm[:, None, :]) % p
        reduced = (work - delta) % p
        reduced[idx, piv, :] = norm
        work = np.where(has[:, None, None], reduced, work)
        used[idx[has], piv[has]] = True
        pivcol[idx[has], piv[has]] = col
    return work, used, pivcol


def _cyclic_submodules_prime(module: ModuleRep) -> list[tuple[list[list[int]], list[int]]]:
    F = module.algebra.field
    p, d = F.p, module.dim
    reps = np.array(list(_projective_reps(p, d)), dtype=np.int64)
    mats = [np.array(m.data, dtype=np.int64) for m in module.action]
    images = np.stack([(reps @ m.T) % p for m in mats], axis=1)  # (N, n, d)
    reduced, used, pivcol = _batch_rref_gfp(images, p)
    seen: dict[tuple, tuple] = {}
    for t in range(reduced.shape[0]):
        rows_idx = np.nonzero(used[t])[0]
        order = rows_idx[np.argsort(pivcol[t][rows_idx], kind="stable")]
        rows = [list(int(x) for x in reduced[t][i]) for i in order]
        key = tuple(tuple(r) for r in rows)
        if key not in seen:
            piv = [int(pivcol[t][i]) for i in order]
            seen[key] = (rows, piv)
    return [seen[k] for k in sorted(seen)]


def submodule_lattice(module: ModuleRep) -> list[tuple[list[list[int]], list[int]]]:
    """Every submodule: cyclic submodules closed under pairwise sums."""
    F = module.algebra.field
    items: dict[tuple, tuple] = {(): ([], [])}
    work = []
    for ech, piv in all_cyclic_submodules(module):
        key = subspace_key(ech)
        if key not in items:
            items[key] = (ech, piv)
            work.append((ech, piv))
    while work:
        ech_a, _ = work.pop()
        for key_b in list(items):
            ech_b, _ = items[key_b]
            ech, piv = rref(F, [list(r) for r in ech_a] + [list(r) for r in ech_b])
            key = subspace_key(ech)
            if key not in items:
                items[key] = (ech, piv)
                work.append((ech, piv))
                if len(items) > _LATTICE_LIMIT:
                    raise HopfRepError("submodule lattice exceeds the oracle limit")
    return [items[k] for k in sorted(items)]


def proper_submodule_exists(module: ModuleRep):
    """Rows of some proper nonzero submodule, or None (exhaustive search)."""
    F = module.algebra.field
    d = module.dim
    for v in _projective_reps(F.q, d):
        ech, piv = rref(F, _one_shot_spin_rows(module, v))
        if 0 < len(ech) < d:
            return ech
    return None


def exhaustive_composition_factors(module: ModuleRep) -> list[ModuleRep]:
    """Composition factors (with repetition) from a maximal lattice chain."""
    if module.dim == 0:
        return []
    lattice = submodule_lattice(module)
    by_dim = sorted(lattice, key=lambda t: (len(t[0]), subspace_key(t[0])))
    F = module.algebra.field
    chain = [([], [])]
    current_key = ()
    current_dim = 0
    while current_dim < module.dim:
        # Minimal-dimension strict superset of the current term; minimality of
        # dimension rules out anything strictly between.
        nxt = None
        for ech, piv in by_dim:
            if len(ech) <= current_dim:
                continue
            cur_ech, cur_piv = chain[-1]
            if all(
                coords_in_echelon(F, list(r), ech, piv) is not None for r in cur_ech
            ):
                nxt = (ech, piv)
                break
        if nxt is None:
            raise HopfRepError("lattice chain construction failed")
        chain.append(nxt)
        current_dim = len(nxt[0])
    factors = []
    for (low_ech, _low_piv), (high_ech, high_piv) in zip(chain, chain[1:]):
        step = submodule_rep(module, high_ech, high_piv)
        low_coords = []
        for r in low_ech:
            c = coords_in_echelon(F, list(r), high_ech, high_piv)
            if c is None:
                raise HopfRepError("chain inclusion failed")
            low_coords.append(c)
        ech, piv = rref(F, low_coords)
        factors.append(quotient_module(step, ech, piv))
    return factors
