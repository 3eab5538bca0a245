"""Shared builders for tests: small groups, random parameters, random kappas."""

import itertools
import random
from pathlib import Path

from qhecke.freealg import Alphabet, Polynomial
from qhecke.group import generate
from qhecke.qdha import KappaParam, QuantumParams
from qhecke.scalar import QQ, cyclotomic_field

FIXTURES = Path(__file__).parent / "fixtures"

D8_GENS = [[[0, 0, 1], [0, -1, 0], [1, 0, 0]], [[1, 0, 0], [0, -1, 0], [0, 0, -1]]]


def d8(field=QQ):
    return generate(D8_GENS, field)


def small_groups(field=QQ):
    """C2, C3, S3, D8 as matrix groups."""
    return {
        "C2": generate([[[-1]]], field),
        "C3": generate([[[0, -1], [1, -1]]], field),
        "S3": generate([[[0, 1], [1, 0]], [[0, -1], [1, -1]]], field),
        "D8": d8(field),
    }


def group_algebra_relations(G):
    """x_g x_h - x_gh over non-identity g, h (x_e = 1), letters t2..t|G|."""
    alpha = Alphabet([f"t{g + 1}" for g in range(1, len(G))])
    fld = G.field
    rels = []
    for g in range(1, len(G)):
        for h in range(1, len(G)):
            gh = G.mul(g, h)
            rhs = Polynomial.constant(fld, 1) if gh == 0 else Polynomial.monomial(fld, (gh - 1,))
            rels.append(Polynomial.monomial(fld, (g - 1, h - 1)) - rhs)
    return alpha, rels


def fixture_text(name):
    return (FIXTURES / name).read_text()


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------

F8 = cyclotomic_field(8)
Z8 = F8.zeta()


def generator_pool(n, F=F8):
    z = F.zeta()
    i = z ** (F.conductor // 4) if F.conductor % 4 == 0 else None
    if n == 2:
        pool = [
            [[-1, 0], [0, -1]],
            [[0, 1], [1, 0]],
            [[0, -1], [1, 0]],
            [[-1, 0], [0, 1]],
            [[0, -1], [1, -1]],
            [[z, 0], [0, z.inverse()]],
            [[z, 0], [0, 1]],
            [[0, z], [z.inverse(), 0]],
            [[1, 0], [0, -1]],
        ]
        if i is not None:
            pool += [[[i, 0], [0, -i]], [[0, i], [i, 0]]]
    else:
        pool = [
            [[-1, 0, 0], [0, -1, 0], [0, 0, -1]],
            [[0, 0, 1], [0, -1, 0], [1, 0, 0]],
            [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
            [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
            [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
            [[z, 0, 0], [0, z.inverse(), 0], [0, 0, 1]],
            [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[z ** 2, 0, 0], [0, 1, 0], [0, 0, z ** -2]],
            [[0, -1, 0], [1, -1, 0], [0, 0, 1]],
            [[1, 0, 0], [0, 0, -1], [0, 1, 0]],
        ]
    return pool


def random_group(rng, n, F=F8, max_order=8):
    pool = generator_pool(n, F)
    while True:
        k = rng.choice([0, 1, 1, 2])
        gens = rng.sample(pool, k)
        try:
            G = generate(gens, F, n=n, cap=max_order)
        except ValueError:
            continue
        return G


def random_q(rng, n, F=F8, values=None, qps=True):
    z = F.zeta()
    values = values or [1, -1, z, z.inverse(), 2, F(1) / 2, z ** 2]
    upper = {(i, j): rng.choice(values) for i in range(n) for j in range(i + 1, n)}
    Q = QuantumParams.from_upper(n, upper, F)
    if qps:
        return Q
    rows = [list(r) for r in Q.q]
    i, j = rng.sample(range(n), 2)
    rows[i][j] = rows[i][j] * 2
    return QuantumParams(rows, F)


def random_kappa(rng, n, G, F=F8, density=0.3):
    z = F.zeta()
    vals = [1, -1, z, -z]
    entries = {}
    for g in range(len(G)):
        for i, j in itertools.combinations(range(n), 2):
            if rng.random() < density:
                entries[(g, i, j)] = rng.choice(vals)
    return KappaParam(entries, F)


def combine(basis, rng, F=F8):
    """A random combination of solution-space basis vectors."""
    z = F.zeta()
    out = {}
    for b in basis:
        c = rng.choice([1, -1, 2, z, 1 + z])
        for k, v in b.entries.items():
            out[k] = out.get(k, F.zero()) + c * v
    return KappaParam(out, F)


def make_rng(seed):
    return random.Random(seed)


# criterion key -> "criterion K: PASS|FAIL  title" (filled by test_acceptance, printed by conftest)
ACCEPTANCE_LINES = {}
