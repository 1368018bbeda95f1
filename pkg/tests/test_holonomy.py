import os
import random
from fractions import Fraction as F

import pytest

from gtassoc.holonomy import (BnElt, CacheError, HoloAlgebra, HoloElt, embed_free,
                              hilbert_dimensions, load_cache, save_cache,
                              transposition, phi_tilde_eval, phi_tilde_generators)
from gtassoc.ncseries import NCSeries, commutator


def hilbert_oracle(n, maxdeg):
    """Expand prod_{i=1}^{n-1} 1/(1-i t) by explicit long multiplication."""
    coeffs = [F(1)] + [F(0)] * maxdeg
    for i in range(1, n):
        # multiply by sum_k (i t)^k
        out = [F(0)] * (maxdeg + 1)
        for k in range(maxdeg + 1):
            acc = F(0)
            for j in range(k + 1):
                acc += coeffs[j] * F(i) ** (k - j)
            out[k] = acc
        coeffs = out
    return [int(c) for c in coeffs]


def test_hilbert_series_against_oracle():
    assert hilbert_dimensions(4, 6) == hilbert_oracle(4, 6) == [1, 6, 25, 90, 301, 966, 3025]
    assert hilbert_dimensions(3, 6) == hilbert_oracle(3, 6)
    assert hilbert_dimensions(2, 4) == [1, 1, 1, 1, 1]


def test_dimensions_match_hilbert():
    for n, maxdeg in ((2, 4), (3, 5), (4, 4)):
        alg = HoloAlgebra(n, maxdeg)
        assert alg.dimensions() == hilbert_oracle(n, maxdeg)


def test_degree_one_no_relations():
    alg = HoloAlgebra(3, 2)
    assert len(alg.basis_words(1)) == 3


def test_relations_reduce_to_zero_with_sandwiches():
    rng = random.Random(7)
    for n, maxdeg in ((3, 4), (4, 4)):
        alg = HoloAlgebra(n, maxdeg)
        letters = range(len(alg.letters))
        for rel in alg.relation_words():
            assert alg.reduce_terms(rel).is_zero()
            for _ in range(6):
                a = bytes(rng.choices(letters, k=rng.randint(0, 2)))
                b = bytes(rng.choices(letters, k=rng.randint(0, 2)))
                sandwich = {a + w + b: c for w, c in rel.items()}
                assert alg.reduce_terms(sandwich).is_zero()


def _relation_span_rank(alg, degree):
    """Independent oracle: rank of the degree-d relation span by dict-based
    Gaussian elimination over Q on free words."""
    rows = []
    letters = list(range(len(alg.letters)))
    rels = alg.relation_words()

    def all_words(d):
        if d == 0:
            return [b""]
        return [bytes(w) for w in __import__("itertools").product(letters, repeat=d)]

    for rel in rels:
        rel_deg = len(next(iter(rel)))
        for da in range(degree - rel_deg + 1):
            db = degree - rel_deg - da
            for a in all_words(da):
                for b in all_words(db):
                    rows.append({a + w + b: c for w, c in rel.items()})
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)  # graded-lex pivot inside one degree
            if lead in pivots:
                piv = pivots[lead]
                factor = row[lead] / piv[lead]
                for w, c in piv.items():
                    val = row.get(w, F(0)) - factor * c
                    if val:
                        row[w] = val
                    elif w in row:
                        del row[w]
            else:
                pivots[lead] = row
                rank += 1
                break
    return rank


@pytest.mark.parametrize("n,degree", [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3)])
def test_gaussian_elimination_cross_check(n, degree):
    # dual route: free dim - relation span rank equals the normal-form count
    alg = HoloAlgebra(n, max(degree, 2))
    free_dim = len(alg.letters) ** degree
    rank = _relation_span_rank(alg, degree)
    assert free_dim - rank == len(alg.basis_words(degree))


def test_reduction_idempotent_and_linear():
    alg = HoloAlgebra(4, 3)
    rng = random.Random(3)
    words = alg.basis_words(2) + alg.basis_words(3)
    for _ in range(5):
        pick = rng.sample(words, 6)
        elt = HoloElt(alg, {w: F(rng.randint(-4, 4), rng.randint(1, 3)) for w in pick})
        again = alg.reduce_terms(dict(elt.terms))
        assert again == elt


def test_centrality_and_commuting_y():
    for n in (3, 4):
        alg = HoloAlgebra(n, 4)
        z = alg.z_element(n)
        for k in range(len(alg.letters)):
            gen = HoloElt(alg, {bytes((k,)): F(1)})
            assert z.commutator(gen).is_zero()
        ys = [alg.y_element(r) for r in range(2, n + 1)]
        for i in range(len(ys)):
            for j in range(i + 1, len(ys)):
                assert ys[i].commutator(ys[j]).is_zero()


def test_disjoint_and_triple_relations_in_u4():
    alg = HoloAlgebra(4, 3)
    t12, t34 = alg.generator(1, 2), alg.generator(3, 4)
    assert t12.commutator(t34).is_zero()
    assert t12.commutator(alg.generator(1, 3) + alg.generator(2, 3)).is_zero()


def test_embed_free_multiplicative_and_relations_vanish():
    alg = HoloAlgebra(4, 4)
    AB = ("x", "y")
    one = NCSeries.one(AB, 4)
    x = NCSeries.letter(AB, "x", 4)
    y = NCSeries.letter(AB, "y", 4)
    f = one + x * y - 2 * y
    g = one - x + F(1, 3) * y * y
    images = {"x": alg.generator(1, 2) + alg.generator(1, 3),
              "y": alg.generator(2, 4) + alg.generator(3, 4)}
    assert (embed_free(f, alg, images) * embed_free(g, alg, images)).equal_through(
        embed_free(f * g, alg, images))
    # embedding of the commutator [x, y] with x -> t12, y -> t12+t13+t23 is zero
    center_images = {"x": alg.generator(1, 2),
                     "y": alg.generator(1, 2) + alg.generator(1, 3) + alg.generator(2, 3)}
    emb = embed_free(commutator(x, y), alg, center_images)
    assert emb.is_zero()


def test_exp_log_inverse_on_elements():
    alg = HoloAlgebra(3, 4)
    u = alg.generator(1, 2) + 2 * alg.generator(2, 3)
    assert u.exp().log().equal_through(u)
    g = u.exp()
    assert (g * g.inverse()).is_one()


def test_permutation_action():
    alg = HoloAlgebra(4, 3)
    s2 = transposition(4, 2)
    assert alg.generator(1, 2).permuted(s2) == alg.generator(1, 3)
    s3 = transposition(4, 3)
    assert alg.generator(3, 4).permuted(s3) == alg.generator(3, 4)
    prod = alg.generator(1, 2) * alg.generator(2, 3)
    back = prod.permuted(s2).permuted(s2)
    assert back == prod


def test_bn_elt_group_structure():
    alg = HoloAlgebra(4, 3)
    s = BnElt.from_perm(alg, transposition(4, 2))
    assert (s * s) == BnElt.unit(alg)
    g = s * BnElt.from_holo(alg.one() + alg.generator(1, 2))
    assert (g * g.inverse()).equal_through(BnElt.unit(alg))
    with pytest.raises(ValueError):
        (s + BnElt.unit(alg)).inverse()


def test_phi_tilde_delta_images(phi0):
    # the delta_r images are exp(lam Y_r), verified symbolically in the
    # 4-strand braid algebra
    from gtassoc.braids import delta_word
    alg = HoloAlgebra(4, 4)
    series = phi0.series.truncated(4)
    gens = phi_tilde_generators(series, 1, alg)
    for r in (2, 3, 4):
        img = phi_tilde_eval(gens, alg, delta_word(4, r))
        expect = BnElt.from_holo(alg.y_element(r).exp())
        assert img.equal_through(expect), r


def test_resource_bound():
    with pytest.raises(ValueError):
        HoloAlgebra(4, 8)


def test_cache_round_trip(tmp_path):
    alg = HoloAlgebra(3, 3)
    path = str(tmp_path / "h.cache")
    save_cache(alg, path)
    first = open(path).read()
    loaded = load_cache(path)
    save_cache(loaded, path)
    assert open(path).read() == first
    assert loaded.dimensions() == alg.dimensions()
    for rel in alg.relation_words():
        assert loaded.reduce_terms(rel).is_zero()


def test_cache_version_mismatch(tmp_path):
    alg = HoloAlgebra(3, 2)
    path = str(tmp_path / "h.cache")
    save_cache(alg, path)
    body = open(path).read().replace("version=1", "version=99")
    open(path, "w").write(body)
    with pytest.raises(CacheError):
        load_cache(path)


def test_stale_cache_triggers_rebuild_with_warning(tmp_path, monkeypatch):
    import warnings
    from gtassoc import holonomy
    alg = HoloAlgebra(3, 2)
    cache_dir = str(tmp_path)
    path = holonomy.cache_path(cache_dir, 3, 2)
    save_cache(alg, path)
    body = open(path).read().replace("version=1", "version=99")
    open(path, "w").write(body)
    monkeypatch.setattr(holonomy, "_REGISTRY", {})
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rebuilt = holonomy.holonomy_algebra(3, 2, cache_dir=cache_dir)
    assert rebuilt.dimensions() == alg.dimensions()
    assert any("rebuilding" in str(w.message) for w in caught)
