import random
from fractions import Fraction

import pytest

from semifree.algebra import UniPoly, X
from semifree.cube import (
    CubeClass,
    ModelData,
    all_subsets,
    alpha_class,
    beta_class,
    equivariant_chern_series,
    express_in_basis,
    hypercube_data,
    injectivity_rank_check,
    restrict_class,
    subset_id,
)
from semifree.errors import ZeroIsCritical


def random_class(rng, n, max_terms=4, max_y=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        size = rng.randint(0, n)
        S = tuple(sorted(rng.sample(range(1, n + 1), size)))
        terms[(S, rng.randint(0, max_y))] = rng.randint(-5, 5)
    return CubeClass(terms)


class TestRestrict:
    def test_generator_restrictions(self):
        a1 = CubeClass.gen_a(1)
        assert restrict_class(a1, {1}) == X
        assert restrict_class(a1, {2}) == UniPoly()

    def test_defining_relation_dies(self):
        for J in all_subsets(3):
            for i in range(1, 4):
                rel = CubeClass.gen_a(i) * CubeClass.gen_y() - CubeClass.gen_a(i) ** 2
                assert not rel  # already zero in normal form
                # and the factors restrict compatibly
                ai = restrict_class(CubeClass.gen_a(i), J)
                y = restrict_class(CubeClass.gen_y(), J)
                assert ai * y == ai * ai

    def test_pair_product_restriction(self):
        cls = alpha_class({1, 2})
        assert restrict_class(cls, {1, 2, 3}) == UniPoly.monomial(1, 2)

    def test_y_restricts_to_x_everywhere(self):
        for J in all_subsets(2):
            assert restrict_class(CubeClass.gen_y(), J) == X


class TestAlphaClass:
    def test_unit(self):
        unit = alpha_class(frozenset())
        for J in all_subsets(3):
            assert restrict_class(unit, J) == UniPoly([1])

    def test_singleton(self):
        a1 = alpha_class({1})
        assert restrict_class(a1, {1, 2}) == X
        assert restrict_class(a1, {2}) == UniPoly()

    def test_pair(self):
        cls = alpha_class({1, 2})
        assert restrict_class(cls, {1, 2}) == UniPoly.monomial(1, 2)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_support_rule(self, n):
        for J in all_subsets(n):
            cls = alpha_class(J)
            for Jp in all_subsets(n):
                expected = (
                    UniPoly.monomial(1, len(J)) if J <= Jp else UniPoly()
                )
                assert restrict_class(cls, Jp) == expected


class TestBetaClass:
    def test_full_subset_is_unit(self):
        assert beta_class(frozenset(range(1, 4)), 3) == CubeClass.unit()

    def test_n2_singleton(self):
        b = beta_class({1}, 2)  # y - a2
        assert restrict_class(b, frozenset()) == X
        assert restrict_class(b, {1}) == X
        assert restrict_class(b, {2}) == UniPoly()
        assert restrict_class(b, {1, 2}) == UniPoly()

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_support_rule(self, n):
        for J in all_subsets(n):
            b = beta_class(J, n)
            for Jp in all_subsets(n):
                expected = (
                    UniPoly.monomial(1, n - len(J)) if Jp <= J else UniPoly()
                )
                assert restrict_class(b, Jp) == expected

    def test_bottom_class(self):
        b = beta_class(frozenset(), 3)
        assert restrict_class(b, frozenset()) == UniPoly.monomial(1, 3)
        for J in all_subsets(3):
            if J:
                assert restrict_class(b, J) == UniPoly()


class TestChernSeries:
    def test_n1(self):
        (c1,) = equivariant_chern_series(1, 1)
        assert c1 == 2 * CubeClass.gen_a(1) - CubeClass.gen_y()

    def test_n2(self):
        c1, c2 = equivariant_chern_series(2, 2)
        a1, a2, y = CubeClass.gen_a(1), CubeClass.gen_a(2), CubeClass.gen_y()
        assert c1 == 2 * a1 + 2 * a2 - 2 * y
        assert c2 == (2 * a1 - y) * (2 * a2 - y)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_top_class_restriction_is_unimodular(self, n):
        cn = equivariant_chern_series(n, n)[-1]
        top = frozenset(range(1, n + 1))
        r = restrict_class(cn, top)
        assert r.degree == n
        assert abs(r.coefficient(n)) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_restriction_gives_weight_chern_classes_up_to_sign(self, n):
        # at J the factor (2a_i - y) restricts to x for i in J and -x
        # otherwise: the opposite of the tangent convention, globally
        classes = equivariant_chern_series(n, n)
        for J in all_subsets(n):
            signs = [1 if i in J else -1 for i in range(1, n + 1)]
            series = [UniPoly([1])]
            for s in signs:
                new = [UniPoly() for _ in range(len(series) + 1)]
                for k, c in enumerate(series):
                    new[k] = new[k] + c
                    new[k + 1] = new[k + 1] + c * UniPoly.monomial(s, 1)
                series = new
            for i, cls in enumerate(classes, start=1):
                assert restrict_class(cls, J) == series[i]


class TestInjectivity:
    def test_n1_unit(self):
        report = injectivity_rank_check(1)
        assert report.entries[0].rank == 1

    def test_n2_degree1(self):
        report = injectivity_rank_check(2)
        entry = next(e for e in report.entries if e.degree == 1)
        assert entry.basis_size == 3 and entry.rank == 3

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_full_rank_all_degrees(self, n):
        assert injectivity_rank_check(n).passed


class TestExpressInBasis:
    def test_y_is_x_times_unit(self):
        out = express_in_basis(CubeClass.gen_y(), 1)
        assert out == {frozenset(): X}

    def test_a1_squared(self):
        sq = CubeClass.gen_a(1) * CubeClass.gen_a(1)
        out = express_in_basis(sq, 1)
        assert out == {frozenset({1}): X}

    def test_basis_element_is_itself(self):
        out = express_in_basis(alpha_class({1, 3}), 3)
        assert out == {frozenset({1, 3}): UniPoly([1])}

    def test_round_trip_random(self):
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(1, 4)
            cls = random_class(rng, n)
            out = express_in_basis(cls, n)
            rebuilt = CubeClass()
            for J, poly in out.items():
                for i in range(poly.degree + 1):
                    c = poly.coefficient(i)
                    assert c.denominator == 1
                    rebuilt = rebuilt + int(c) * (
                        alpha_class(J) * CubeClass.gen_y() ** i
                    )
            assert rebuilt == cls

    def test_zero_class_detection(self):
        # a class restricting to zero everywhere expands to nothing
        assert express_in_basis(CubeClass(), 3) == {}


class TestRingProperties:
    def test_restriction_is_multiplicative(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(1, 4)
            f, g = random_class(rng, n), random_class(rng, n)
            J = frozenset(rng.sample(range(1, n + 1), rng.randint(0, n)))
            assert restrict_class(f * g, J) == restrict_class(f, J) * restrict_class(g, J)

    def test_alpha_products_expand_over_unions(self):
        rng = random.Random(23)
        for n in (2, 3, 4):
            subsets = all_subsets(n)
            for J in subsets:
                for Jp in subsets:
                    out = express_in_basis(alpha_class(J) * alpha_class(Jp), n)
                    for K in out:
                        assert K >= (J | Jp)

    def test_beta_bottom_times_alpha(self):
        n = 3
        bottom = beta_class(frozenset(), n)
        for J in all_subsets(n):
            product = bottom * alpha_class(J)
            for Jp in all_subsets(n):
                r = restrict_class(product, Jp)
                if Jp or J:
                    assert r == UniPoly()
                else:
                    assert r == UniPoly.monomial(1, n)


class TestModelData:
    def test_default_offsets(self):
        assert ModelData(3).c == Fraction(3, 2)
        assert ModelData(4).c == Fraction(5, 2)

    def test_regular_level_enforced(self):
        with pytest.raises(ZeroIsCritical):
            ModelData(2, Fraction(1)).require_regular()

    def test_hypercube_moment_split(self):
        data = hypercube_data(3, with_moment=True)
        low = [p for p in data.points if p.moment_value < 0]
        assert len(low) == 4

    def test_subset_ids(self):
        assert subset_id(frozenset()) == "p"
        assert subset_id({3, 1}) == "p13"
