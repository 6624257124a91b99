import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleychar.catalog import catalog_generators, resolve_group, small_catalog
from cayleychar.errors import GroupTooLarge, InputError
from cayleychar.permgroup import (
    PermGroup,
    Permutation,
    class_of,
    find_class,
    parse_cycles,
    parse_generator_file,
)

perms5 = st.permutations(range(5)).map(lambda xs: Permutation(tuple(xs)))


def brute_classes(G):
    """Conjugation orbits by direct double loop."""
    seen, orbits = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        orbit = {G.mul(G.mul(G.inverse_ids[g], x), g) for g in range(G.order)}
        seen |= orbit
        orbits.append(orbit)
    return orbits


class TestPermutation:
    def test_composition_applies_left_factor_first(self):
        p = parse_cycles("(1 2)", 3)
        q = parse_cycles("(2 3)", 3)
        # 1 -> 2 under p, then 2 -> 3 under q
        assert (p * q)(0) == 2
        assert str(p * q) == "(1 3 2)"

    def test_cycle_string_round_trip(self):
        p = parse_cycles("(3 7 11 8)(4 10 5 6)", 11)
        assert str(p) == "(3 7 11 8)(4 10 5 6)"
        assert p.order() == 4
        assert str(Permutation.identity(4)) == "()"

    @pytest.mark.parametrize(
        "text",
        ["(1 2", "1 2)", "((1 2))", "(1 1)", "(1 9)", "(0 1)", "3", "(1 a)"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(InputError):
            parse_cycles(text, 4)

    def test_not_a_bijection(self):
        with pytest.raises(InputError):
            Permutation((0, 0, 1))

    @given(perms5, perms5, perms5)
    def test_group_axioms(self, a, b, c):
        e = Permutation.identity(5)
        assert (a * b) * c == a * (b * c)
        assert a * e == a == e * a
        assert (a * a.inverse()).is_identity()

    @given(perms5, st.integers(-7, 7))
    def test_power_and_order(self, a, n):
        assert (a ** a.order()).is_identity()
        assert a ** n == (a ** (n % a.order()))
        assert a.order() == math.lcm(*[len(c) for c in a.cycles()] or [1])

    @given(perms5)
    def test_str_parse_round_trip(self, a):
        assert parse_cycles(str(a), 5) == a


class TestGroup:
    @pytest.mark.parametrize(
        "name,order,exponent",
        [
            ("sym:3", 6, 6),
            ("cyclic:12", 12, 12),
            ("mathieu:11", 7920, 1320),
            ("quaternion:8", 8, 4),
            ("dihedral:10", 10, 10),
            ("dihedral:4", 4, 2),
            ("alt:5", 60, 30),
            ("sym:7", 5040, 420),
            ("cyclic:1", 1, 1),
        ],
    )
    def test_orders(self, get_group, name, order, exponent):
        G = get_group(name)
        assert G.order == order
        assert G.exponent == exponent

    def test_identity_first_and_closure(self, get_group):
        G = get_group("sym:4")
        assert G.elements[0].is_identity()
        for i, j in itertools.product(range(G.order), repeat=2):
            assert G.elements[G.mul(i, j)] == G.elements[i] * G.elements[j]

    def test_products_vectorized_matches_mul(self, get_group):
        G = get_group("alt:5")
        rng = np.random.default_rng(0)
        a = rng.integers(0, G.order, 200)
        b = rng.integers(0, G.order, 200)
        got = G.products(a, b)
        assert list(got) == [G.mul(int(x), int(y)) for x, y in zip(a, b)]

    def test_cap(self):
        with pytest.raises(GroupTooLarge) as exc:
            resolve_group("sym:6", cap=100)
        assert exc.value.exit_code == 1

    def test_quaternion_is_not_dihedral(self, get_group):
        Q = get_group("quaternion:8")
        D = get_group("dihedral:8")
        assert sum(1 for o in Q.element_orders if o == 2) == 1
        assert sum(1 for o in D.element_orders if o == 2) == 5

    def test_abelian(self, get_group):
        assert get_group("cyclic:6").is_abelian()
        assert get_group("dihedral:4").is_abelian()
        assert not get_group("sym:3").is_abelian()


SMALL = [n for n in small_catalog(24)]


class TestClasses:
    @pytest.mark.parametrize("name", SMALL)
    def test_classes_match_brute_force(self, get_group, name):
        G = get_group(name)
        orbits = brute_classes(G)
        assert sorted(sorted(o) for o in orbits) == sorted(sorted(c.member_ids) for c in G.classes)

    @pytest.mark.parametrize("name", SMALL)
    def test_class_invariants(self, get_group, name):
        G = get_group(name)
        cls = G.classes
        assert cls[0].member_ids == (0,) and cls[0].label == "1a"
        assert sum(c.size for c in cls) == G.order
        assert len({c.label for c in cls}) == len(cls)
        for c in cls:
            assert c.size * c.centralizer_order == G.order
            assert c.element_order == c.representative.order()
            assert c.label.startswith(str(c.element_order))
            assert len(c.power_map) == G.exponent
            rep = G.index(c.representative)
            for i in range(G.exponent):
                assert c.power_map[i] == G.class_lookup[G.index(c.representative ** i)]
            coprime = [i for i in range(1, c.element_order + 1) if math.gcd(i, c.element_order) == 1]
            closed = all(G.class_lookup[G.index(c.representative ** i)] == c.index for i in coprime)
            assert c.is_rational == closed
            inv = G.class_lookup[G.inverse_ids[rep]]
            assert c.inverse_class == inv

    def test_sym3_classes(self, get_group):
        G = get_group("sym:3")
        assert [(c.label, c.size, c.centralizer_order) for c in G.classes] == [
            ("1a", 1, 6), ("2a", 3, 2), ("3a", 2, 3)
        ]
        assert all(c.is_rational for c in G.classes)

    def test_cyclic_rationality(self, get_group):
        G = get_group("cyclic:5")
        assert [c.is_rational for c in G.classes] == [True, False, False, False, False]
        assert [c.label for c in G.classes] == ["1a", "5a", "5b", "5c", "5d"]

    def test_symmetric_groups_are_rational(self, get_group):
        for n in range(1, 6):
            assert all(c.is_rational for c in get_group(f"sym:{n}").classes)

    def test_m11_classes(self, get_group):
        G = get_group("mathieu:11")
        got = [(c.label, c.size, c.centralizer_order, c.is_rational) for c in G.classes]
        assert got == [
            ("1a", 1, 7920, True), ("2a", 165, 48, True), ("3a", 440, 18, True),
            ("4a", 990, 8, True), ("5a", 1584, 5, True), ("6a", 1320, 6, True),
            ("8a", 990, 8, False), ("8b", 990, 8, False),
            ("11a", 720, 11, False), ("11b", 720, 11, False),
        ]

    def test_lookup_helpers(self, get_group):
        G = get_group("sym:4")
        assert find_class(G, "3A").element_order == 3
        with pytest.raises(InputError):
            find_class(G, "7a")
        with pytest.raises(InputError):
            class_of(G, G.order)
        assert class_of(G, 0) == 0


class TestCatalogAndFiles:
    def test_deterministic(self):
        a = resolve_group("mathieu:11")
        b = resolve_group("mathieu:11")
        assert a.elements == b.elements
        assert [c.label for c in a.classes] == [c.label for c in b.classes]

    @pytest.mark.parametrize("bad", ["sym", "sym:x", "foo:3", "dihedral:7", "quaternion:16", "cyclic:0"])
    def test_unknown_names(self, bad):
        with pytest.raises(InputError):
            catalog_generators(bad)

    def test_generator_file(self, tmp_path):
        f = tmp_path / "s4.gens"
        f.write_text("# Sym(4)\ndegree: 4\n(1 2)\n(1 2 3 4)\n")
        G = resolve_group(f"@{f}")
        assert G.order == 24 and G.degree == 4

    def test_inline_generators(self):
        assert resolve_group("(1 2 3);(1 2)").order == 6

    def test_generator_file_errors(self, tmp_path):
        with pytest.raises(InputError):
            parse_generator_file("# nothing\n")
        with pytest.raises(InputError):
            parse_generator_file("(1 2)\ndegree: 3\n")
        with pytest.raises(InputError):
            resolve_group(f"@{tmp_path / 'missing.gens'}")

    def test_small_catalog_orders(self):
        for name in small_catalog(30):
            if name.startswith(("sym", "alt")):
                assert resolve_group(name).order <= 30
