#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilrad/catalog.hpp"
#include "nilrad/derivations.hpp"
#include "nilrad/errors.hpp"
#include "nilrad/series.hpp"

using namespace nilrad;

namespace {

Subspace coord_span(int ambient, std::initializer_list<int> indices) {
    std::vector<Vec> vs;
    for (int i : indices) vs.push_back(unit_vec(ambient, i - 1));
    return Subspace::span(ambient, vs);
}

// the smallest solvable non-nilpotent algebra: [e1, e2] = e1
StructureTable affine_line() {
    return StructureTable::from_brackets(2, {{1, 2, {{1, rat(1)}}}});
}

std::vector<std::string> coverage_ids() {
    std::vector<std::string> ids = catalog_ids();
    for (const char* extra : {"abelian(3)", "abelian(4)", "heisenberg(2)", "heisenberg(3)",
                              "filiform(5)", "filiform(6)", "t(3)", "t(4)"})
        ids.push_back(extra);
    return ids;
}

} // namespace

TEST_CASE("lower central series of the catalog examples") {
    StructureTable a41 = catalog_lookup("A_4_1").table;
    SeriesChain lc = characteristic_series(a41, SeriesKind::lower_central);
    CHECK(lc.dims() == std::vector<int>{4, 2, 1, 0});
    CHECK(nilindex(a41) == 3);

    StructureTable ab = catalog_lookup("abelian(5)").table;
    CHECK(characteristic_series(ab, SeriesKind::lower_central).dims() == std::vector<int>{5, 0});
    CHECK(nilindex(ab) == 1);
    CHECK(is_abelian(ab));

    StructureTable a52 = catalog_lookup("A_5_2").table;
    CHECK(characteristic_series(a52, SeriesKind::lower_central).dims() ==
          std::vector<int>{5, 3, 2, 1, 0});
    CHECK(nilindex(a52) == 4);
}

TEST_CASE("predicates on a solvable non-nilpotent algebra") {
    StructureTable t = affine_line();
    CHECK(is_solvable(t));
    CHECK_FALSE(is_nilpotent(t));
    CHECK_THROWS_AS(nilindex(t), not_nilpotent_error);
    SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
    CHECK(lc.dims() == std::vector<int>{2, 1}); // stabilizes at a nonzero term
}

TEST_CASE("first derived term equals the second lower central term") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        SeriesChain dc = characteristic_series(t, SeriesKind::derived);
        SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
        if (dc.terms.size() > 1 && lc.terms.size() > 1) CHECK(dc.terms[1] == lc.terms[1]);
        if (dc.terms.size() == 1) CHECK(lc.terms.size() == 1);
    }
}

TEST_CASE("lower central terms bracket into the sum of indices") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
        auto term = [&](size_t k) { // n^k, k >= 1, zero past stabilization
            return k - 1 < lc.terms.size() ? lc.terms[k - 1] : lc.terms.back();
        };
        size_t K = lc.terms.size();
        for (size_t j = 1; j <= K; ++j)
            for (size_t k = 1; k + j <= K + 1; ++k)
                CHECK(term(j + k).contains(bracket_subspaces(t, term(j), term(k))));
    }
}

TEST_CASE("upper central series reaches the whole algebra iff nilpotent") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        SeriesChain uc = characteristic_series(t, SeriesKind::upper_central);
        CHECK(uc.reaches_full() == is_nilpotent(t));
    }
    StructureTable t = affine_line();
    SeriesChain uc = characteristic_series(t, SeriesKind::upper_central);
    CHECK_FALSE(uc.reaches_full());
    CHECK(uc.terms.empty()); // the center is already zero
    CHECK_FALSE(is_nilpotent(t));
}

TEST_CASE("centralizer examples") {
    StructureTable a41 = catalog_lookup("A_4_1").table;
    SeriesChain lc = characteristic_series(a41, SeriesKind::lower_central);
    CHECK(centralizer(a41, lc.terms[1]) == coord_span(4, {1, 2, 3}));
    CHECK(centralizer(a41, Subspace::zero(4)) == Subspace::full(4));

    StructureTable a613 = catalog_lookup("A_6_13").table;
    Subspace n2 = characteristic_series(a613, SeriesKind::lower_central).terms[1];
    CHECK(centralizer(a613, n2) == coord_span(6, {3, 4, 5, 6}));
}

TEST_CASE("centralizer contains the center") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        Subspace center = centralizer(t, Subspace::full(t.dim()));
        SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
        for (const auto& term : lc.terms) CHECK(centralizer(t, term).contains(center));
    }
}

TEST_CASE("relative ideal identities") {
    StructureTable a53 = catalog_lookup("A_5_3").table;
    Subspace full = Subspace::full(5);
    CHECK(relative_ideal(a53, coord_span(5, {1, 2, 3}), full) == full);
    // solving [x, e_k] in n^3 = span{e1,e2} over the A_5_3 brackets forces
    // the e4 and e5 components of x to vanish
    SeriesChain lc = characteristic_series(a53, SeriesKind::lower_central);
    CHECK(relative_ideal(a53, full, lc.terms[2]) == coord_span(5, {1, 2, 3}));
}

TEST_CASE("relative ideal with zero target is the centralizer") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
        for (const auto& h : lc.terms)
            CHECK(relative_ideal(t, h, Subspace::zero(t.dim())) == centralizer(t, h));
    }
}

TEST_CASE("series terms and relative ideals are derivation invariant") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        DerivationSpace der = derivation_space(t);
        std::vector<Subspace> spaces;
        for (auto kind :
             {SeriesKind::derived, SeriesKind::lower_central, SeriesKind::upper_central})
            for (const auto& term : characteristic_series(t, kind).terms) spaces.push_back(term);
        SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
        if (lc.terms.size() > 2)
            spaces.push_back(relative_ideal(t, lc.terms[0], lc.terms[2]));
        for (const auto& v : spaces)
            for (const auto& d : der.basis)
                for (int r = 0; r < v.dim(); ++r)
                    CHECK(v.contains_vec(mat_apply(d, v.basis_row(r))));
    }
}

TEST_CASE("associated graded algebra of the catalog") {
    StructureTable ab = catalog_lookup("abelian(4)").table;
    GradedAlgebra gab = associated_graded(ab);
    CHECK(gab.layer_dims == std::vector<int>{4});
    CHECK(gab.table == ab);

    GradedAlgebra g53 = associated_graded(catalog_lookup("A_5_3").table);
    CHECK(g53.layer_dims == std::vector<int>{2, 1, 2});

    GradedAlgebra g615 = associated_graded(catalog_lookup("A_6_15").table);
    CHECK(g615.layer_dims == std::vector<int>{3, 1, 1, 1});
    // the bracket of the two layer-1 generators outside the center lands on
    // the class of e3 + e5, the single layer-2 basis vector
    auto [lo, hi] = g615.layer_range(2);
    REQUIRE(hi - lo == 1);
    Vec rep = g615.rep_of_index(lo);
    Vec expected = vec_zero(6);
    expected[2] = rat(1);
    expected[4] = rat(1);
    CHECK(rep == expected);
    Vec prod = g615.table.bracket_basis(0, 1); // graded [e1bar, e2bar]
    CHECK(prod == unit_vec(6, lo));

    CHECK_THROWS_AS(associated_graded(affine_line()), not_nilpotent_error);
}

TEST_CASE("graded algebras satisfy Jacobi and respect degrees") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        GradedAlgebra g = associated_graded(t);
        CHECK(validate_lie_algebra(g.table).ok);
        int sum = 0;
        for (int mk : g.layer_dims) sum += mk;
        CHECK(sum == t.dim());
        for (const auto& [jk, rhs] : g.table.entries()) {
            int deg = g.layer_of_index[jk.first] + g.layer_of_index[jk.second];
            for (const auto& [slot, c] : rhs) CHECK(g.layer_of_index[slot] == deg);
        }
        SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
        for (size_t k = 0; k + 1 < lc.terms.size(); ++k)
            CHECK(g.layer_dims[k] == lc.terms[k].dim() - lc.terms[k + 1].dim());
    }
}

TEST_CASE("non-abelian nilpotent algebras have at least two generators") {
    for (const auto& id : coverage_ids()) {
        StructureTable t = catalog_lookup(id).table;
        if (is_abelian(t)) continue;
        GradedAlgebra g = associated_graded(t);
        CHECK(g.layer_dims[0] >= 2);
    }
}
