#include <catch2/catch_amalgamated.hpp>

#include "sasakian/matrix.hpp"
#include "sasakian/rational.hpp"
#include "sasakian/sym_index.hpp"

using namespace sasakian;

TEST_CASE("rational literals parse exactly") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("-5/2") == Rational(-5, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));  // canonicalized on construction
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(Rational(4, 2)) == "2");

    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("a"), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational("1/ 2"), input_error);
    CHECK_THROWS_AS(parse_rational("--1"), input_error);
}

TEST_CASE("canonicality predicate sees reduced representations") {
    CHECK(is_canonical(Rational(3, 2)));
    CHECK(is_canonical(Rational(0)));
    CHECK(is_canonical(parse_rational("10/5")));
}

TEST_CASE("rref computes rank, kernel and inverse exactly") {
    QMat m(3, 3);
    // Rows: (1 2 3), (2 4 6), (1 0 1) — rank 2.
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    m.at(2, 0) = 1; m.at(2, 1) = 0; m.at(2, 2) = 1;
    CHECK(rank(m) == 2);
    CHECK(det(m) == 0);

    const auto kernel = kernel_basis_vectors(m);
    REQUIRE(kernel.size() == 1);
    for (const QVec& v : kernel) CHECK(is_zero(m.apply(v)));
    CHECK(kernel[0][0] == 1);  // leading coordinate normalized to +1

    QMat inv_able(2, 2);
    inv_able.at(0, 0) = 2; inv_able.at(0, 1) = 1;
    inv_able.at(1, 0) = 7; inv_able.at(1, 1) = 4;
    const auto inv = inverse(inv_able);
    REQUIRE(inv.has_value());
    CHECK((inv_able * *inv) == QMat::identity(2));
    CHECK(det(inv_able) == 1);

    QMat singular(2, 2);
    singular.at(0, 0) = 1; singular.at(0, 1) = 2;
    singular.at(1, 0) = 2; singular.at(1, 1) = 4;
    CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("solve returns a particular solution or nothing") {
    QMat m(2, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 0;
    m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 1;
    const auto x = solve(m, QVec{Rational(3), Rational(5)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == QVec{Rational(3), Rational(5)});

    QMat inconsistent(2, 1);
    inconsistent.at(0, 0) = 1;
    inconsistent.at(1, 0) = 1;
    CHECK_FALSE(solve(inconsistent, QVec{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("row span incremental membership") {
    RowSpan span(3);
    CHECK(span.insert(QVec{Rational(1), Rational(0), Rational(1)}));
    CHECK(span.insert(QVec{Rational(0), Rational(1), Rational(1)}));
    CHECK_FALSE(span.insert(QVec{Rational(1), Rational(1), Rational(2)}));  // dependent
    CHECK(span.dim() == 2);
    CHECK(span.contains(QVec{Rational(2), Rational(-3), Rational(-1)}));
    CHECK_FALSE(span.contains(QVec{Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("matrix product and transpose agree with apply") {
    QMat a(2, 3), b(3, 2);
    int v = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = v++;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) b.at(i, j) = v++;
    const QMat ab = a * b;
    for (int j = 0; j < 2; ++j) CHECK(ab.col(j) == a.apply(b.col(j)));
    CHECK(a.transpose().transpose() == a);
}

TEST_CASE("symmetric pair indexing is a lex bijection") {
    const Sym2Index s3(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.pairs[0] == std::pair<int, int>(0, 0));
    CHECK(s3.pairs[1] == std::pair<int, int>(0, 1));
    CHECK(s3.pairs[5] == std::pair<int, int>(2, 2));
    for (int idx = 0; idx < s3.size(); ++idx) {
        const auto [i, j] = s3.pairs[idx];
        CHECK(s3.index_of(i, j) == idx);
        CHECK(s3.index_of(j, i) == idx);
    }
    CHECK(Sym2Index(0).size() == 0);
    CHECK(Sym2Index(1).size() == 1);
}

TEST_CASE("symmetric quadruple indexing sorts its argument") {
    const Sym4Index s2(2);
    REQUIRE(s2.quads.size() == 5);  // 0000 0001 0011 0111 1111
    CHECK(s2.index_of({1, 0, 1, 0}) == s2.index_of({0, 0, 1, 1}));
    CHECK(s2.index_of({1, 1, 1, 1}) == 4);
    const Sym4Index s3(3);
    CHECK(s3.quads.size() == 15);  // multisets of size 4 from 3 symbols: C(6,4)
}
