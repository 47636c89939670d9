#include <catch2/catch_amalgamated.hpp>

#include "whittle/integer_matrix.hpp"
#include "whittle/smith.hpp"

#include <random>

using namespace whittle;

namespace {

bool is_diagonal_with_chain(const IntegerMatrix& d)
{
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0)
                return false;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d(i, i) < 0)
            return false;
        if (d(i, i) == 0 && d(i + 1, i + 1) != 0)
            return false;
        if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0)
            return false;
    }
    return true;
}

void check_snf(const IntegerMatrix& m)
{
    SmithForm s = smith_normal_form(m);
    INFO("M =\n" << m.to_string() << "D =\n" << s.D.to_string());
    CHECK(s.U * m * s.V == s.D);
    CHECK(detail::abs_int(s.U.determinant()) == 1);
    CHECK(detail::abs_int(s.V.determinant()) == 1);
    CHECK(is_diagonal_with_chain(s.D));
}

// Independent oracle for 2x2 inputs: enumerate unimodular U, V with small
// entries and collect every diagonal divisibility-chain form they reach.
std::vector<std::pair<Int, Int>> snf2x2_by_search(const IntegerMatrix& m, int bound)
{
    std::vector<IntegerMatrix> unimodular;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1 || a * d - b * c == -1)
                        unimodular.push_back(IntegerMatrix{{a, b}, {c, d}});
    std::vector<std::pair<Int, Int>> found;
    for (const auto& u : unimodular)
        for (const auto& v : unimodular) {
            IntegerMatrix d = u * m * v;
            if (d(0, 1) != 0 || d(1, 0) != 0)
                continue;
            Int d0 = detail::abs_int(d(0, 0)), d1 = detail::abs_int(d(1, 1));
            if (d0 == 0 && d1 != 0)
                continue;
            if (d0 != 0 && d1 % d0 != 0)
                continue;
            if (std::find(found.begin(), found.end(), std::make_pair(d0, d1)) == found.end())
                found.emplace_back(d0, d1);
        }
    return found;
}

} // namespace

TEST_CASE("SNF of diag(2,3) is diag(1,6)")
{
    IntegerMatrix m{{2, 0}, {0, 3}};
    SmithForm s = smith_normal_form(m);
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 6);
    check_snf(m);

    auto oracle = snf2x2_by_search(m, 3);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0] == std::make_pair(Int(1), Int(6)));
}

TEST_CASE("SNF of the zero matrix")
{
    IntegerMatrix m(3, 2);
    SmithForm s = smith_normal_form(m);
    CHECK(s.D.is_zero());
    CHECK(s.U == IntegerMatrix::identity(3));
    CHECK(s.V == IntegerMatrix::identity(2));
}

TEST_CASE("SNF of [[1,2],[3,4]] is diag(1,2)")
{
    IntegerMatrix m{{1, 2}, {3, 4}};
    SmithForm s = smith_normal_form(m);
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 2);
    check_snf(m);

    auto oracle = snf2x2_by_search(m, 4);
    REQUIRE(!oracle.empty());
    CHECK(std::find(oracle.begin(), oracle.end(), std::make_pair(Int(1), Int(2))) !=
          oracle.end());
}

TEST_CASE("SNF properties on random matrices")
{
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        IntegerMatrix m(size(rng), size(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("integral solve via SNF")
{
    IntegerMatrix m{{2, 0}, {0, 3}};
    auto x = solve_integer(m, {Int(4), Int(9)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(solve_integer(m, {Int(1), Int(0)}).has_value());

    // singular system with and without solution
    IntegerMatrix s{{1, 1}, {1, 1}};
    CHECK(solve_integer(s, {Int(2), Int(2)}).has_value());
    CHECK_FALSE(solve_integer(s, {Int(2), Int(3)}).has_value());
}

TEST_CASE("determinant is exact")
{
    IntegerMatrix m{{2, -3, 1}, {5, 0, 7}, {-1, 4, 2}};
    CHECK(m.determinant() == 2 * (0 * 2 - 7 * 4) - (-3) * (5 * 2 - 7 * (-1)) +
                                 1 * (5 * 4 - 0 * (-1)));
    CHECK(IntegerMatrix::identity(5).determinant() == 1);
    CHECK(IntegerMatrix(3, 3).determinant() == 0);
}
