#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bentkit/errors.hpp"

namespace bentkit {

using BigInt = boost::multiprecision::cpp_int;

// Vector in F_2^m. Coordinate 1 is the most significant bit of `bits`, so the
// bit string "1010" reads left to right as coordinates 1..4.
struct Vec2 {
    int m = 0;
    std::uint32_t bits = 0;

    Vec2() = default;
    Vec2(int m_, std::uint32_t bits_);

    // 1-based coordinate access.
    int coord(int j) const;

    std::string to_string() const;
    static Vec2 from_string(const std::string& s);

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

Vec2 operator^(const Vec2& x, const Vec2& y);

// <x,y> = x_1 y_1 xor ... xor x_m y_m.
int inner_product(const Vec2& x, const Vec2& y);
int parity32(std::uint32_t v);

// Binary matrix, row-major. Rows act on column vectors: (L x)_i = <row_i, x>.
struct Mat2 {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> row_bits;

    static Mat2 identity(int n);
    std::uint32_t apply(std::uint32_t x) const;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 transpose(const Mat2& L);
Mat2 invert(const Mat2& L);  // throws SingularMatrix
Mat2 multiply(const Mat2& A, const Mat2& B);
bool is_invertible(const Mat2& L);
Mat2 random_invertible(int n, std::mt19937_64& rng);

// Canonical coset representation: `basis` is in reduced row echelon form,
// rows sorted by pivot coordinate, and `offset` has zeros at all pivots.
struct AffineSubspace {
    int m = 0;
    int k = 0;
    std::vector<std::uint32_t> basis;
    std::uint32_t offset = 0;

    bool is_linear() const { return offset == 0; }
    bool contains(std::uint32_t v) const;
    // All 2^k points of the coset, ascending.
    std::vector<std::uint32_t> members() const;

    // Text form "offset;b1,b2,...", vectors as bit strings, coordinate 1 leftmost.
    std::string to_text() const;
    static AffineSubspace from_text(const std::string& s);

    friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
};

// Total order used wherever partitions are stored as sorted part lists.
bool subspace_less(const AffineSubspace& a, const AffineSubspace& b);

// Reduced row echelon form. Returns rows sorted by pivot (ascending pivot
// coordinate, i.e. descending bit position); zero rows are dropped.
std::vector<std::uint32_t> rref(std::vector<std::uint32_t> rows);

// Canonical form of the coset offset + span(basis). Throws DependentBasis if
// the given rows are linearly dependent.
AffineSubspace canonicalize(int m, const std::vector<std::uint32_t>& basis, std::uint32_t offset);

// Exactly-a-coset detection; nullopt if `points` is not an affine subspace.
std::optional<AffineSubspace> subspace_from_points(int m, std::vector<std::uint32_t> points);

// Number of k-dimensional linear subspaces of F_2^m (q = 2).
BigInt gaussian_binomial(int m, int k);

// Every k-dimensional linear (or affine) subspace of F_2^m exactly once, in a
// deterministic order: lexicographic on (pivot set, basis free bits, offset).
std::vector<AffineSubspace> enumerate_subspaces(int m, int k, bool affine);

}  // namespace bentkit
