#pragma once

#include <cstdint>
#include <vector>

#include "qrep/algebra.hpp"

// Reference computations for tests, written without the library's echelon
// code: dense Gaussian elimination modulo the prime 2^61 − 1, with elements of
// Q(t) evaluated at a chosen point.
namespace oracle {

using u64 = std::uint64_t;
inline constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 add(u64 a, u64 b);
u64 sub(u64 a, u64 b);
u64 mul(u64 a, u64 b);
u64 inv(u64 a);

// Image of a scalar with the indeterminate evaluated at `point`.
u64 reduce(const qrep::Scalar& s, u64 point);

using Rows = std::vector<std::vector<u64>>;

Rows dense(const std::vector<qrep::SVec>& rows, int ncols, u64 point);
Rows dense(const qrep::Matrix& m, u64 point);
int rank(Rows rows);
// dim(U) = dim(V) = dim(U + V).
bool same_span(const Rows& u, const Rows& v);
Rows matmul(const Rows& a, const Rows& b);
Rows transpose(const Rows& a);
Rows identity(int n);
Rows kron(const Rows& a, const Rows& b);

// Evaluation points used for Q(t) comparisons.
const std::vector<u64>& points();

// dim of the degree-k piece of T(V)/(R) by the rank of Σ V^i ⊗ R ⊗ V^{k-2-i}.
int hilbert_brute(const std::vector<qrep::SVec>& relations, int n, int k, u64 point);

long binomial(long n, long k);

// Relations of the white and black products of quadratic algebras with
// generator pairs (v_i, w_j) at index i·p + j, built directly from the
// coordinates of (V⊗V)⊗(W⊗W).
std::vector<qrep::SVec> white_relations(const qrep::QuadraticAlgebra& a, const qrep::QuadraticAlgebra& b);
std::vector<qrep::SVec> black_relations(const qrep::QuadraticAlgebra& a, const qrep::QuadraticAlgebra& b);

// Same subspace of F^ncols at every evaluation point.
bool same_span(const std::vector<qrep::SVec>& u, const std::vector<qrep::SVec>& v, int ncols);
bool same_span(const qrep::Subspace& u, const std::vector<qrep::SVec>& v);

}  // namespace oracle
