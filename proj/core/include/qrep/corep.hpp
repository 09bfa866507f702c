#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrep/manin.hpp"

namespace qrep {

struct Comonoid {
  enum class Kind { connected_qa, bialgebra_slice };
  Kind kind = Kind::bialgebra_slice;
  std::optional<QuadraticAlgebra> algebra;  // connected_qa only
  std::vector<SVec> delta1;                 // connected_qa only, index a·n + b
  std::vector<Scalar> eps1;
  ContextPtr ctx;

  std::string kind_name() const { return kind == Kind::connected_qa ? "connected_qa" : "bialgebra_slice"; }
};
using ComonoidPtr = std::shared_ptr<const Comonoid>;

ComonoidPtr connected_comonoid(const QuadraticAlgebra& a, std::vector<SVec> delta1, std::vector<Scalar> eps1,
                               int max_degree = 2);
// Requires coproduct and counit on E.
ComonoidPtr slice_comonoid(ContextPtr ctx);
// cohom(B,B) with Δ₁(M^i_j) = Σ_k M^i_k ⊗ M^k_j and ε₁(M^i_j) = δ^i_j.
ComonoidPtr coend_comonoid(const Idempotent& b, int max_degree = 2);
// Polynomial algebra on the dual basis of an algebra, Δ₁ dual to its product.
ComonoidPtr s_embedding_comonoid(const AlgebraStructureConstants& alg, int max_degree = 2);

// Coassociativity and counit on E; for connected_qa also (Δ₁⊗Δ₁)R ⊂ R_w and
// (ε₁⊗ε₁)R = 0.
Report validate_comonoid(const Comonoid& c);

struct Corepresentation {
  ComonoidPtr comonoid;
  Idempotent b;
  FirstOrderMatrix m;
};

// The generator matrix of a coend comonoid on 𝔛_B.
Corepresentation identity_corep(const ComonoidPtr& coend, const Idempotent& b);
// M^i_j = Σ_a ρ(e_a)^i_j v^a for matrices ρ(e_a) of a unital representation.
FirstOrderMatrix s_embed_representation(const std::vector<Matrix>& rho, ContextPtr ctx);

Report corep_check(const Comonoid& c, const Idempotent& b, const FirstOrderMatrix& m);
inline Report corep_check(const Corepresentation& r) { return corep_check(*r.comonoid, r.b, r.m); }

// K scalar (B,B')-Manin and K M' = M K.
Report corep_morphism_check(const Matrix& k, const Corepresentation& src, const Corepresentation& dst);

struct CorepResult {
  std::optional<Corepresentation> corep;
  Report report;
};

CorepResult corep_direct_sum(const Corepresentation& a, const Corepresentation& b);
CorepResult corep_coproduct(const Corepresentation& a, const Corepresentation& b);
enum class TensorKind { white, black };
CorepResult corep_tensor(const Corepresentation& a, const Corepresentation& b, TensorKind kind);
enum class DualFlavor { dual, koszul_dual };
// Minv lives in the same context as a.m and is checked as a two-sided inverse.
CorepResult corep_dual(const Corepresentation& a, const FirstOrderMatrix& minv, DualFlavor flavor);
CorepResult hom_corep(const Corepresentation& a, const Corepresentation& b, const FirstOrderMatrix& minv);
// Σ_k M^i_k Minv^k_j = δ^i_j·1 and Σ_k Minv^i_k M^k_j = δ^i_j·1 in P₂.
Report inverse_check(const FirstOrderMatrix& m, const FirstOrderMatrix& minv);

struct ClassicalData {
  AlgebraStructureConstants algebra;  // dual of E with product dual to Δ₁
  std::vector<Matrix> rho;            // ρ(v_a) for each dual basis vector
};
ClassicalData dequantise(const Corepresentation& a);

}  // namespace qrep
