#ifndef NIJ_COURANT_TM_HPP
#define NIJ_COURANT_TM_HPP

#include <functional>
#include <string>
#include <vector>

#include "nij/cartan.hpp"
#include "nij/report.hpp"

namespace nij {

/// Section X + xi of TM + T*M with polynomial coefficients.
struct CourantSection {
  PolyVectorField vf;
  PolyForm form;  // degree 1

  CourantSection() = default;
  CourantSection(PolyVectorField v, PolyForm f);
  static CourantSection vector(const PolyVectorField& v);
  static CourantSection one_form(const PolyForm& f);

  int vars() const { return vf.n; }
  bool is_zero() const { return vf.is_zero() && form.is_zero(); }
  CourantSection operator-() const;
  friend CourantSection operator+(const CourantSection& a, const CourantSection& b);
  friend CourantSection operator-(const CourantSection& a, const CourantSection& b);
  friend CourantSection operator*(const MultiPoly& f, const CourantSection& s);
  friend bool operator==(const CourantSection& a, const CourantSection& b) {
    return a.vf == b.vf && a.form == b.form;
  }
  friend bool operator!=(const CourantSection& a, const CourantSection& b) { return !(a == b); }
  std::string str() const;
};

/// Block tensor on TM + T*M. The T*M -> T*M block is stored through its
/// transpose acting on TM (field n1t), which keeps every block a plain
/// polynomial matrix on TM.
struct CourantTensor {
  int n = 0;
  PolyOneOne n0;        // TM -> TM
  PolyBivector lambda;  // T*M -> TM
  PolyForm omega;       // TM -> T*M, degree-2 form acting by first-slot contraction
  PolyOneOne n1t;       // transpose of the T*M -> T*M block

  CourantTensor() = default;
  explicit CourantTensor(int n_);

  /// N(X + xi) = N0 X - tN0 xi.
  static CourantTensor diagonal(const PolyOneOne& n0);
  /// N(X + xi) = N0 X.
  static CourantTensor vector_block(const PolyOneOne& n0);
  /// N(X + xi) = Lambda xi.
  static CourantTensor bivector_block(const PolyBivector& lambda);

  CourantSection apply(const CourantSection& s) const;
};

/// Dirac subbundle presented by a generator: sections X + Omega(X) for a
/// closed two-form, or Lambda(xi) + xi for a Poisson bivector.
struct DiracGraph {
  enum class Kind { form_graph, bivector_graph };
  Kind kind;
  PolyForm omega;        // used when kind == form_graph
  PolyBivector lambda;   // used when kind == bivector_graph

  static DiracGraph of_form(const PolyForm& omega);
  static DiracGraph of_bivector(const PolyBivector& lambda);
};

/// Deterministic finite family {x^a d/dx_i, x^a dx_i : |a| <= D}. The checks
/// in this module are multidifferential of bounded order per slot, so family
/// sweeps decide the corresponding section-wise identities.
class TestFamily {
 public:
  TestFamily(int n, int max_degree);

  int vars() const { return n_; }
  int max_degree() const { return d_; }
  const std::vector<PolyVectorField>& vector_fields() const { return vfs_; }
  const std::vector<PolyForm>& one_forms() const { return forms_; }
  const std::vector<CourantSection>& sections() const { return sections_; }
  const std::vector<MultiPoly>& monomials() const { return monos_; }

 private:
  int n_, d_;
  std::vector<MultiPoly> monos_;
  std::vector<PolyVectorField> vfs_;
  std::vector<PolyForm> forms_;
  std::vector<CourantSection> sections_;
};

// ---- products ----

/// (X+xi) o (Y+eta) = [X,Y] + (L_X eta - i_Y d xi).
CourantSection courant_product(const CourantSection& s, const CourantSection& t);

/// <X+xi, Y+eta> = <xi,Y> + <eta,X>.
MultiPoly courant_pairing(const CourantSection& s, const CourantSection& t);

CourantSection deformed_product(const CourantSection& s, const CourantSection& t,
                                const CourantTensor& N);

/// N(s) o N(t) - N(s o_N t).
CourantSection courant_torsion(const CourantSection& s, const CourantSection& t,
                               const CourantTensor& N);

/// Six-term mixed compatibility of o and o_N; vanishes identically.
CourantSection compatibility_defect_tm(const CourantTensor& N, const CourantSection& s,
                                       const CourantSection& t, const CourantSection& u);

/// Coboundary of the torsion cochain on sections.
CourantSection coboundary_on_torsion_tm(const CourantTensor& N, const CourantSection& s,
                                        const CourantSection& t, const CourantSection& u);

// ---- derived brackets and map-level calculus ----

using VfMapToForm = std::function<PolyForm(const PolyVectorField&)>;
using FormMapToVf = std::function<PolyVectorField(const PolyForm&)>;

/// L_X(TY) - i_Y d(TX) - T([X,Y]) for a map T: TM -> T*M, the closedness
/// expression that stays meaningful when T is not skew.
PolyForm map_coboundary(const VfMapToForm& T, const PolyVectorField& X, const PolyVectorField& Y);

/// L_{B xi} eta - i_{B eta} d xi for a map B: T*M -> TM.
PolyForm anchored_form_bracket(const FormMapToVf& B, const PolyForm& xi, const PolyForm& eta);

/// The one-form bracket generated by a bivector, through the Courant product.
PolyForm koszul_bracket(const PolyBivector& lambda, const PolyForm& xi, const PolyForm& eta);

/// Independent route: L_{Lxi} eta - L_{Leta} xi - d(Lambda(xi,eta)).
PolyForm koszul_bracket_classical(const PolyBivector& lambda, const PolyForm& xi,
                                  const PolyForm& eta);

/// The one-form obtained by pairing L^{N0}_X with coordinate fields:
/// component i is (N0 X)(eta_i) - eta([X, d/dx_i]_{N0}).
PolyForm deformed_lie_derivative(const PolyOneOne& n0, const PolyVectorField& X,
                                 const PolyForm& eta);

// ---- family checks ----

/// The deformed product with the diagonal tensor equals the bracket built
/// from the contracted calculus ([.,.]_{N0}, deformed Lie derivative, the
/// commutator differential). Holds for every N0; checked on all family pairs.
CheckReport check_factorized_deformation(const PolyOneOne& n0, const TestFamily& family);

/// For a torsion-free N0, the diagonal lift is torsion-free for the Courant
/// product iff N0^2 is a constant scalar. Evaluates the torsion sweep, the
/// two transpose-intertwining identities, and the matrix square test; all
/// three verdicts must agree.
CheckReport check_diagonal_nijenhuis(const PolyOneOne& n0, const TestFamily& family);

/// K[X,Y] = [X,KY] on all family pairs forces K to be a constant scalar;
/// the scalar detection is re-verified whenever the sweep passes.
CheckReport check_commutant_scalar(const PolyOneOne& k, const TestFamily& family);

std::vector<CourantSection> dirac_graph_sections(const DiracGraph& graph,
                                                 const TestFamily& family);

struct PresymplecticNijenhuisReport {
  CheckReport conditions;  // d Omega = 0, Omega N0 skew, d(Omega N0) = 0, T_N0 = 0
  CheckReport graph;       // graph closure under o and o_N, skewness, torsion on the graph
  bool verdicts_agree = true;
  CheckReport combined() const;
};

PresymplecticNijenhuisReport check_presymplectic_nijenhuis(const PolyForm& omega,
                                                           const PolyOneOne& n0,
                                                           const TestFamily& family);

/// With N0 = Lambda Omega: N0 torsion-free, Omega N0 skew, d(Omega N0) = 0.
CheckReport check_lambda_omega(const PolyForm& omega, const PolyBivector& lambda,
                               const TestFamily& family);

struct PoissonNijenhuisReport {
  CheckReport weak;    // N0 Lambda = Lambda tN0, outer-damped bracket match, torsion on im(Lambda)
  CheckReport strong;  // N0 Lambda skew, N0 torsion-free, undamped bracket match
};

/// Requires Lambda Poisson.
PoissonNijenhuisReport check_poisson_nijenhuis(const PolyBivector& lambda, const PolyOneOne& n0,
                                               const TestFamily& family);

/// Split-shape tensor with blocks (l/2)I + N0, Lambda, Omega, (l/2)I - tN0.
/// Shape violations throw; then Omega must be closed and the four
/// deformation conditions must hold on the family.
CheckReport check_trivial_bialgebroid_tensor(const CourantTensor& N, const TestFamily& family);

/// Deformed product of two pure one-forms, the T*M-bracket induced by N.
PolyForm deformed_form_bracket(const CourantTensor& N, const PolyForm& xi, const PolyForm& eta);

struct WeakStrongSearchResult {
  bool found = false;
  std::string description;
  PolyBivector lambda;
  PolyOneOne n0;
};

/// Scan a small structured pool on R^3 for an instance that satisfies the
/// damped bracket condition but not the undamped one.
WeakStrongSearchResult search_weak_not_strong_pn(int max_degree = 2);

}  // namespace nij

#endif
