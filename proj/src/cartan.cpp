/* cartan.cpp
 *
 * Exact Cartan calculus with polynomial coefficients on R^n. Conventions
 * fixed once for the whole toolkit: interior products contract the first
 * slot, the wedge uses the determinant convention (no 1/k! factors), and the
 * Lie derivative is the Cartan formula.
 */

#include "nij/cartan.hpp"

#include <algorithm>
#include <sstream>

namespace nij {

std::vector<Monomial> monomials_up_to_degree(int n, int max_degree) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  // enumerate recursively, then sort grlex for the canonical family order
  struct Rec {
    int n, maxd;
    std::vector<Monomial>& out;
    void go(Monomial& m, int var, int left) {
      if (var == n) {
        out.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        m[var] = (unsigned)e;
        go(m, var + 1, left - e);
      }
      m[var] = 0;
    }
  } rec{n, max_degree, out};
  rec.go(cur, 0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return GrlexLess{}(a, b);
  });
  return out;
}

PolyVectorField PolyVectorField::coordinate(int n, int i) {
  PolyVectorField X(n);
  X.comp[i] = MultiPoly::constant(n, Rational(1));
  return X;
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

PolyVectorField PolyVectorField::operator-() const {
  PolyVectorField r(n);
  for (int i = 0; i < n; ++i) r.comp[i] = -comp[i];
  return r;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.n != b.n) throw DimensionError("PolyVectorField: dimension mismatch");
  PolyVectorField r(a.n);
  for (int i = 0; i < a.n; ++i) r.comp[i] = a.comp[i] + b.comp[i];
  return r;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.n != b.n) throw DimensionError("PolyVectorField: dimension mismatch");
  PolyVectorField r(a.n);
  for (int i = 0; i < a.n; ++i) r.comp[i] = a.comp[i] - b.comp[i];
  return r;
}

PolyVectorField operator*(const MultiPoly& f, const PolyVectorField& X) {
  PolyVectorField r(X.n);
  for (int i = 0; i < X.n; ++i) r.comp[i] = f * X.comp[i];
  return r;
}

MultiPoly PolyVectorField::apply(const MultiPoly& f) const {
  MultiPoly r(n);
  for (int i = 0; i < n; ++i) {
    if (comp[i].is_zero()) continue;
    r += comp[i] * f.partial(i);
  }
  return r;
}

std::string PolyVectorField::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (comp[i].is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << comp[i].str() << ")*d/dx" << (i + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

PolyForm::PolyForm(int n, int degree) : n_(n), deg_(degree) {
  if (degree < 0) throw DimensionError("PolyForm: negative degree");
}

PolyForm PolyForm::function(const MultiPoly& f) {
  PolyForm w(f.num_vars(), 0);
  if (!f.is_zero()) w.comp_[{}] = f;
  return w;
}

PolyForm PolyForm::coordinate_one_form(int n, int i) {
  PolyForm w(n, 1);
  w.comp_[{i}] = MultiPoly::constant(n, Rational(1));
  return w;
}

MultiPoly PolyForm::component(const FormIndex& idx) const {
  auto it = comp_.find(idx);
  return it == comp_.end() ? MultiPoly(n_) : it->second;
}

void PolyForm::add_component(const FormIndex& idx, const MultiPoly& c) {
  if ((int)idx.size() != deg_) throw DimensionError("PolyForm: index arity mismatch");
  for (size_t a = 0; a + 1 < idx.size(); ++a)
    if (idx[a] >= idx[a + 1]) throw DimensionError("PolyForm: index tuple not increasing");
  for (int i : idx)
    if (i < 0 || i >= n_) throw DimensionError("PolyForm: index out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = comp_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

MultiPoly PolyForm::antisym_component(FormIndex idx) const {
  // sort with sign; repeated index kills the component
  int sign = 1;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return MultiPoly(n_);
      if (idx[a] > idx[b]) {
        std::swap(idx[a], idx[b]);
        sign = -sign;
      }
    }
  MultiPoly c = component(idx);
  return sign > 0 ? c : -c;
}

PolyForm PolyForm::operator-() const {
  PolyForm r(n_, deg_);
  for (const auto& [idx, c] : comp_) r.comp_[idx] = -c;
  return r;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  if (a.n_ != b.n_ || a.deg_ != b.deg_) throw DimensionError("PolyForm: shape mismatch");
  PolyForm r = a;
  for (const auto& [idx, c] : b.comp_) r.add_component(idx, c);
  return r;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) {
  if (a.n_ != b.n_ || a.deg_ != b.deg_) throw DimensionError("PolyForm: shape mismatch");
  PolyForm r = a;
  for (const auto& [idx, c] : b.comp_) r.add_component(idx, -c);
  return r;
}

PolyForm operator*(const MultiPoly& f, const PolyForm& w) {
  PolyForm r(w.n_, w.deg_);
  for (const auto& [idx, c] : w.comp_) r.add_component(idx, f * c);
  return r;
}

std::string PolyForm::str() const {
  if (comp_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : comp_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")";
    for (int i : idx) out << "*dx" << (i + 1);
    first = false;
  }
  return out.str();
}

void PolyBivector::add_component(int i, int j, const MultiPoly& c) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw DimensionError("PolyBivector: index out of range");
  if (i == j || c.is_zero()) {
    if (i == j && !c.is_zero()) throw DimensionError("PolyBivector: repeated index");
    return;
  }
  int a = i, b = j;
  MultiPoly v = c;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  auto key = std::make_pair(a, b);
  auto [it, inserted] = comp.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) comp.erase(it);
  }
}

MultiPoly PolyBivector::component(int i, int j) const {
  if (i == j) return MultiPoly(n);
  auto it = comp.find({std::min(i, j), std::max(i, j)});
  if (it == comp.end()) return MultiPoly(n);
  return i < j ? it->second : -it->second;
}

MultiPoly PolyBivector::value(const PolyForm& xi, const PolyForm& eta) const {
  if (xi.degree() != 1 || eta.degree() != 1)
    throw DimensionError("PolyBivector::value: expects one-forms");
  MultiPoly r(n);
  for (const auto& [ij, c] : comp) {
    auto [i, j] = ij;
    r += c * (xi.component({i}) * eta.component({j}) - xi.component({j}) * eta.component({i}));
  }
  return r;
}

PolyVectorField PolyBivector::apply(const PolyForm& xi) const {
  if (xi.degree() != 1) throw DimensionError("PolyBivector::apply: expects a one-form");
  PolyVectorField r(n);
  for (const auto& [ij, c] : comp) {
    auto [i, j] = ij;
    r.comp[j] += c * xi.component({i});
    r.comp[i] -= c * xi.component({j});
  }
  return r;
}

std::string PolyBivector::str() const {
  if (comp.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [ij, c] : comp) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")*d/dx" << (ij.first + 1) << "^d/dx" << (ij.second + 1);
    first = false;
  }
  return out.str();
}

PolyOneOne PolyOneOne::identity(int n) { return scalar(n, Rational(1)); }

PolyOneOne PolyOneOne::scalar(int n, const Rational& lambda) {
  PolyOneOne N(n);
  for (int i = 0; i < n; ++i) N.at(i, i) = MultiPoly::constant(n, lambda);
  return N;
}

PolyVectorField PolyOneOne::apply(const PolyVectorField& X) const {
  if (X.n != n) throw DimensionError("PolyOneOne::apply: dimension mismatch");
  PolyVectorField r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (at(i, j).is_zero() || X.comp[j].is_zero()) continue;
      r.comp[i] += at(i, j) * X.comp[j];
    }
  return r;
}

PolyForm PolyOneOne::transpose_apply(const PolyForm& xi) const {
  if (xi.degree() != 1) throw DimensionError("PolyOneOne::transpose_apply: expects a one-form");
  PolyForm r(n, 1);
  for (int j = 0; j < n; ++j) {
    MultiPoly cj(n);
    for (int i = 0; i < n; ++i) cj += xi.component({i}) * at(i, j);
    r.add_component({j}, cj);
  }
  return r;
}

PolyOneOne PolyOneOne::compose(const PolyOneOne& other) const {
  if (n != other.n) throw DimensionError("PolyOneOne::compose: dimension mismatch");
  PolyOneOne r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r.at(i, j) += at(i, k) * other.at(k, j);
  return r;
}

PolyOneOne operator+(const PolyOneOne& a, const PolyOneOne& b) {
  if (a.n != b.n) throw DimensionError("PolyOneOne: dimension mismatch");
  PolyOneOne r(a.n);
  for (size_t i = 0; i < r.m.size(); ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

PolyOneOne operator-(const PolyOneOne& a, const PolyOneOne& b) {
  if (a.n != b.n) throw DimensionError("PolyOneOne: dimension mismatch");
  PolyOneOne r(a.n);
  for (size_t i = 0; i < r.m.size(); ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

bool PolyOneOne::is_zero() const {
  for (const auto& p : m)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<Rational> PolyOneOne::constant_scalar() const {
  if (n == 0) return Rational(0);
  Rational lambda(0);
  if (!at(0, 0).is_constant()) return std::nullopt;
  lambda = at(0, 0).constant_value();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (!at(i, j).is_constant() || at(i, j).constant_value() != lambda) return std::nullopt;
      } else if (!at(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return lambda;
}

PolyVectorField lie_bracket(const PolyVectorField& X, const PolyVectorField& Y) {
  if (X.n != Y.n) throw DimensionError("lie_bracket: dimension mismatch");
  PolyVectorField r(X.n);
  for (int i = 0; i < X.n; ++i) r.comp[i] = X.apply(Y.comp[i]) - Y.apply(X.comp[i]);
  return r;
}

PolyForm exterior_derivative(const PolyForm& w) {
  int n = w.vars();
  PolyForm r(n, w.degree() + 1);
  for (const auto& [idx, c] : w.components()) {
    for (int j = 0; j < n; ++j) {
      MultiPoly p = c.partial(j);
      if (p.is_zero()) continue;
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      FormIndex target = idx;
      auto pos = std::upper_bound(target.begin(), target.end(), j) - target.begin();
      target.insert(target.begin() + pos, j);
      if (pos % 2 == 1) p = -p;
      r.add_component(target, p);
    }
  }
  return r;
}

PolyForm interior_product(const PolyVectorField& X, const PolyForm& w) {
  if (w.degree() == 0)
    throw DimensionError("interior_product: degree-0 form has no slots");
  if (X.n != w.vars()) throw DimensionError("interior_product: dimension mismatch");
  PolyForm r(w.vars(), w.degree() - 1);
  for (const auto& [idx, c] : w.components()) {
    for (size_t a = 0; a < idx.size(); ++a) {
      const MultiPoly& xc = X.comp[idx[a]];
      if (xc.is_zero()) continue;
      FormIndex target = idx;
      target.erase(target.begin() + a);
      MultiPoly term = xc * c;
      if (a % 2 == 1) term = -term;
      r.add_component(target, term);
    }
  }
  return r;
}

PolyForm lie_derivative(const PolyVectorField& X, const PolyForm& w) {
  if (w.degree() == 0)
    return PolyForm::function(X.apply(w.component({})));
  PolyForm a = interior_product(X, exterior_derivative(w));
  PolyForm b = exterior_derivative(interior_product(X, w));
  return a + b;
}

namespace {

// sign of the merge permutation and merged tuple, or nullopt on collision
std::optional<std::pair<FormIndex, int>> merge_indices(const FormIndex& a, const FormIndex& b) {
  FormIndex m;
  m.reserve(a.size() + b.size());
  int sign = 1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      m.push_back(a[i++]);
    } else {
      // b[j] passes over the remaining a-entries
      if ((a.size() - i) % 2 == 1) sign = -sign;
      m.push_back(b[j++]);
    }
  }
  while (i < a.size()) m.push_back(a[i++]);
  while (j < b.size()) m.push_back(b[j++]);
  return std::make_pair(std::move(m), sign);
}

}  // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.vars() != b.vars()) throw DimensionError("wedge: dimension mismatch");
  PolyForm r(a.vars(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.components())
    for (const auto& [ib, cb] : b.components()) {
      auto merged = merge_indices(ia, ib);
      if (!merged) continue;
      MultiPoly term = ca * cb;
      if (merged->second < 0) term = -term;
      r.add_component(merged->first, term);
    }
  return r;
}

MultiPoly pair_form_vf(const PolyForm& xi, const PolyVectorField& X) {
  if (xi.degree() != 1) throw DimensionError("pair_form_vf: expects a one-form");
  if (xi.vars() != X.n) throw DimensionError("pair_form_vf: dimension mismatch");
  MultiPoly r(X.n);
  for (const auto& [idx, c] : xi.components()) r += c * X.comp[idx[0]];
  return r;
}

PolyVectorField contracted_bracket(const PolyOneOne& N0, const PolyVectorField& X,
                                   const PolyVectorField& Y) {
  return lie_bracket(N0.apply(X), Y) + lie_bracket(X, N0.apply(Y)) - N0.apply(lie_bracket(X, Y));
}

PolyVectorField nijenhuis_torsion_vf(const PolyOneOne& N0, const PolyVectorField& X,
                                     const PolyVectorField& Y) {
  return lie_bracket(N0.apply(X), N0.apply(Y)) - N0.apply(contracted_bracket(N0, X, Y));
}

PolyForm i_derivation(const PolyOneOne& N0, const PolyForm& w) {
  if (N0.n != w.vars()) throw DimensionError("i_derivation: dimension mismatch");
  PolyForm r(w.vars(), w.degree());
  if (w.degree() == 0) return r;
  for (const auto& [idx, c] : w.components()) {
    for (size_t a = 0; a < idx.size(); ++a) {
      for (int j = 0; j < N0.n; ++j) {
        const MultiPoly& entry = N0.at(idx[a], j);  // coefficient of dx_j in tN0(dx_{idx[a]})
        if (entry.is_zero()) continue;
        FormIndex replaced = idx;
        replaced[a] = j;
        // sort with sign, dropping collisions
        int sign = 1;
        bool zero = false;
        for (size_t p = 0; p < replaced.size() && !zero; ++p)
          for (size_t q = p + 1; q < replaced.size(); ++q) {
            if (replaced[p] == replaced[q]) {
              zero = true;
              break;
            }
            if (replaced[p] > replaced[q]) {
              std::swap(replaced[p], replaced[q]);
              sign = -sign;
            }
          }
        if (zero) continue;
        MultiPoly term = entry * c;
        if (sign < 0) term = -term;
        r.add_component(replaced, term);
      }
    }
  }
  return r;
}

PolyForm d_n0(const PolyOneOne& N0, const PolyForm& w) {
  return i_derivation(N0, exterior_derivative(w)) - exterior_derivative(i_derivation(N0, w));
}

MultiPoly poisson_bracket(const PolyBivector& lambda, const MultiPoly& f, const MultiPoly& g) {
  MultiPoly r(lambda.n);
  for (const auto& [ij, c] : lambda.comp) {
    auto [i, j] = ij;
    r += c * (f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i));
  }
  return r;
}

MultiPoly poisson_jacobiator(const PolyBivector& lambda, const MultiPoly& f, const MultiPoly& g,
                             const MultiPoly& h) {
  return poisson_bracket(lambda, poisson_bracket(lambda, f, g), h) +
         poisson_bracket(lambda, poisson_bracket(lambda, g, h), f) +
         poisson_bracket(lambda, poisson_bracket(lambda, h, f), g);
}

CheckReport is_poisson(const PolyBivector& lambda, int max_degree) {
  auto monos = monomials_up_to_degree(lambda.n, max_degree);
  auto poly_of = [&](const Monomial& m) {
    return MultiPoly::monomial(lambda.n, m, Rational(1));
  };
  for (size_t a = 0; a < monos.size(); ++a)
    for (size_t b = 0; b < monos.size(); ++b)
      for (size_t c = 0; c < monos.size(); ++c) {
        MultiPoly d =
            poisson_jacobiator(lambda, poly_of(monos[a]), poly_of(monos[b]), poly_of(monos[c]));
        if (!d.is_zero())
          return CheckReport::fail(
              {"Jacobi identity of {f,g} = Lambda(df,dg)",
               "(" + poly_of(monos[a]).str() + ", " + poly_of(monos[b]).str() + ", " +
                   poly_of(monos[c]).str() + ")",
               d.str(), "0"});
      }
  return CheckReport::ok("Jacobi defect zero on all monomial triples up to degree " +
                         std::to_string(max_degree) +
                         " (the defect is tensorial, coordinate triples decide)");
}

PolyForm form_apply(const PolyForm& omega2, const PolyVectorField& X) {
  if (omega2.degree() != 2) throw DimensionError("form_apply: expects a two-form");
  return interior_product(X, omega2);
}

}  // namespace nij
