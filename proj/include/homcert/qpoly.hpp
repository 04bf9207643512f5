#pragma once

#include "homcert/bigint.hpp"
#include "homcert/errors.hpp"
#include "homcert/graph.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcert {

/// Integer polynomial in q, dense, lowest power first, no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial monomial(const BigInt& c, unsigned power);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(unsigned power) const;
  const BigInt& leading() const;

  BigInt operator()(const BigInt& q) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// e.g. "q^4 - 4q^3 + 6q^2 - 3q"
  std::string to_string() const;

  /// {"coeffs":[c0, ..., cn]}; coefficients outside the int64 range are
  /// written as decimal strings and accepted back in either form.
  std::string to_json() const;
  static QPolynomial from_json(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// H^c = K_{r1,s1} + ... + K_{rm,sm} on disjoint vertex sets.
struct DeletionSpec {
  std::vector<std::pair<int, int>> pairs;
  int vertices() const;        // sum r_i + s_i
  int deleted_edges() const;   // sum r_i s_i
};

/// Complete looped K_q with the edges of the spec's bipartite blocks removed.
ConstraintGraph bipartite_deletion_graph(int q, const DeletionSpec& spec);

/// hom(G, H_q^l) = sum over S of (-1)^|S| l^c(S) q^(n - v(S)).
QPolynomial qpoly_deleted_loops(const Graph& g, int loops_deleted,
                                const Limits& limits = Limits::defaults());

/// hom(G, H) for H = complete looped K_q minus the spec's blocks, as a
/// polynomial in q. Only edge sets spanning a bipartite subgraph contribute.
QPolynomial qpoly_bipartite_deletion(const Graph& g, const DeletionSpec& spec,
                                     const Limits& limits = Limits::defaults());

/// Deletion-contraction with reductions and memoisation on canonical forms.
QPolynomial chromatic_polynomial(const Graph& g, const Limits& limits = Limits::defaults());

/// a[i] = number of i-edge subsets containing no broken circuit, i = 0..n-1
/// (a[0] = 1). edge_order lists indices into g.edges() from smallest to
/// largest; an empty order means the natural one.
std::vector<BigInt> broken_circuit_coefficients(const Graph& g, const std::vector<int>& edge_order = {},
                                                const Limits& limits = Limits::defaults());

struct Family {
  enum class Kind { Chromatic, DeletedLoops, BipartiteDeletion };
  Kind kind = Kind::Chromatic;
  int loops_deleted = 0;
  DeletionSpec spec;

  static Family chromatic() { return {}; }
  static Family deleted_loops(int l) { return {Kind::DeletedLoops, l, {}}; }
  static Family bipartite_deletion(DeletionSpec s) { return {Kind::BipartiteDeletion, 0, std::move(s)}; }

  /// "chromatic", "loops:<l>" or "bip:<r>x<s>,<r>x<s>..."
  static Family parse(std::string_view text);
  std::string name() const;
};

QPolynomial family_polynomial(const Graph& g, const Family& f, const Limits& limits = Limits::defaults());

struct Threshold {
  enum class Kind { Finite, Never, Tie };
  Kind kind = Kind::Tie;
  unsigned long q0 = 0;       // Finite: D(q) > 0 for every integer q >= q0, and q0 is least
  BigInt root_bound;          // every real root of D lies below this
  QPolynomial difference;     // poly(G_ref) - poly(G)
};
const char* to_string(Threshold::Kind k);

/// Compares the reference polynomial against the candidate. Positivity past
/// the scan is certified by a real-root bound (the smaller of the Cauchy and
/// Fujiwara bounds); the scan refuses to exceed limits.state_budget steps.
Threshold threshold_q(const QPolynomial& reference, const QPolynomial& candidate,
                      const Limits& limits = Limits::defaults());
Threshold threshold_q(const Graph& reference, const Graph& candidate, const Family& f,
                      const Limits& limits = Limits::defaults());

}  // namespace homcert
