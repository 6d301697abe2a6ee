#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlab/composition.hpp"
#include "qlab/multipoly.hpp"
#include "qlab/rational.hpp"
#include "qlab/sphere.hpp"

namespace qlab {

// One recursion term coeff * P_{2J}(Q_{2a}); J may be empty.
struct QTerm {
  Composition J;
  int a = 0;
  ExactScalar coeff;

  friend bool operator==(const QTerm& x, const QTerm& y) {
    return x.J == y.J && x.a == y.a && x.coeff == y.coeff;
  }
};

// Q_{2N} = sum of terms + w_coeff * w_{2N}, as exact coefficient data.
// Terms are ordered lexicographically by the full composition (J, a).
struct QFormula {
  int N = 0;
  std::vector<QTerm> terms;
  ExactScalar w_coeff;

  friend bool operator==(const QFormula& x, const QFormula& y) {
    return x.N == y.N && x.terms == y.terms && x.w_coeff == y.w_coeff;
  }
};

// Solve the order-N recursion identity for Q_{2N}: the term at (J,a)
// carries -(-1)^N m1((J,a)) (-1)^a and the w term (-1)^N 2^(2N) N!(N-1)!.
QFormula derive_q_formula(int N);

// Substitute sphere values; the result must equal q_sphere(ctx, N).
ExactScalar evaluate_q_formula_on_sphere(const QFormula& f, const SphereContext& ctx);

enum class EmitFormat { plain, latex, json };
EmitFormat parse_emit_format(std::string_view name);  // throws std::invalid_argument

// Deterministic serialization. latex writes the w coefficient in the
// factored 2^(2N) N! (N-1)! display style; plain evaluates it.
std::string emit(const QFormula& f, EmitFormat format);

QFormula parse_qformula_json(const std::string& text);

// Parse display-style text ("Q_4 = -P_2(Q_2) + 2^4 2! w_4") back into
// coefficient data; tolerant of hand-arranged term order.
QFormula parse_q_display(const std::string& text);

// Coefficient-for-coefficient comparison of two displays.
bool equivalent_q_displays(const std::string& a, const std::string& b);

// Reduce the order-2 formula in the three-generator scalar ring
// {J, S = |P|^2, A = Laplacian of J} with symbolic dimension n and
// compare against n/2 J^2 - 2S - A.
MultiPoly paneitz_reduction();
bool verify_paneitz_symbolic();
bool verify_paneitz_sampled(const std::vector<ExactScalar>& dims);

}  // namespace qlab
