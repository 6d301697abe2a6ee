#include "qlab/qformula.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "qlab/multiplicity.hpp"
#include "qlab/multipoly.hpp"
#include "qlab/series.hpp"

namespace qlab {

namespace {

std::vector<int> full_parts(const QTerm& t) {
  std::vector<int> p = t.J.parts();
  p.push_back(t.a);
  return p;
}

ExactScalar canonical_w_magnitude(int N) {
  return pow(ExactScalar(2), 2 * N) * factorial(N) * factorial(N - 1);
}

}  // namespace

QFormula derive_q_formula(int N) {
  if (N < 1) throw std::invalid_argument("derive_q_formula: order must be >= 1");
  QFormula f;
  f.N = N;
  for (const Composition& I : compositions(N)) {
    if (I.length() == 1) continue;  // the lone Q_{2N} term, moved to the left side
    QTerm t;
    t.J = I.without_last();
    t.a = I.part(I.length() - 1);
    t.coeff = -parity_sign(N) * m1(I) * parity_sign(t.a);
    if (!t.coeff.is_zero()) f.terms.push_back(std::move(t));
  }
  f.w_coeff = parity_sign(N) * canonical_w_magnitude(N);
  return f;
}

ExactScalar evaluate_q_formula_on_sphere(const QFormula& f, const SphereContext& ctx) {
  if (!ctx.order_allowed(f.N))
    throw std::invalid_argument("evaluate_q_formula_on_sphere: order exceeds n/2 in even integer dimension");
  const ExactScalar x0 = ctx.x0();
  ExactScalar total(0);
  for (const QTerm& t : f.terms) {
    ExactScalar val = t.coeff * q_sphere(ctx, t.a);
    for (int j : t.J.parts()) val = val * p_sphere(j).eval(x0);
    total = total + val;
  }
  return total + f.w_coeff * w_sphere(ctx, f.N);
}

EmitFormat parse_emit_format(std::string_view name) {
  if (name == "plain") return EmitFormat::plain;
  if (name == "latex") return EmitFormat::latex;
  if (name == "json") return EmitFormat::json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

namespace {

std::string script(int v, bool latex) {
  std::string d = std::to_string(v);
  if (latex && d.size() > 1) return "{" + d + "}";
  return d;
}

std::string operator_run(const QTerm& t, bool latex) {
  std::string s;
  const std::vector<int>& p = t.J.parts();
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    s += "P_" + script(2 * p[i], latex);
    if (j - i > 1) s += "^" + script(static_cast<int>(j - i), latex);
    i = j;
  }
  s += "(Q_" + script(2 * t.a, latex) + ")";
  return s;
}

// "2^4 2!" style: power of two, then the two factorials with 0! and 1!
// omitted. Only the canonical magnitude has this shape.
std::string factored_w_magnitude(int N, bool latex) {
  if (N == 1) return "4";
  std::string s = "2^" + script(2 * N, latex);
  if (N >= 2) s += " " + std::to_string(N) + "!";
  if (N - 1 >= 2) s += " " + std::to_string(N - 1) + "!";
  return s;
}

void append_signed(std::string& out, bool first, int sign, const std::string& body) {
  if (first)
    out += (sign < 0 ? "-" : "") + body;
  else
    out += (sign < 0 ? " - " : " + ") + body;
}

std::string emit_text(const QFormula& f, bool latex) {
  std::string out = "Q_" + script(2 * f.N, latex) + " = ";
  bool first = true;
  for (const QTerm& t : f.terms) {
    ExactScalar mag = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    std::string body = (mag == ExactScalar(1) ? "" : mag.str()) + operator_run(t, latex);
    append_signed(out, first, t.coeff.sign(), body);
    first = false;
  }
  ExactScalar wmag = f.w_coeff.sign() < 0 ? -f.w_coeff : f.w_coeff;
  std::string wbody;
  if (latex && wmag == canonical_w_magnitude(f.N))
    wbody = factored_w_magnitude(f.N, true);
  else
    wbody = wmag.str();
  wbody += " w_" + script(2 * f.N, latex);
  append_signed(out, first, f.w_coeff.sign(), wbody);
  return out;
}

std::string emit_json(const QFormula& f) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["object"] = "q-formula";
  j["N"] = f.N;
  j["terms"] = nlohmann::ordered_json::array();
  for (const QTerm& t : f.terms) {
    nlohmann::ordered_json e;
    e["J"] = t.J.parts();
    e["a"] = t.a;
    e["coeff"] = t.coeff.str();
    j["terms"].push_back(std::move(e));
  }
  j["w_coeff"] = f.w_coeff.str();
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit(const QFormula& f, EmitFormat format) {
  switch (format) {
    case EmitFormat::plain:
      return emit_text(f, false);
    case EmitFormat::latex:
      return emit_text(f, true);
    case EmitFormat::json:
      return emit_json(f);
  }
  throw std::logic_error("emit: bad format");
}

QFormula parse_qformula_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("q-formula json: ") + e.what());
  }
  if (!j.is_object() || j.value("object", "") != "q-formula" || j.value("schema_version", 0) != 1)
    throw std::invalid_argument("q-formula json: not a schema_version 1 q-formula object");
  QFormula f;
  f.N = j.at("N").get<int>();
  for (const auto& e : j.at("terms")) {
    QTerm t;
    t.J = Composition(e.at("J").get<std::vector<int>>());
    t.a = e.at("a").get<int>();
    t.coeff = ExactScalar::parse(e.at("coeff").get<std::string>());
    f.terms.push_back(std::move(t));
  }
  f.w_coeff = ExactScalar::parse(j.at("w_coeff").get<std::string>());
  return f;
}

namespace {

// Character scanner for display-style formulas. Skips whitespace and
// TeX spacing glue so pasted display math parses unchanged.
class DisplayScanner {
 public:
  explicit DisplayScanner(std::string_view text) : s_(text) {}

  void skip_ws() {
    for (;;) {
      while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r'))
        ++i_;
      if (i_ + 1 < s_.size() && s_[i_] == '\\' &&
          (s_[i_ + 1] == ',' || s_[i_ + 1] == ';' || s_[i_ + 1] == '!' || s_[i_ + 1] == ' ')) {
        i_ += 2;
        continue;
      }
      return;
    }
  }

  bool eof() {
    skip_ws();
    return i_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }

  void expect(char c, const char* context) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + context);
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Int read_uint(const char* context) {
    if (!digit_next()) fail(std::string("expected a number ") + context);
    Int v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      v = v * 10 + (s_[i_++] - '0');
    return v;
  }

  // Subscript or exponent: digits, optionally wrapped in braces.
  int read_script(const char* context) {
    bool braced = consume('{');
    Int v = read_uint(context);
    if (braced) expect('}', context);
    if (v > 1000000) fail(std::string("index out of range ") + context);
    return static_cast<int>(v);
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("display parse error at offset " + std::to_string(i_) + ": " + msg);
  }

 private:
  std::string_view s_;
  size_t i_ = 0;
};

int read_even_script(DisplayScanner& sc, const char* context) {
  int v = sc.read_script(context);
  if (v < 2 || v % 2 != 0) sc.fail(std::string("subscript must be a positive even order ") + context);
  return v;
}

}  // namespace

QFormula parse_q_display(const std::string& text) {
  DisplayScanner sc(text);
  sc.expect('Q', "at start of left-hand side");
  sc.expect('_', "after Q");
  const int twoN = read_even_script(sc, "on the left-hand side");
  const int N = twoN / 2;
  sc.expect('=', "after left-hand side");

  std::map<std::vector<int>, ExactScalar> terms;
  ExactScalar w_coeff(0);
  bool have_w = false;
  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.consume('-'))
      sign = -1;
    else if (!sc.consume('+') && !first)
      sc.fail("expected '+' or '-' between terms");
    first = false;

    ExactScalar coeff(1);
    while (sc.digit_next()) {
      Int a = sc.read_uint("in coefficient");
      if (sc.consume('^')) {
        coeff = coeff * pow(ExactScalar(a), sc.read_script("in coefficient exponent"));
      } else if (sc.consume('!')) {
        if (a > 1000) sc.fail("factorial argument out of range");
        coeff = coeff * factorial(static_cast<int>(a));
      } else if (sc.consume('/')) {
        coeff = coeff * ExactScalar(a, sc.read_uint("in coefficient denominator"));
      } else {
        coeff = coeff * ExactScalar(a);
      }
      sc.consume('*');
    }
    coeff = ExactScalar(sign) * coeff;

    if (sc.peek() == 'P') {
      std::vector<int> parts;
      while (sc.consume('P')) {
        sc.expect('_', "after P");
        int half = read_even_script(sc, "in operator subscript") / 2;
        int e = 1;
        if (sc.consume('^')) e = sc.read_script("in operator exponent");
        if (e < 1) sc.fail("operator exponent must be positive");
        parts.insert(parts.end(), e, half);
      }
      sc.expect('(', "before the operator argument");
      sc.expect('Q', "in the operator argument");
      sc.expect('_', "in the operator argument");
      int a = read_even_script(sc, "in the argument subscript") / 2;
      sc.expect(')', "after the operator argument");
      int total = a;
      for (int p : parts) total += p;
      if (total != N) sc.fail("term orders do not sum to the left-hand side order");
      parts.push_back(a);
      auto [it, fresh] = terms.emplace(std::move(parts), coeff);
      if (!fresh) it->second = it->second + coeff;
    } else if (sc.consume('w')) {
      sc.expect('_', "after w");
      if (read_even_script(sc, "in the w subscript") != twoN)
        sc.fail("w subscript does not match the left-hand side order");
      w_coeff = w_coeff + coeff;
      have_w = true;
    } else {
      sc.fail("expected an operator term or a w term");
    }
  }
  if (!have_w) throw std::invalid_argument("display parse error: missing w term");

  QFormula f;
  f.N = N;
  f.w_coeff = w_coeff;
  for (auto& [parts, coeff] : terms) {
    if (coeff.is_zero()) continue;
    QTerm t;
    t.a = parts.back();
    std::vector<int> j(parts.begin(), parts.end() - 1);
    t.J = Composition(std::move(j));
    t.coeff = coeff;
    f.terms.push_back(std::move(t));
  }
  return f;
}

bool equivalent_q_displays(const std::string& a, const std::string& b) {
  const QFormula fa = parse_q_display(a);
  const QFormula fb = parse_q_display(b);
  if (fa.N != fb.N || fa.w_coeff != fb.w_coeff) return false;
  std::map<std::vector<int>, ExactScalar> ta, tb;
  for (const QTerm& t : fa.terms) ta[full_parts(t)] = t.coeff;
  for (const QTerm& t : fb.terms) tb[full_parts(t)] = t.coeff;
  return ta == tb;
}

namespace {

void build_paneitz_pair(MultiPoly& reduced, MultiPoly& target) {
  auto syms = make_symbols({"J", "S", "A", "n"});
  const MultiPoly Jv = MultiPoly::symbol(syms, "J");
  const MultiPoly Sv = MultiPoly::symbol(syms, "S");
  const MultiPoly Av = MultiPoly::symbol(syms, "A");
  const MultiPoly nv = MultiPoly::symbol(syms, "n");
  const MultiPoly one = MultiPoly::constant(syms, ExactScalar(1));
  const MultiPoly half_n = ExactScalar(1, 2) * nv;

  // Conformally flat volume coefficients in the three generators.
  const MultiPoly v2 = ExactScalar(-1, 2) * Jv;
  const MultiPoly v4 = ExactScalar(1, 8) * (Jv * Jv - Sv);
  const TruncSeries<MultiPoly> w = series_sqrt(TruncSeries<MultiPoly>({one, v2, v4}));

  const QFormula f = derive_q_formula(2);
  const MultiPoly p2_of_q2 = Av - (half_n - one) * (Jv * Jv);
  MultiPoly acc(syms);
  for (const QTerm& t : f.terms) {
    if (t.J.parts() != std::vector<int>{1} || t.a != 1)
      throw std::logic_error("paneitz reduction: unexpected order-2 term");
    acc += t.coeff * p2_of_q2;
  }
  reduced = acc + f.w_coeff * w.coeff(2);
  target = half_n * (Jv * Jv) - ExactScalar(2) * Sv - Av;
}

}  // namespace

MultiPoly paneitz_reduction() {
  MultiPoly reduced{make_symbols({"J"})}, target{make_symbols({"J"})};
  build_paneitz_pair(reduced, target);
  return reduced;
}

bool verify_paneitz_symbolic() {
  MultiPoly reduced{make_symbols({"J"})}, target{make_symbols({"J"})};
  build_paneitz_pair(reduced, target);
  return reduced == target;
}

bool verify_paneitz_sampled(const std::vector<ExactScalar>& dims) {
  MultiPoly reduced{make_symbols({"J"})}, target{make_symbols({"J"})};
  build_paneitz_pair(reduced, target);
  for (const ExactScalar& d : dims) {
    const MultiPoly dim = MultiPoly::constant(reduced.symbols(), d);
    if (reduced.substitute("n", dim) != target.substitute("n", dim)) return false;
  }
  return true;
}

}  // namespace qlab
