#include "qlab/verify.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qlab/lambda.hpp"
#include "qlab/multiplicity.hpp"
#include "qlab/pi.hpp"
#include "qlab/qformula.hpp"
#include "qlab/series.hpp"
#include "qlab/sphere.hpp"

namespace qlab {

namespace {

using TaskFn = std::function<CheckRecord()>;

// Wraps a predicate so worker threads never see an exception escape.
TaskFn check_task(std::string id, std::string statement, nlohmann::ordered_json params,
                  std::function<bool()> pred,
                  std::string fail_detail = "left and right sides differ") {
  return [id = std::move(id), statement = std::move(statement), params = std::move(params),
          pred = std::move(pred), fail_detail = std::move(fail_detail)]() -> CheckRecord {
    try {
      return make_result(pred(), id, statement, params, fail_detail);
    } catch (const std::exception& e) {
      return make_fail(id, statement, params, std::string("exception: ") + e.what());
    }
  };
}

TaskFn skip_task(std::string id, std::string statement, nlohmann::ordered_json params,
                 std::string reason) {
  return [id = std::move(id), statement = std::move(statement), params = std::move(params),
          reason = std::move(reason)]() -> CheckRecord {
    return make_skip(id, statement, params, reason);
  };
}

std::vector<CheckRecord> run_tasks(const std::vector<TaskFn>& tasks, int jobs) {
  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw == 0 ? 1 : static_cast<int>(hw);
  }
  jobs = std::min<int>(jobs, static_cast<int>(tasks.size()));
  std::vector<CheckRecord> results(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        results[i] = tasks[i]();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  return results;
}

std::string dim_tag(const ExactScalar& n) {
  std::string s = n.str();
  for (char& c : s)
    if (c == '/') c = '-';
  return s;
}

// ---- combinatorics ---------------------------------------------------

void add_combinatorics_tasks(std::vector<TaskFn>& tasks, const VerifyOptions& opt) {
  for (int N = 2; N <= opt.nmax; ++N)
    tasks.push_back(check_task("comb.sum-zero.N" + std::to_string(N),
                               "the multiplicities of all compositions of N sum to zero",
                               {{"N", N}}, [N] { return verify_m_sum_zero(N); },
                               "sum over compositions is nonzero"));
  for (int N = 1; N <= opt.nmax; ++N)
    tasks.push_back(check_task("comb.reversal.N" + std::to_string(N),
                               "composition reversal preserves the multiplicity", {{"N", N}},
                               [N] { return verify_palindrome_symmetry(N); },
                               "some reversed pair has unequal multiplicities"));
  for (int N = 2; N <= opt.nmax; ++N)
    tasks.push_back(check_task(
        "comb.ratio.N" + std::to_string(N),
        "dropping the leading part j of a composition of N divides the multiplicity by "
        "-(j+r) N / (binom(N,j)^2 j (N-j))",
        {{"N", N}}, [N] { return verify_ratio_identities(N); },
        "some quotient misses the closed form"));

  // 10 x 10 rational grid with non-integer points; equal pairs are
  // outside the identity's hypothesis and skipped inside the loop.
  const std::vector<ExactScalar> xs = {
      ExactScalar(-5, 2), ExactScalar(-2), ExactScalar(-3, 2), ExactScalar(-1),
      ExactScalar(-1, 2), ExactScalar(1, 2), ExactScalar(1),   ExactScalar(3, 2),
      ExactScalar(2),     ExactScalar(5, 2)};
  const std::vector<ExactScalar> ys = {
      ExactScalar(-7, 3), ExactScalar(-2),   ExactScalar(-5, 3), ExactScalar(-4, 3),
      ExactScalar(-1),    ExactScalar(-2, 3), ExactScalar(2, 3),  ExactScalar(1),
      ExactScalar(4, 3),  ExactScalar(7, 3)};
  for (int N = 2; N <= opt.nmax; ++N)
    tasks.push_back(check_task(
        "comb.stirling-pair.N" + std::to_string(N),
        "the bilinear Stirling sum in x, y collapses to (y b_N(x) - x b_N(y))/(x - y)",
        {{"N", N}, {"grid", "10x10 rationals"}},
        [N, xs, ys] {
          for (const ExactScalar& x : xs)
            for (const ExactScalar& y : ys) {
              if (x == y) continue;
              if (!verify_stirling_pair_identity(N, x, y)) return false;
            }
          return true;
        },
        "grid point violates the identity"));

  for (int N = 2; N <= opt.nmax; ++N)
    tasks.push_back(check_task(
        "comb.stirling-diagonal.N" + std::to_string(N),
        "the diagonal Stirling sum at M equals (-1)^(N-M-1) M! (N-M-1)! for 1 <= M <= N-1",
        {{"N", N}},
        [N] {
          for (int M = 1; M < N; ++M)
            if (!verify_stirling_diagonal_identity(N, M)) return false;
          return true;
        },
        "some admissible M violates the identity"));
  tasks.push_back(skip_task("comb.stirling-diagonal.M0",
                            "the diagonal Stirling sum at M equals (-1)^(N-M-1) M! (N-M-1)!",
                            {{"M", 0}},
                            "degenerate at M = 0: the sum is empty while the right side is not"));
}

// ---- pi --------------------------------------------------------------

void add_pi_tasks(std::vector<TaskFn>& tasks, const VerifyOptions& opt) {
  for (int N = 1; N <= opt.nmax; ++N)
    tasks.push_back(check_task(
        "pi.agreement.N" + std::to_string(N),
        "the defining sum, the closed quotient form, and interpolation through the "
        "factorization values build the same operator polynomial",
        {{"N", N}},
        [N] {
          const PiPolynomial a = pi_definition(N);
          const PiPolynomial b = pi_closed(N);
          const PiPolynomial c = pi_from_factorizations(N);
          return a.body == b.body && a.body == c.body;
        },
        "the three constructions disagree"));

  for (int N = 1; N <= opt.nmax; ++N)
    tasks.push_back([N]() -> CheckRecord {
      const std::string id = "pi.factorization.N" + std::to_string(N);
      const std::string statement =
          "every integer specialization of the order-N polynomial factors through a "
          "lower-order one";
      try {
        for (const FactorizationIdentity& f : verify_factorizations(N))
          if (!f.pass)
            return make_fail(id, statement, {{"N", N}, {"j", f.j}}, f.detail);
        return make_pass(id, statement, {{"N", N}});
      } catch (const std::exception& e) {
        return make_fail(id, statement, {{"N", N}}, std::string("exception: ") + e.what());
      }
    });

  tasks.push_back(check_task(
      "pi.example.order2",
      "the order-2 polynomial equals (P_4 - P_2^2) t - P_4 in its spectral variable", {},
      [] {
        const NCOperatorPoly g2 = NCOperatorPoly::generator(2);
        const NCOperatorPoly g1 = NCOperatorPoly::generator(1);
        const NCOperatorPoly expect = UniPoly::variable("t") * (g2 - g1 * g1) - g2;
        return pi_definition(2).body == expect;
      },
      "rendered polynomial differs from the display"));
}

// ---- sphere ----------------------------------------------------------

void add_sphere_tasks(std::vector<TaskFn>& tasks, const VerifyOptions& opt,
                      const std::vector<ExactScalar>& dims) {
  for (int order = 1; order <= 3; ++order) {
    static const char* statements[4] = {
        nullptr,
        "the multiplicity-weighted eigenvalue sum of order 1 equals N!(N-1)! x",
        "the order-2 weighted sum equals -(N!(N-1)!/2)(x^2 + N x)",
        "the order-3 weighted sum equals (N!(N-1)!/12)(x^3 + (3N-1)x^2 + N(3N-1)/2 x)"};
    for (int N = order; N <= opt.nmax; ++N)
      tasks.push_back(check_task(
          "sphere.sum.order" + std::to_string(order) + ".N" + std::to_string(N),
          statements[order], {{"N", N}, {"order", order}},
          [N, order] { return verify_sphere_sum(N, order); },
          "polynomial identity in x fails"));
  }

  for (const ExactScalar& n : dims) {
    const SphereContext ctx(n);
    const std::string tag = dim_tag(n);
    for (int N = 1; N <= opt.nmax; ++N) {
      const std::string suffix = ".n" + tag + ".N" + std::to_string(N);
      const nlohmann::ordered_json params{{"n", n.str()}, {"N", N}};
      if (!ctx.order_allowed(N)) {
        tasks.push_back(skip_task("sphere.eigenvalue" + suffix,
                                  "eigenvalue value at the constant function matches "
                                  "(-1)^N (n/2 - N) times the curvature value",
                                  params, kSkipEvenDim));
        tasks.push_back(skip_task("sphere.recursion" + suffix,
                                  "the weighted composition sum with curvature values equals "
                                  "2^(2N) N!(N-1)! times the sqrt-volume coefficient",
                                  params, kSkipEvenDim));
        tasks.push_back(skip_task("sphere.square-relation" + suffix,
                                  "the quadratic coefficient relation closes on sphere values",
                                  params, kSkipEvenDim));
        continue;
      }
      tasks.push_back(check_task("sphere.eigenvalue" + suffix,
                                 "eigenvalue value at the constant function matches "
                                 "(-1)^N (n/2 - N) times the curvature value",
                                 params, [ctx, N] { return verify_eigenvalue_consistency(ctx, N); }));
      tasks.push_back(check_task("sphere.recursion" + suffix,
                                 "the weighted composition sum with curvature values equals "
                                 "2^(2N) N!(N-1)! times the sqrt-volume coefficient",
                                 params, [ctx, N] { return verify_q_recursion_on_sphere(ctx, N); }));
      tasks.push_back(check_task("sphere.square-relation" + suffix,
                                 "the quadratic coefficient relation closes on sphere values",
                                 params, [ctx, N] { return verify_lambda_square_on_sphere(ctx, N); }));
    }

    const nlohmann::ordered_json nparams{{"n", n.str()}};
    if (ctx.order_allowed(2))
      tasks.push_back(check_task("sphere.pair-relation.order2.n" + tag,
                                 "value(2) + value(1)^2 = 16 v_4 on the sphere", nparams,
                                 [ctx] { return verify_lambda_order2_display(ctx); }));
    else
      tasks.push_back(skip_task("sphere.pair-relation.order2.n" + tag,
                                "value(2) + value(1)^2 = 16 v_4 on the sphere", nparams,
                                kSkipEvenDim));
    if (ctx.order_allowed(3))
      tasks.push_back(check_task(
          "sphere.pair-relation.order3.n" + tag,
          "-value(3) - 6 value(1) value(2) = -2! 3! 2^5 v_6 on the sphere "
          "(sign-corrected right side)",
          nparams, [ctx] { return verify_lambda_order3_display(ctx); }));
    else
      tasks.push_back(skip_task("sphere.pair-relation.order3.n" + tag,
                                "-value(3) - 6 value(1) value(2) = -2! 3! 2^5 v_6 on the sphere "
                                "(sign-corrected right side)",
                                nparams, kSkipEvenDim));
  }
}

// ---- series ----------------------------------------------------------

void add_series_tasks(std::vector<TaskFn>& tasks, const VerifyOptions& opt) {
  struct Dictionary {
    const char* id;
    const char* statement;
    int order;
  };
  static const Dictionary dict[] = {
      {"series.dictionary.order1", "2 w_2 = v_2", 1},
      {"series.dictionary.order2", "8 w_4 = 4 v_4 - v_2^2", 2},
      {"series.dictionary.order3", "16 w_6 = 8 v_6 - 4 v_4 v_2 + v_2^3", 3},
      {"series.dictionary.order4",
       "128 w_8 = 64 v_8 - 32 v_6 v_2 - 16 v_4^2 + 24 v_2^2 v_4 - 5 v_2^4", 4},
  };
  for (const Dictionary& d : dict)
    tasks.push_back(check_task(d.id, d.statement, {{"order", d.order}}, [d] {
      auto syms = make_symbols({"v2", "v4", "v6", "v8"});
      auto sym = [&](const char* s) { return MultiPoly::symbol(syms, s); };
      const MultiPoly one = MultiPoly::constant(syms, ExactScalar(1));
      const TruncSeries<MultiPoly> v(
          std::vector<MultiPoly>{one, sym("v2"), sym("v4"), sym("v6"), sym("v8")});
      const TruncSeries<MultiPoly> w = series_sqrt(v);
      switch (d.order) {
        case 1:
          return ExactScalar(2) * w.coeff(1) == sym("v2");
        case 2:
          return ExactScalar(8) * w.coeff(2) == ExactScalar(4) * sym("v4") - sym("v2").pow(2);
        case 3:
          return ExactScalar(16) * w.coeff(3) ==
                 ExactScalar(8) * sym("v6") - ExactScalar(4) * (sym("v4") * sym("v2")) +
                     sym("v2").pow(3);
        default:
          return ExactScalar(128) * w.coeff(4) ==
                 ExactScalar(64) * sym("v8") - ExactScalar(32) * (sym("v6") * sym("v2")) -
                     ExactScalar(16) * sym("v4").pow(2) +
                     ExactScalar(24) * (sym("v2").pow(2) * sym("v4")) -
                     ExactScalar(5) * sym("v2").pow(4);
      }
    }));

  tasks.push_back(check_task(
      "series.dictionary.square", "the square of the formal sqrt returns the volume series", {},
      [] {
        auto syms = make_symbols({"v2", "v4", "v6", "v8"});
        auto sym = [&](const char* s) { return MultiPoly::symbol(syms, s); };
        const TruncSeries<MultiPoly> v(std::vector<MultiPoly>{
            MultiPoly::constant(syms, ExactScalar(1)), sym("v2"), sym("v4"), sym("v6"),
            sym("v8")});
        return series_sqrt(v).square() == v;
      }));

  {
    const auto checks = verify_lambda_square_relations(opt.nmax);
    for (const LambdaRelationCheck& c : checks)
      tasks.push_back(check_task(
          "series.square-relation.N" + std::to_string(c.N),
          "coefficient N of the squared generating series equals twice the order-N symbol "
          "plus the binomially weighted pair sum",
          {{"N", c.N}}, [pass = c.pass] { return pass; },
          "formal coefficients differ: " + c.lhs + " vs " + c.rhs));
  }

  tasks.push_back(check_task(
      "series.sqrt-roundtrip.random",
      "sqrt(square(u)) = u for randomly drawn unit rational series", {{"count", 100}, {"max_order", 12}},
      [] {
        std::mt19937_64 rng(0x5eed);
        auto rnd = [&rng](int lo, int hi) {
          return std::uniform_int_distribution<int>(lo, hi)(rng);
        };
        for (int i = 0; i < 100; ++i) {
          const int T = rnd(1, 12);
          std::vector<ExactScalar> c{ExactScalar(1)};
          for (int j = 1; j <= T; ++j) c.emplace_back(rnd(-20, 20), rnd(1, 9));
          const TruncSeries<ExactScalar> u(std::move(c));
          if (!(series_sqrt(u.square()) == u)) return false;
        }
        return true;
      },
      "round-trip failed for a random series"));

  tasks.push_back(check_task(
      "series.schouten.sphere4",
      "the signed elementary symmetric functions of the Schouten spectrum of the 4-sphere "
      "reproduce the binomial volume coefficients",
      {{"n", 4}},
      [] {
        const std::vector<ExactScalar> eigs(4, ExactScalar(1, 2));
        for (int N = 1; N <= 4; ++N) {
          const ExactScalar expect = binomial(ExactScalar(4), N) * pow(ExactScalar(-1, 4), N);
          if (v_from_schouten_spectrum(eigs, N) != expect) return false;
        }
        return true;
      }));
}

// ---- q ---------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

void add_q_tasks(std::vector<TaskFn>& tasks, const VerifyOptions& opt,
                 const std::vector<ExactScalar>& dims) {
  const std::string golden = resolve_golden_dir(opt.golden_dir);
  for (int N = 1; N <= 4; ++N) {
    const std::string file = "q" + std::to_string(2 * N) + ".txt";
    const std::string id = "q.derive.N" + std::to_string(N);
    const std::string statement =
        "the derived recursion formula matches the recorded display coefficient-for-coefficient";
    const nlohmann::ordered_json params{{"N", N}, {"golden", file}};
    if (golden.empty()) {
      tasks.push_back(skip_task(id, statement, params,
                                "golden directory not found; set QLAB_GOLDEN_DIR"));
      continue;
    }
    tasks.push_back([id, statement, params, golden, file, N]() -> CheckRecord {
      try {
        const std::string recorded = read_text_file(std::filesystem::path(golden) / file);
        const std::string derived = emit(derive_q_formula(N), EmitFormat::latex);
        if (equivalent_q_displays(recorded, derived)) return make_pass(id, statement, params);
        return make_fail(id, statement, params,
                         "coefficients differ: derived \"" + derived + "\" vs recorded \"" +
                             recorded + "\"");
      } catch (const std::exception& e) {
        return make_fail(id, statement, params, std::string("exception: ") + e.what());
      }
    });
  }

  tasks.push_back(check_task(
      "q.emission.pinned", "canonical renderings of the two lowest orders are the pinned strings",
      {},
      [] {
        return emit(derive_q_formula(1), EmitFormat::plain) == "Q_2 = -4 w_2" &&
               emit(derive_q_formula(2), EmitFormat::latex) == "Q_4 = -P_2(Q_2) + 2^4 2! w_4";
      },
      "rendering drifted from the pinned text"));

  for (int N = 1; N <= opt.nmax; ++N)
    tasks.push_back(check_task("q.json-roundtrip.N" + std::to_string(N),
                               "JSON emission parses back to the identical formula", {{"N", N}},
                               [N] {
                                 const QFormula f = derive_q_formula(N);
                                 return parse_qformula_json(emit(f, EmitFormat::json)) == f;
                               }));

  for (const ExactScalar& n : dims) {
    const SphereContext ctx(n);
    const std::string tag = dim_tag(n);
    for (int N = 1; N <= opt.nmax; ++N) {
      const std::string id = "q.sphere-value.n" + tag + ".N" + std::to_string(N);
      const std::string statement =
          "substituting sphere data into the derived formula returns the curvature value";
      const nlohmann::ordered_json params{{"n", n.str()}, {"N", N}};
      if (!ctx.order_allowed(N)) {
        tasks.push_back(skip_task(id, statement, params, kSkipEvenDim));
        continue;
      }
      tasks.push_back(check_task(id, statement, params, [ctx, N] {
        return evaluate_q_formula_on_sphere(derive_q_formula(N), ctx) == q_sphere(ctx, N);
      }));
    }
  }

  tasks.push_back(check_task(
      "q.scalar-ring.symbolic",
      "the order-2 formula reduces to n/2 J^2 - 2 S - A in the scalar ring, identically in n",
      {}, [] { return verify_paneitz_symbolic(); }));
  tasks.push_back(check_task(
      "q.scalar-ring.sampled",
      "the scalar-ring reduction holds at sampled integer and rational dimensions", {},
      [] {
        std::vector<ExactScalar> dims;
        for (int n = 3; n <= 10; ++n) dims.emplace_back(n);
        dims.emplace_back(7, 2);
        return verify_paneitz_sampled(dims);
      }));
}

}  // namespace

std::vector<ExactScalar> enumerate_dims(const ExactScalar& lo, const ExactScalar& hi) {
  std::vector<ExactScalar> out;
  if (hi < lo) return out;
  if (!lo.is_integer()) out.push_back(lo);
  const Int first = (lo.num() + lo.den() - 1) / lo.den();  // ceil, positive range
  const Int last = hi.num() / hi.den();                    // floor
  for (Int k = first; k <= last; ++k) out.emplace_back(k);
  if (!hi.is_integer()) out.push_back(hi);
  return out;
}

std::string resolve_golden_dir(const std::string& requested) {
  namespace fs = std::filesystem;
  if (!requested.empty()) return fs::is_directory(requested) ? requested : std::string();
  for (const char* candidate : {"tests/golden", "../tests/golden"})
    if (fs::is_directory(candidate)) return candidate;
  return {};
}

bool is_valid_scope(const std::string& scope) {
  return scope == "all" || scope == "combinatorics" || scope == "pi" || scope == "sphere" ||
         scope == "series" || scope == "q";
}

VerificationReport run_suite(const std::string& scope, const VerifyOptions& opt) {
  if (!is_valid_scope(scope)) throw std::invalid_argument("unknown scope: " + scope);
  if (opt.nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  if (opt.dim_lo < ExactScalar(3)) throw std::invalid_argument("dimensions must be >= 3");
  if (opt.dim_hi < opt.dim_lo) throw std::invalid_argument("empty dimension range");

  const std::vector<ExactScalar> dims = enumerate_dims(opt.dim_lo, opt.dim_hi);
  std::vector<TaskFn> tasks;
  if (scope == "all" || scope == "combinatorics") add_combinatorics_tasks(tasks, opt);
  if (scope == "all" || scope == "pi") add_pi_tasks(tasks, opt);
  if (scope == "all" || scope == "sphere") add_sphere_tasks(tasks, opt, dims);
  if (scope == "all" || scope == "series") add_series_tasks(tasks, opt);
  if (scope == "all" || scope == "q") add_q_tasks(tasks, opt, dims);

  VerificationReport report(scope);
  report.add_all(run_tasks(tasks, opt.jobs));
  return report;
}

}  // namespace qlab
