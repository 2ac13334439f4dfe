#include "qhecke/suites.hpp"

#include "qhecke/coxeter.hpp"
#include "qhecke/cyclotomic.hpp"
#include "qhecke/fock.hpp"
#include "qhecke/heckebridge.hpp"
#include "qhecke/klr_analysis.hpp"
#include "qhecke/klr_operator.hpp"
#include "qhecke/linalg.hpp"
#include "qhecke/nilhecke.hpp"
#include "qhecke/polyring.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace qh {

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double SuiteReport::seconds() const {
  double s = 0;
  for (const auto& c : checks) s += c.seconds;
  return s;
}

std::string SuiteReport::str(bool timings) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << suite << ": " << c.name;
    if (!c.params.empty()) os << " [" << c.params << "]";
    if (!c.detail.empty()) os << " " << c.detail;
    if (timings) os << " (" << c.seconds << " s)";
    os << "\n";
  }
  return os.str();
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  // body returns pass/fail and fills detail; exceptions count as failures
  void check(const std::string& name, const std::string& params, const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.name = name;
    r.params = params;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.pass = body(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string counted(std::size_t checked, std::size_t failed) {
  return "checked " + std::to_string(checked) + ", failed " + std::to_string(failed);
}

std::string kv(const std::string& k, long long v) { return k + "=" + std::to_string(v); }

MPoly random_poly(std::mt19937_64& rng, int n, int max_exp, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  const auto mons = monomials_up_to(n, max_exp);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  MPoly p;
  for (int k = 0; k < nterms; ++k) p += MPoly::term(mons[pick(rng)], coef(rng));
  return p;
}

NilHeckeElement random_element(std::mt19937_64& rng, const std::vector<NilHeckeElement>& basis, int n, int nterms) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  NilHeckeElement e(n);
  for (int k = 0; k < nterms; ++k) e += basis[pick(rng)].scaled(MPoly(coef(rng)));
  return e;
}

std::string dim_str(const DimVector& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"demazure",   "nilhecke",    "klr-relations", "pbw", "grdim",
                                              "cyclotomic", "heckebridge", "hall",          "fock"};
  return names;
}

SuiteConfig default_config(const std::string& suite) {
  SuiteConfig c;
  if (suite == "poincare") c.n = 6;
  if (suite == "demazure") {
    c.n = 4;
    c.max_exp = 6;
  }
  if (suite == "nilhecke") c.samples = 200;
  if (suite == "cyclotomic") c.n = 4;
  return c;
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg) {
  if (suite == "poincare") return poincare_suite(cfg);
  if (suite == "demazure") return demazure_suite(cfg);
  if (suite == "nilhecke") return nilhecke_suite(cfg);
  if (suite == "klr-relations") return klr_relations_suite(cfg);
  if (suite == "pbw") return pbw_suite(cfg);
  if (suite == "grdim") return grdim_suite(cfg);
  if (suite == "cyclotomic") return cyclotomic_suite(cfg);
  if (suite == "heckebridge") return heckebridge_suite(cfg);
  if (suite == "hall") return hall_suite(cfg);
  if (suite == "fock") return fock_suite(cfg);
  throw UsageError("unknown suite '" + suite + "'");
}

SuiteReport poincare_suite(const SuiteConfig& cfg) {
  Recorder rec("poincare");
  for (int n = 1; n <= cfg.n; ++n)
    rec.check("length generating function equals the product formula", kv("n", n), [&](std::string& d) {
      const Laurent lhs = poincare_polynomial(n);
      d = lhs.str("q");
      return lhs == poincare_product_formula(n) && lhs.at_one() == factorial(n);
    });
  return rec.take();
}

SuiteReport demazure_suite(const SuiteConfig& cfg) {
  Recorder rec("demazure");
  const int n = cfg.n;
  rec.check("nil Coxeter relations on monomials", kv("n", n) + " " + kv("max_exp", cfg.max_exp), [&](std::string& d) {
    std::size_t checked = 0, failed = 0;
    for (const auto& m : monomials_up_to(n, cfg.max_exp)) {
      const MPoly p = MPoly::term(m, 1);
      std::vector<MPoly> once(n);
      for (int i = 1; i < n; ++i) once[i] = demazure(i, p);
      for (int i = 1; i < n; ++i) {
        ++checked;
        failed += !demazure(i, once[i]).is_zero();
        for (int j = i + 1; j < n; ++j) {
          ++checked;
          if (j > i + 1)
            failed += demazure(i, once[j]) != demazure(j, once[i]);
          else
            failed += demazure(i, demazure(j, once[i])) != demazure(j, demazure(i, once[j]));
        }
      }
    }
    d = counted(checked, failed);
    return failed == 0;
  });
  for (int k = 1; k <= n + 1; ++k)
    rec.check("longest element on the staircase is 1", kv("n", k), [&](std::string& d) {
      const MPoly r = demazure_word(longest_element(k), staircase(k));
      d = r.str();
      return r == MPoly(1);
    });
  rec.check("schubert coordinates round trip", "n=3 " + kv("samples", cfg.samples) + " " + kv("seed", cfg.seed),
            [&](std::string& d) {
              std::mt19937_64 rng(cfg.seed);
              std::size_t failed = 0;
              for (int t = 0; t < cfg.samples; ++t) {
                const MPoly p = random_poly(rng, 3, 5, 6);
                const auto c = schubert_coordinates(p, 3);
                bool ok = schubert_reconstruct(c, 3) == p;
                for (const auto& [w, qc] : c) ok = ok && is_symmetric(qc, 3);
                failed += !ok;
              }
              d = counted(cfg.samples, failed);
              return failed == 0;
            });
  return rec.take();
}

SuiteReport nilhecke_suite(const SuiteConfig& cfg) {
  Recorder rec("nilhecke");
  const int n = cfg.n;
  const auto basis = pbw_basis(n, cfg.max_exp);
  std::vector<NilHeckeElement> products;
  rec.check("PBW product equals operator composition", kv("n", n) + " " + kv("max_exp", cfg.max_exp),
            [&](std::string& d) {
              const auto schubert = schubert_basis(n);
              std::vector<std::vector<MPoly>> images;
              for (const auto& b : basis) {
                std::vector<MPoly> im;
                for (const auto& [w, f] : schubert) im.push_back(apply_to_polynomial(b, f));
                images.push_back(std::move(im));
              }
              std::size_t failed = 0;
              products.reserve(basis.size() * basis.size());
              for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = 0; b < basis.size(); ++b) {
                  products.push_back(basis[a] * basis[b]);
                  std::size_t k = 0;
                  for (const auto& [w, f] : schubert) {
                    if (apply_to_polynomial(products.back(), f) != apply_to_polynomial(basis[a], images[b][k])) {
                      ++failed;
                      break;
                    }
                    ++k;
                  }
                }
              d = counted(products.size(), failed);
              return failed == 0;
            });
  for (int k = 1; k <= n + 1; ++k)
    rec.check("b_n is idempotent", kv("n", k), [&](std::string&) { return b_n(k) * b_n(k) == b_n(k); });
  rec.check("t' is symmetric on basis pairs", kv("n", n) + " " + kv("max_exp", cfg.max_exp), [&](std::string& d) {
    if (products.size() != basis.size() * basis.size()) throw MathError("products unavailable");
    std::size_t failed = 0;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        failed += trace_tprime(products[a * basis.size() + b]) != trace_tprime(products[b * basis.size() + a]);
    d = counted(basis.size() * (basis.size() - 1) / 2, failed);
    return failed == 0;
  });
  rec.check("t' is symmetric on random pairs", kv("n", n + 1) + " " + kv("samples", cfg.samples) + " " + kv("seed", cfg.seed),
            [&](std::string& d) {
              std::mt19937_64 rng(cfg.seed);
              const auto big = pbw_basis(n + 1, 2);
              std::size_t failed = 0;
              for (int t = 0; t < cfg.samples; ++t) {
                const auto a = random_element(rng, big, n + 1, 3), b = random_element(rng, big, n + 1, 3);
                failed += trace_tprime(a * b) != trace_tprime(b * a);
              }
              d = counted(cfg.samples, failed);
              return failed == 0;
            });
  for (int k = 1; k <= n; ++k)
    rec.check("Gram determinant of the Schubert basis is a unit", kv("n", k), [&](std::string& d) {
      const MPoly det = determinant_leibniz(schubert_gram_matrix(k));
      d = "det=" + det.str();
      return det == MPoly(1) || det == MPoly(-1);
    });
  return rec.take();
}

SuiteReport klr_relations_suite(const SuiteConfig& cfg) {
  Recorder rec("klr-relations");
  const KLRAlgebra A(cfg.quiver, cfg.n);
  const std::string params = "quiver=" + cfg.quiver_name + " " + kv("n", cfg.n) + " " + kv("max_exp", cfg.max_exp);
  rec.check("relations of R_Q in the polynomial representation", params, [&](std::string& d) {
    const auto r = check_relations(A, cfg.max_exp);
    d = counted(r.checked, r.failures.size());
    if (!r.ok()) d += "; first: " + r.failures.front();
    return r.ok() && r.checked > 0;
  });
  if (cfg.n >= 3 && cfg.quiver.vertices() >= 2 && cfg.quiver.edges(1, 2) > 0)
    rec.check("torsion multiplier kills the discrepancy", "quiver=" + cfg.quiver_name + " v=(1,2,1)",
              [&](std::string& d) {
                const KLRAlgebra B(cfg.quiver, 3);
                const auto r = torsion_check(B, {1, 2, 1}, 1);
                d = "multiplier=" + r.multiplier.str();
                return !r.discrepancy_zero && r.annihilated && r.holds_in_h;
              });
  return rec.take();
}

SuiteReport pbw_suite(const SuiteConfig& cfg) {
  Recorder rec("pbw");
  rec.check("PBW words are linearly independent",
            "quiver=" + cfg.quiver_name + " " + kv("n", cfg.n) + " " + kv("max_exp", cfg.max_exp), [&](std::string& d) {
              const KLRAlgebra A(cfg.quiver, cfg.n);
              const auto r = pbw_independence(A, cfg.max_exp);
              d = "words=" + std::to_string(r.words) + " rank=" + std::to_string(r.rank);
              return r.independent() && r.words > 0;
            });
  return rec.take();
}

SuiteReport grdim_suite(const SuiteConfig& cfg) {
  Recorder rec("grdim");
  for (int n = 1; n <= cfg.n; ++n)
    rec.check("closed form equals PBW enumeration up to v -> 1/v", "quiver=" + cfg.quiver_name + " " + kv("n", n),
              [&](std::string& d) {
                const KLRAlgebra A(cfg.quiver, n);
                std::size_t checked = 0, failed = 0;
                for (const auto& v : A.idempotents())
                  for (const auto& vp : A.idempotents()) {
                    ++checked;
                    failed += hom_graded_dimension(A.quiver(), v, vp) != hom_graded_dimension_enumerated(A, v, vp).inverted();
                  }
                d = counted(checked, failed);
                return failed == 0;
              });
  return rec.take();
}

SuiteReport cyclotomic_suite(const SuiteConfig& cfg) {
  Recorder rec("cyclotomic");
  for (int n = 0; n <= cfg.n; ++n)
    for (int i = 0; i <= n + 1; ++i) {
      const std::string params = kv("n", n) + " " + kv("i", i) + " " + kv("seed", cfg.seed);
      rec.check(i <= n ? "rank equals i! n!/(n-i)!" : "algebra vanishes for i > n", params, [&](std::string& d) {
        const auto r = cyclotomic_rank(n, i, cfg.seed);
        d = "rank=" + std::to_string(r.ranks.back()) + " expected=" + r.expected.str();
        return r.consistent && Integer(r.ranks.back()) == r.expected && r.expected == cyclotomic_rank_formula(n, i);
      });
      if (i <= n && i >= 1)
        rec.check("map to the parabolic nil Hecke algebra", params, [&](std::string& d) {
          const auto r = sl2_iso_check(n, i, cfg.seed);
          d = "source=" + std::to_string(r.source_rank) + " target=" + std::to_string(r.target_rank);
          return r.ok();
        });
    }
  const int ledger_n = std::max(cfg.n, 6);
  for (int n = 1; n <= ledger_n; ++n)
    rec.check("dim EF - dim FE = n - 2i per unit dimension", kv("n", n), [&](std::string& d) {
      std::size_t failed = 0;
      const auto rows = minimal_sl2_dimension_ledger(n);
      for (const auto& r : rows) failed += r.ef_per_dim - r.fe_per_dim != Integer(n - 2 * r.i);
      d = counted(rows.size(), failed);
      return failed == 0 && static_cast<int>(rows.size()) == n + 1;
    });
  return rec.take();
}

SuiteReport heckebridge_suite(const SuiteConfig& cfg) {
  Recorder rec("heckebridge");
  for (int n = 1; n <= cfg.n; ++n) {
    const std::string params = kv("n", n) + " " + kv("N", cfg.truncation) + " I=3 vertices";
    rec.check("affine Hecke relations, generic q", params, [&](std::string& d) {
      const auto r = check_affine_relations(n, cfg.truncation, geometric_vertices(3));
      d = counted(r.checked, r.failures.size());
      if (!r.ok()) d += "; first: " + r.failures.front();
      return r.ok() && r.checked > 0;
    });
    rec.check("degenerate affine Hecke relations", params, [&](std::string& d) {
      const auto r = check_degenerate_relations(n, cfg.truncation, arithmetic_vertices(3));
      d = counted(r.checked, r.failures.size());
      if (!r.ok()) d += "; first: " + r.failures.front();
      return r.ok() && r.checked > 0;
    });
  }
  return rec.take();
}

SuiteReport hall_suite(const SuiteConfig& cfg) {
  Recorder rec("hall");
  const HallAlgebra H(HallQuiver::from(cfg.quiver), cfg.q);
  const std::string qp = "quiver=" + cfg.quiver_name + " " + kv("q", cfg.q);
  const bool a2 = cfg.quiver.vertices() == 2 && cfg.quiver.arrows(1, 2) == 1 && cfg.quiver.arrows(2, 1) == 0;
  if (a2) {
    const ClassLabel m12{{1, 1}, 1}, split{{1, 1}, 0};
    rec.check("[f1,f2] = f12", qp, [&](std::string&) {
      const auto f1 = H.element(H.simple(1)), f2 = H.element(H.simple(2));
      return H.product(f1, f2, false) - H.product(f2, f1, false) == H.element(m12) &&
             H.product(f2, f1, false) == H.element(split);
    });
    rec.check("f1*f12 = q f12*f1", qp, [&](std::string&) {
      const auto f1 = H.element(H.simple(1)), f12 = H.element(m12);
      const auto lhs = H.product(f1, f12, false);
      return !lhs.is_zero() && lhs == VNumber{Rational(cfg.q), 0} * H.product(f12, f1, false);
    });
  }
  rec.check("F |Aut M| |Aut N| = P", qp + " max_dim=" + dim_str(cfg.max_dim), [&](std::string& d) {
    if (static_cast<int>(cfg.max_dim.size()) != cfg.quiver.vertices())
      throw UsageError("max-dim needs one entry per vertex");
    std::size_t checked = 0, failed = 0;
    const int m = cfg.quiver.vertices();
    std::function<void(DimVector&, int, const std::function<void(const DimVector&)>&)> boxes =
        [&](DimVector& cur, int k, const std::function<void(const DimVector&)>& f) {
          if (k == static_cast<int>(cur.size())) return f(cur);
          for (int x = 0; x <= cfg.max_dim[k]; ++x) {
            cur[k] = x;
            boxes(cur, k + 1, f);
          }
        };
    DimVector dl(m);
    boxes(dl, 0, [&](const DimVector& L) {
      const DimVector lcopy = L;
      for (const auto& cl : H.classes(lcopy)) {
        DimVector dn(m);
        std::function<void(int)> sub = [&](int k) {
          if (k == m) {
            DimVector dm(m);
            for (int i = 0; i < m; ++i) dm[i] = lcopy[i] - dn[i];
            for (const auto& cn : H.classes(dn))
              for (const auto& cm : H.classes(dm)) {
                ++checked;
                failed += H.hall_number(cm.label, cn.label, cl.label) * cm.aut * cn.aut !=
                          H.exact_sequences(cm.label, cn.label, cl.label);
              }
            return;
          }
          for (int x = 0; x <= lcopy[k]; ++x) {
            dn[k] = x;
            sub(k + 1);
          }
        };
        sub(0);
      }
    });
    d = counted(checked, failed);
    return failed == 0;
  });
  for (int i = 1; i <= cfg.quiver.vertices(); ++i)
    for (int j = 1; j <= cfg.quiver.vertices(); ++j)
      if (i != j && cfg.quiver.edges(i, j) == 1)
        rec.check("quantum Serre relation is zero", qp + " " + kv("i", i) + " " + kv("j", j), [&, i, j](std::string& d) {
          const auto r = H.serre_relation(i, j);
          d = r.is_zero() ? "0" : std::to_string(r.terms.size()) + " nonzero terms";
          return r.is_zero();
        });
  return rec.take();
}

SuiteReport fock_suite(const SuiteConfig& cfg) {
  Recorder rec("fock");
  if (cfg.p == 3)
    rec.check("operators on (3,1)", "p=3", [&](std::string& d) {
      const auto v = single(Partition({3, 1}));
      auto one = [](std::vector<std::vector<int>> ps) {
        FockVector r;
        for (auto& p : ps) r[Partition(p)] += 1;
        return r;
      };
      const bool ok = f_op(0, v, 3) == one({{4, 1}, {3, 2}}) && f_op(1, v, 3) == one({{3, 1, 1}}) &&
                      f_op(2, v, 3).empty() && e_op(0, v, 3).empty() && e_op(1, v, 3).empty() &&
                      e_op(2, v, 3) == one({{3}, {2, 1}});
      d = "f0=" + fock_str(f_op(0, v, 3)) + " e2=" + fock_str(e_op(2, v, 3));
      return ok;
    });
  rec.check("commutators, adjointness and degree operator", kv("p", cfg.p) + " " + kv("max_size", cfg.max_size),
            [&](std::string& d) {
              const auto r = check_fock_relations(cfg.p, cfg.max_size);
              d = counted(r.checked, r.failures.size());
              if (!r.ok()) d += "; first: " + r.failures.front();
              return r.ok() && r.checked > 0;
            });
  return rec.take();
}

}  // namespace qh
