#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <map>
#include <thread>

#include "motzkin/bijections.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/qmotzkin.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

namespace {

// nullopt on success, otherwise the first counterexample in enumeration order.
using Outcome = std::optional<std::string>;

struct Check {
  std::string suite;
  std::string name;
  std::string range_prefix;
  int bound;
  std::function<Outcome(int)> run;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string mismatch(const std::string& where, const std::string& got, const std::string& want) {
  return where + ": got " + got + ", expected " + want;
}

MultiPoly::Key key_of(int e0, int e1 = 0, int e2 = 0, int e3 = 0) { return MultiPoly::pack({e0, e1, e2, e3}); }

MultiPoly sum_over_paths(int n, VarSet vars, const std::function<MultiPoly::Key(const PathStatRecord&)>& key) {
  std::map<MultiPoly::Key, unsigned long> counts;
  for_each_path(n, [&](const MotzkinPath& p) { ++counts[key(path_statistics(p))]; });
  std::vector<MultiPoly::Term> terms;
  for (const auto& [k, c] : counts) terms.push_back({k, BigInt(c)});
  return MultiPoly::from_terms(vars, std::move(terms));
}

MultiPoly q_poly(const UniPoly& p) { return MultiPoly::from_uni(VarSet::Q, "q", p); }

bool tails_spaced(const HeadTailPairs& pairs) {
  const auto t = pairs.tails();
  for (std::size_t j = 1; j < t.size(); ++j) {
    if (t[j - 1] + 2 > t[j]) return false;
  }
  return true;
}

// ------------------------------------------------------------ statistics

std::vector<Check> statistics_checks() {
  std::vector<Check> c;
  c.push_back({"statistics", "eq-inv-exc-crs-2nes", "n≤", 8, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   for (const auto& s : enumerate_class(n, ClassId::All)) {
                     const auto r = perm_statistics(s);
                     if (r.inv != r.exc + r.crs + 2 * r.nes) return s.to_string();
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"statistics", "reduced-decomposition-roundtrip", "n≤", 8, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   for (const auto& s : enumerate_class(n, ClassId::All)) {
                     if (permutation_from_head_tail(head_tail_pairs(s)) != s) return s.to_string();
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"statistics", "thm-des-exc-tails", "n≤", 9, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   for (const auto& s : enumerate_class(n, ClassId::S321Barred3142)) {
                     const auto r = perm_statistics(s);
                     const auto pairs = head_tail_pairs(s);
                     if (r.des_set != r.exc_set || r.exc_set != pairs.tails() || !tails_spaced(pairs)) {
                       return s.to_string();
                     }
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"statistics", "class-iff-tail-gap", "n≤", 8, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   for (const auto& s : enumerate_class(n, ClassId::All)) {
                     if (in_class(s, ClassId::S321Barred3142) != tails_spaced(head_tail_pairs(s))) {
                       return s.to_string();
                     }
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"statistics", "nonnesting-321-barred", "n≤", 9, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   for (const auto& s : enumerate_class(n, ClassId::S321Barred3142)) {
                     if (nestings(s) != 0) return s.to_string();
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"statistics", "class-counts-motzkin", "n≤", 10, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   const BigInt m = motzkin_number(n);
                   for (auto id : {ClassId::I4321, ClassId::I3412, ClassId::S321Barred3142}) {
                     std::size_t count = 0;
                     for_each_in_class(n, id, [&](const Permutation&) { ++count; });
                     if (count != m) {
                       return mismatch("n=" + std::to_string(n) + " " + std::string(class_name(id)),
                                       std::to_string(count), m.get_str());
                     }
                   }
                 }
                 return std::nullopt;
               }});
  return c;
}

// ------------------------------------------------------------------ paths

std::vector<Check> path_checks() {
  std::vector<Check> c;
  auto over_paths = [](std::function<bool(const MotzkinPath&)> ok) {
    return [ok](int cap) -> Outcome {
      for (int n = 0; n <= cap; ++n) {
        for (const auto& p : enumerate_paths(n)) {
          if (!ok(p)) return p.to_string();
        }
      }
      return std::nullopt;
    };
  };
  c.push_back({"paths", "prop-area-down", "n≤", 12, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 return r.area == 2 * r.sh_d + r.sh_h - r.down;
               })});
  c.push_back({"paths", "prop-area-up", "n≤", 12, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 return r.area == 2 * r.sh_u + r.sh_h + r.up;
               })});
  c.push_back({"paths", "cor-shu-shd-down", "n≤", 12, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 return r.sh_u == r.sh_d - r.down && r.up == r.down;
               })});
  c.push_back({"paths", "strip-roundtrip", "n≤", 10, over_paths([](const MotzkinPath& p) {
                 const auto pairs = strip_decomposition(p);
                 if (!tails_spaced(pairs)) return false;
                 for (const auto& ht : pairs.pairs()) {
                   if (ht.head > p.size() - 1) return false;
                 }
                 return path_from_head_tail(pairs) == p;
               })});
  c.push_back({"paths", "matchings-perfect", "n≤", 10, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 for (const auto& m : {sequential_matching(p), tunnel_matching(p)}) {
                   if (static_cast<int>(m.size()) != r.up) return false;
                   std::vector<bool> used(static_cast<std::size_t>(p.size()) + 1, false);
                   for (const auto& [u, d] : m) {
                     if (u >= d || p[u] != Step::Up || p[d] != Step::Down) return false;
                     if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(d)]) return false;
                     used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(d)] = true;
                   }
                 }
                 return true;
               })});
  c.push_back({"paths", "path-count-recurrence", "n≤", 12, [](int cap) -> Outcome {
                 std::vector<BigInt> counts;
                 for (int n = 0; n <= cap; ++n) {
                   counts.emplace_back(static_cast<unsigned long>(enumerate_paths(n).size()));
                   if (n == 0) {
                     if (counts[0] != 1) return mismatch("n=0", counts[0].get_str(), "1");
                     continue;
                   }
                   BigInt want = counts[static_cast<std::size_t>(n - 1)];
                   for (int k = 0; k <= n - 2; ++k) {
                     want += counts[static_cast<std::size_t>(k)] * counts[static_cast<std::size_t>(n - 2 - k)];
                   }
                   if (counts.back() != want) {
                     return mismatch("n=" + std::to_string(n), counts.back().get_str(), want.get_str());
                   }
                 }
                 return std::nullopt;
               }});
  return c;
}

// ------------------------------------------------------------- bijections

std::vector<Check> bijection_checks() {
  std::vector<Check> c;
  auto over_paths = [](std::function<bool(const MotzkinPath&)> ok) {
    return [ok](int cap) -> Outcome {
      for (int n = 0; n <= cap; ++n) {
        for (const auto& p : enumerate_paths(n)) {
          if (!ok(p)) return p.to_string();
        }
      }
      return std::nullopt;
    };
  };
  c.push_back({"bijections", "prop-phi1-transport", "n≤", 10, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 const auto s = perm_statistics(phi1(p));
                 return s.fp == r.hor && s.exc == r.up && s.crs == 2 * r.sh_u && s.nes == r.sh_h;
               })});
  c.push_back({"bijections", "prop-phi2-transport", "n≤", 10, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 const auto s = perm_statistics(phi2(p));
                 return s.fp == r.hor && s.exc == r.up && s.nes == 2 * r.sh_u + r.sh_h && s.crs == 0;
               })});
  c.push_back({"bijections", "prop-phi3-transport", "n≤", 10, over_paths([](const MotzkinPath& p) {
                 const auto r = path_statistics(p);
                 const auto s = perm_statistics(phi3(p));
                 return s.exc == r.up && s.crs == r.sh_u + r.sh_h && s.inv == r.area - r.sh_u;
               })});
  c.push_back({"bijections", "phi-roundtrips", "n≤", 10, over_paths([](const MotzkinPath& p) {
                 return involution_shape_path(phi1(p)) == p && involution_shape_path(phi2(p)) == p &&
                        phi3_inverse(phi3(p)) == p;
               })});
  c.push_back({"bijections", "phi-images-equal-classes", "n≤", 9, [](int cap) -> Outcome {
                 const std::vector<std::pair<ClassId, Permutation (*)(const MotzkinPath&, bool)>> maps = {
                     {ClassId::I4321, &phi1}, {ClassId::I3412, &phi2}, {ClassId::S321Barred3142, &phi3}};
                 for (int n = 0; n <= cap; ++n) {
                   const auto paths = enumerate_paths(n);
                   for (const auto& [id, phi] : maps) {
                     std::vector<Permutation> image;
                     image.reserve(paths.size());
                     for (const auto& p : paths) image.push_back(phi(p, false));
                     std::sort(image.begin(), image.end());
                     const auto cls = enumerate_class(n, id);
                     if (std::adjacent_find(image.begin(), image.end()) != image.end() || image != cls) {
                       return "n=" + std::to_string(n) + " " + std::string(class_name(id));
                     }
                   }
                 }
                 return std::nullopt;
               }});
  return c;
}

// ----------------------------------------------------------------- qpoly

std::vector<Check> qpoly_checks() {
  std::vector<Check> c;
  c.push_back({"qpoly", "q1-collapse", "n≤", 30, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   const BigInt m = motzkin_number(n);
                   if (q_motzkin(n).evaluate(1) != m || q_motzkin_tilde(n).evaluate(1) != m) {
                     return "n=" + std::to_string(n);
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "thm-R0-recursion", "1≤i≤n≤", 25, [](int cap) -> Outcome {
                 const auto h = h_tableau(cap);
                 for (int n = 1; n <= cap; ++n) {
                   for (int i = 1; i <= n; ++i) {
                     const auto rhs = h_recursion_rhs(n, i, h);
                     if (rhs != h.at(n, i)) {
                       return mismatch("H_{" + std::to_string(n) + "," + std::to_string(i) + "}", rhs.to_string(),
                                       h.at(n, i).to_string());
                     }
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "cor-H-n0-Mtilde", "n≤", 30, [](int cap) -> Outcome {
                 const auto h = h_tableau(cap);
                 for (int n = 0; n <= cap; ++n) {
                   if (h.at(n, 0) != q_motzkin_tilde(n)) {
                     return mismatch("n=" + std::to_string(n), h.at(n, 0).to_string(), q_motzkin_tilde(n).to_string());
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "H-row-sum-step", "n≤", 30, [](int cap) -> Outcome {
                 const auto h = h_tableau(cap);
                 for (int n = 1; n <= cap; ++n) {
                   if (h.at(n, 0) != h.at(n - 1, 0) + h.at(n - 1, 1)) return "n=" + std::to_string(n);
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "dumont-tableau-vs-jfraction", "n≤", 20, [](int cap) -> Outcome {
                 struct Family {
                   const char* name;
                   LevelFn alpha;
                   LevelFn beta;
                 };
                 const std::vector<Family> families = {
                     {"ones", [](int) { return UniPoly(1); }, [](int) { return UniPoly(1); }},
                     {"H", [](int i) { return UniPoly::monomial(i - 1); }, [](int i) { return UniPoly::monomial(i - 1); }},
                     {"A", [](int i) { return UniPoly::monomial(i - 1); },
                      [](int i) { return UniPoly::monomial(2 * (i - 1)); }},
                     {"mixed", [](int i) { return UniPoly(i) + UniPoly::monomial(i); },
                      [](int i) { return UniPoly::monomial(1) + UniPoly(2 * i - 1); }},
                 };
                 for (const auto& f : families) {
                   const auto table = stieltjes_tableau(f.alpha, f.beta, cap);
                   const JFraction jf{VarSet::Q, [&](int k) { return q_poly(f.alpha(k)); },
                                      [&](int k) { return q_poly(f.beta(k)); }};
                   const auto series = jfraction_series(jf, cap);
                   for (int n = 0; n <= cap; ++n) {
                     if (series[n] != q_poly(table.at(n, 0))) {
                       return mismatch(std::string(f.name) + " n=" + std::to_string(n), series[n].to_string(),
                                       table.at(n, 0).to_string());
                     }
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "A-functional-recurrence", "n≤", 20, [](int cap) -> Outcome {
                 const auto a = named_series("A", cap);
                 std::vector<UniPoly> an;
                 for (int n = 0; n <= cap; ++n) an.push_back(a[n].to_uni("q"));
                 for (int n = 0; n <= cap; ++n) {
                   UniPoly want = n == 0 ? UniPoly(1) : an[static_cast<std::size_t>(n - 1)];
                   for (int k = 0; k <= n - 2; ++k) {
                     want += (an[static_cast<std::size_t>(k)] * an[static_cast<std::size_t>(n - 2 - k)]).shifted(k);
                   }
                   if (an[static_cast<std::size_t>(n)] != want || want != q_motzkin(n)) {
                     return mismatch("n=" + std::to_string(n), an[static_cast<std::size_t>(n)].to_string(),
                                     q_motzkin(n).to_string());
                   }
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "Mtilde-functional-equation", "order≤", 20, [](int cap) -> Outcome {
                 const auto m = series_of(q_motzkin_tilde, cap);
                 const MultiPoly q = MultiPoly::variable(VarSet::Q, "q");
                 const auto scaled = m.scale_t(key_of(1));
                 PowerSeries d = PowerSeries::one(VarSet::Q, cap);
                 for (int j = 2; j <= cap; ++j) d[j] = MultiPoly(VarSet::Q) - q * scaled[j - 2];
                 PowerSeries shift(VarSet::Q, cap);
                 for (int j = 1; j <= cap; ++j) shift[j] = m[j - 1] + (j >= 2 ? m[j - 2] : MultiPoly(VarSet::Q));
                 const auto lhs = m * d;
                 const auto rhs = d + shift;
                 for (int j = 0; j <= cap; ++j) {
                   if (lhs[j] != rhs[j]) return mismatch("t^" + std::to_string(j), lhs[j].to_string(), rhs[j].to_string());
                 }
                 const auto fe = named_series("Mtilde-fe", cap);
                 for (int j = 0; j <= cap; ++j) {
                   if (fe[j] != m[j]) return mismatch("Mtilde-fe t^" + std::to_string(j), fe[j].to_string(), m[j].to_string());
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "main12-identity", "order≤", 40, [](int cap) -> Outcome {
                 const auto lhs = named_series("main12-lhs", cap);
                 const auto rhs = named_series("main12-rhs", cap);
                 for (int j = 0; j <= cap; ++j) {
                   if (lhs[j] != rhs[j]) return mismatch("t^" + std::to_string(j), lhs[j].to_string(), rhs[j].to_string());
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "I-series-vs-paths", "n≤", 10, [](int cap) -> Outcome {
                 const auto series = named_series("I-abcd", cap);
                 for (int n = 0; n <= cap; ++n) {
                   const auto want = sum_over_paths(n, VarSet::ABCD, [](const PathStatRecord& r) {
                     return key_of(r.hor, r.up, r.sh_u, r.sh_h);
                   });
                   if (series[n] != want) return mismatch("n=" + std::to_string(n), series[n].to_string(), want.to_string());
                 }
                 return std::nullopt;
               }});
  c.push_back({"qpoly", "jfraction-depth-regression", "order≤", 20, [](int cap) -> Outcome {
                 for (const auto& p : series_presets()) {
                   if (p.name == "Mtilde-fe") continue;
                   const auto spec = preset_fraction(p.name);
                   if (jfraction_series(spec, cap) != jfraction_series(spec, cap, 1)) return p.name;
                 }
                 return std::nullopt;
               }});
  return c;
}

// ---------------------------------------------------------- distributions

std::vector<Check> distribution_checks() {
  std::vector<Check> c;
  auto against = [](ClassId id, StatSpec spec, std::function<MultiPoly(int)> want) {
    return [=](int cap) -> Outcome {
      for (int n = 0; n <= cap; ++n) {
        const auto got = distribution(id, n, spec);
        const auto expected = want(n);
        if (got != expected) return mismatch("n=" + std::to_string(n), got.to_string(), expected.to_string());
      }
      return std::nullopt;
    };
  };
  c.push_back({"distributions", "thm-main-4321", "n≤", 10,
               against(ClassId::I4321, StatSpec::CrsPlusNes, [](int n) { return q_poly(q_motzkin(n)); })});
  c.push_back({"distributions", "thm-main-3412", "n≤", 10,
               against(ClassId::I3412, StatSpec::Nes, [](int n) { return q_poly(q_motzkin(n)); })});
  c.push_back({"distributions", "thm-main-S321", "n≤", 9, [](int cap) -> Outcome {
                 const auto h = h_tableau(cap);
                 for (int n = 0; n <= cap; ++n) {
                   const auto got = distribution(ClassId::S321Barred3142, n, StatSpec::Crs);
                   if (got != q_poly(q_motzkin_tilde(n)) || got != q_poly(h.at(n, 0))) {
                     return mismatch("n=" + std::to_string(n), got.to_string(), q_motzkin_tilde(n).to_string());
                   }
                 }
                 return std::nullopt;
               }});
  auto against_series = [](ClassId id, StatSpec spec, std::string preset) {
    return [=](int cap) -> Outcome {
      const auto series = named_series(preset, cap);
      for (int n = 0; n <= cap; ++n) {
        const auto got = distribution(id, n, spec);
        if (got != series[n]) return mismatch("n=" + std::to_string(n), got.to_string(), series[n].to_string());
      }
      return std::nullopt;
    };
  };
  c.push_back({"distributions", "thm-joint-4321", "n≤", 9,
               against_series(ClassId::I4321, StatSpec::JointFpExcCrsNes, "I4321-fp-exc-crs-nes")});
  c.push_back({"distributions", "thm-joint-3412", "n≤", 9,
               against_series(ClassId::I3412, StatSpec::JointFpExcCrsNes, "I3412-fp-exc-nes")});
  c.push_back({"distributions", "thm-joint-S321", "n≤", 9,
               against_series(ClassId::S321Barred3142, StatSpec::JointExcCrs, "S321-exc-crs")});
  c.push_back({"distributions", "transport-triangle", "n≤", 9, [](int cap) -> Outcome {
                 for (int n = 0; n <= cap; ++n) {
                   const auto p1 = sum_over_paths(n, VarSet::XYPQ, [](const PathStatRecord& r) {
                     return key_of(r.hor, r.up, 2 * r.sh_u, r.sh_h);
                   });
                   const auto p2 = sum_over_paths(n, VarSet::XYPQ, [](const PathStatRecord& r) {
                     return key_of(r.hor, r.up, 0, 2 * r.sh_u + r.sh_h);
                   });
                   const auto p3 = sum_over_paths(n, VarSet::YQ, [](const PathStatRecord& r) {
                     return key_of(r.up, r.sh_u + r.sh_h);
                   });
                   const std::string where = "n=" + std::to_string(n);
                   if (p1 != distribution(ClassId::I4321, n, StatSpec::JointFpExcCrsNes)) return where + " phi1";
                   if (p2 != distribution(ClassId::I3412, n, StatSpec::JointFpExcCrsNes)) return where + " phi2";
                   if (p3 != distribution(ClassId::S321Barred3142, n, StatSpec::JointExcCrs)) return where + " phi3";
                 }
                 return std::nullopt;
               }});
  return c;
}

std::vector<Check> all_checks() {
  std::vector<Check> all;
  for (auto group : {statistics_checks(), path_checks(), bijection_checks(), qpoly_checks(), distribution_checks()}) {
    for (auto& c : group) all.push_back(std::move(c));
  }
  return all;
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["max_n"] = max_n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["range"] = c.range;
    cj["pass"] = c.pass;
    if (c.counterexample) cj["counterexample"] = *c.counterexample;
    cj["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"statistics", "paths", "bijections", "qpoly", "distributions", "all"};
  return names;
}

VerificationReport run_suite(std::string_view suite, int max_n) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  if (max_n < 0) throw std::invalid_argument("negative max_n");
  const auto start = Clock::now();

  std::vector<Check> checks;
  for (auto& c : all_checks()) {
    if (suite == "all" || c.suite == suite) checks.push_back(std::move(c));
  }

  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto& check = checks[i];
      const int cap = std::min(check.bound, max_n);
      const auto t0 = Clock::now();
      CheckResult r{check.name, check.range_prefix + std::to_string(cap), false, std::nullopt, 0};
      try {
        r.counterexample = check.run(cap);
        r.pass = !r.counterexample;
      } catch (const std::exception& e) {
        r.counterexample = std::string("exception: ") + e.what();
      }
      r.elapsed_ms = ms_since(t0);
      results[i] = std::move(r);
    }
  };
  const auto threads =
      std::min<std::size_t>(checks.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return {std::string(suite), max_n, std::move(results), ms_since(start)};
}

}  // namespace motzkin
