#include "motzkin/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "motzkin/bfile.hpp"
#include "motzkin/bijections.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/qmotzkin.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

namespace {

// Failures that map onto exit code 1 or 2 with a one-line diagnostic.
struct InvalidObject : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s;
}

template <class F>
auto as_object(F&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    throw InvalidObject(e.what());
  }
}

template <class F>
auto as_usage(F&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int scan_limit_from_env() {
  const char* raw = std::getenv(kScanLimitEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultScanLimit;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 20) {
    throw UsageError(std::string(kScanLimitEnv) + " must be an integer in 0..20, got '" + raw + "'");
  }
  return static_cast<int>(v);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

void print_perm_stats(const Permutation& s, std::ostream& out) {
  const auto r = perm_statistics(s);
  out << "fp " << r.fp << "\n"
      << "exc " << r.exc << "\n"
      << "crs " << r.crs << "\n"
      << "nes " << r.nes << "\n"
      << "inv " << r.inv << "\n"
      << "exc_set " << join_ints(r.exc_set) << "\n"
      << "des_set " << join_ints(r.des_set) << "\n"
      << "involution " << (r.is_involution ? "yes" : "no") << "\n";
}

void print_path_stats(const MotzkinPath& p, std::ostream& out) {
  const auto r = path_statistics(p);
  out << "hor " << r.hor << "\n"
      << "up " << r.up << "\n"
      << "down " << r.down << "\n"
      << "sh_u " << r.sh_u << "\n"
      << "sh_h " << r.sh_h << "\n"
      << "sh_d " << r.sh_d << "\n"
      << "area " << r.area << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossings and nestings of Motzkin objects: statistics, bijections, q-polynomials, oracles"};
  app.name("motzkin");
  app.require_subcommand(1);

  std::string kind;
  std::vector<std::string> object;
  auto* stats = app.add_subcommand("stats", "Statistics of a permutation or a Motzkin path");
  stats->add_option("kind", kind, "perm or path")->required()->check(CLI::IsMember({"perm", "path"}));
  stats->add_option("object", object, "one-line word or path word")->required();

  std::string map_name;
  bool inverse = false;
  auto* map = app.add_subcommand("map", "Apply phi1, phi2, phi3 or an inverse");
  map->add_option("map", map_name, "phi1, phi2 or phi3")->required()->check(CLI::IsMember({"phi1", "phi2", "phi3"}));
  map->add_flag("--inverse", inverse, "Map a permutation back to its path");
  map->add_option("object", object, "path word, or permutation with --inverse")->required();

  std::string class_text, stat_text;
  int n = 0;
  bool json = false;
  auto* dist = app.add_subcommand("dist", "Distribution of a statistic over a permutation class");
  dist->add_option("--class", class_text, "ALL, INVOLUTIONS, I_4321, I_3412, S_321_B3142")->required();
  dist->add_option("--stat", stat_text, "crs, nes, crs+nes, fp-exc-crs-nes, exc-crs")->required();
  dist->add_option("--n", n, "size")->required()->check(CLI::NonNegativeNumber);
  dist->add_flag("--json", json, "JSON output");

  std::string family;
  auto* poly = app.add_subcommand("poly", "q-Motzkin polynomial");
  poly->add_option("family", family, "M or Mtilde")->required()->check(CLI::IsMember({"M", "Mtilde"}));
  poly->add_option("--n", n, "index")->required()->check(CLI::Range(0, 300));

  auto* tableau = app.add_subcommand("tableau", "Rows 0..n of the q-tableau");
  tableau->add_option("--n", n, "last row")->required()->check(CLI::Range(0, 500));

  std::string preset;
  int order = 0;
  auto* series = app.add_subcommand("series", "Expand a named generating function");
  series->add_option("--preset", preset, "preset name")->required();
  series->add_option("--order", order, "last t-exponent")->required()->check(CLI::Range(0, 200));
  series->add_flag("--json", json, "JSON output");

  std::string suite;
  int max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "statistics, paths, bijections, qpoly, distributions, all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n, "size cap")->required()->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json, "JSON output");

  std::string bfile;
  auto* oeis = app.add_subcommand("oeis-check", "Compare the Motzkin numbers with a local b-file");
  oeis->add_option("--bfile", bfile, "b-file path")->required();
  oeis->add_option("--max-n", max_n, "last index")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (stats->parsed()) {
      const auto text = join(object);
      if (kind == "perm") {
        print_perm_stats(as_object([&] { return Permutation::parse(text); }), out);
      } else {
        print_path_stats(as_object([&] { return MotzkinPath::parse(text); }), out);
      }
    } else if (map->parsed()) {
      const auto text = join(object);
      if (!inverse) {
        const auto path = as_object([&] { return MotzkinPath::parse(text); });
        const auto sigma = map_name == "phi1" ? phi1(path) : map_name == "phi2" ? phi2(path) : phi3(path);
        out << sigma.to_string() << "\n";
      } else {
        const auto sigma = as_object([&] { return Permutation::parse(text); });
        if (map_name == "phi3") {
          out << as_object([&] { return phi3_inverse(sigma); }).to_string() << "\n";
        } else {
          const ClassId target = map_name == "phi1" ? ClassId::I4321 : ClassId::I3412;
          if (!in_class(sigma, target)) {
            throw InvalidObject(sigma.to_string() + " is not in " + std::string(class_name(target)));
          }
          out << involution_shape_path(sigma).to_string() << "\n";
        }
      }
    } else if (dist->parsed()) {
      const ClassId id = as_usage([&] { return parse_class(class_text); });
      const StatSpec spec = as_usage([&] { return parse_stat(stat_text); });
      const int limit = scan_limit_from_env();
      const MultiPoly d = as_usage([&] { return distribution(id, n, spec, limit); });
      if (json) {
        nlohmann::ordered_json j;
        j["class"] = class_name(id);
        j["stat"] = stat_name(spec);
        j["n"] = n;
        auto vars = nlohmann::ordered_json::array();
        for (auto v : var_names(d.vars())) vars.push_back(v);
        j["vars"] = vars;
        j["poly"] = d.to_string();
        out << j.dump() << "\n";
      } else {
        out << d.to_string() << "\n";
      }
    } else if (poly->parsed()) {
      out << (family == "M" ? q_motzkin(n) : q_motzkin_tilde(n)).to_string() << "\n";
    } else if (tableau->parsed()) {
      const auto h = h_tableau(n);
      for (int row = 0; row <= n; ++row) {
        out << "n=" << row << ":";
        for (int i = 0; i <= row; ++i) out << (i == 0 ? " " : " | ") << h.at(row, i).to_string();
        out << "\n";
      }
    } else if (series->parsed()) {
      const auto s = as_usage([&] { return named_series(preset, order); });
      if (json) {
        out << s.to_json() << "\n";
      } else {
        for (int k = 0; k <= order; ++k) out << "t^" << k << ": " << s[k].to_string() << "\n";
      }
    } else if (verify->parsed()) {
      const auto report = run_suite(suite, max_n);
      if (json) {
        out << report.to_json() << "\n";
      } else {
        for (const auto& c : report.checks) {
          out << (c.pass ? "PASS " : "FAIL ") << c.name << " " << c.range;
          if (c.counterexample) out << " counterexample: " << *c.counterexample;
          out << "\n";
        }
      }
      if (!report.all_passed()) {
        err << "verification failed\n";
        return 1;
      }
    } else if (oeis->parsed()) {
      const auto entries = read_bfile(bfile);
      const auto report = oeis_check(entries, max_n);
      out << report.to_string();
      if (!report.pass()) {
        err << "mismatch at n=" << report.first_mismatch->n << "\n";
        return 1;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace motzkin
