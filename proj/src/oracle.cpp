#include "motzkin/oracle.hpp"

#include <cctype>
#include <map>

namespace motzkin {

std::string_view stat_name(StatSpec spec) {
  switch (spec) {
    case StatSpec::Crs: return "crs";
    case StatSpec::Nes: return "nes";
    case StatSpec::CrsPlusNes: return "crs+nes";
    case StatSpec::JointFpExcCrsNes: return "fp-exc-crs-nes";
    case StatSpec::JointExcCrs: return "exc-crs";
  }
  return "?";
}

StatSpec parse_stat(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '_') c = '-';
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "crs") return StatSpec::Crs;
  if (key == "nes") return StatSpec::Nes;
  if (key == "crs+nes" || key == "crs-plus-nes") return StatSpec::CrsPlusNes;
  if (key == "fp-exc-crs-nes" || key == "joint-fp-exc-crs-nes") return StatSpec::JointFpExcCrsNes;
  if (key == "exc-crs" || key == "joint-exc-crs") return StatSpec::JointExcCrs;
  throw std::invalid_argument("unknown statistic '" + std::string(text) + "'");
}

VarSet stat_vars(StatSpec spec) {
  switch (spec) {
    case StatSpec::JointFpExcCrsNes: return VarSet::XYPQ;
    case StatSpec::JointExcCrs: return VarSet::YQ;
    default: return VarSet::Q;
  }
}

MultiPoly::Key stat_key(const Permutation& sigma, StatSpec spec) {
  switch (spec) {
    case StatSpec::Crs: return MultiPoly::pack({crossings(sigma), 0, 0, 0});
    case StatSpec::Nes: return MultiPoly::pack({nestings(sigma), 0, 0, 0});
    case StatSpec::CrsPlusNes: return MultiPoly::pack({crossings(sigma) + nestings(sigma), 0, 0, 0});
    case StatSpec::JointFpExcCrsNes:
      return MultiPoly::pack({fixed_points(sigma), excedances(sigma), crossings(sigma), nestings(sigma)});
    case StatSpec::JointExcCrs: return MultiPoly::pack({excedances(sigma), crossings(sigma), 0, 0});
  }
  return 0;
}

MultiPoly distribution(ClassId id, int n, StatSpec spec, int scan_limit) {
  if (n < 0) throw std::invalid_argument("negative size");
  const bool scans_sn = id == ClassId::All || id == ClassId::S321Barred3142;
  if (scans_sn && n > scan_limit) {
    throw SizeGuardError("refusing to scan S_" + std::to_string(n) + " (limit " + std::to_string(scan_limit) +
                         "; raise it with " + kScanLimitEnv + ")");
  }
  std::map<MultiPoly::Key, unsigned long> counts;
  for_each_in_class(n, id, [&](const Permutation& sigma) { ++counts[stat_key(sigma, spec)]; });
  std::vector<MultiPoly::Term> terms;
  terms.reserve(counts.size());
  for (const auto& [key, count] : counts) terms.push_back({key, BigInt(count)});
  return MultiPoly::from_terms(stat_vars(spec), std::move(terms));
}

}  // namespace motzkin
