#include "motzkin/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace motzkin {

namespace {

const BigInt& zero_int() {
  static const BigInt z = 0;
  return z;
}

// Appends "c*mono" to out in canonical form; `first` controls the sign glue.
void append_term(std::string& out, const BigInt& c, const std::string& mono, bool first) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const BigInt mag = abs(c);
  if (mono.empty()) {
    out += mag.get_str();
  } else {
    if (mag != 1) out += mag.get_str() + "*";
    out += mono;
  }
}

std::string power(std::string_view var, int e) {
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

constexpr std::array<std::string_view, 1> kQ{"q"};
constexpr std::array<std::string_view, 2> kYQ{"y", "q"};
constexpr std::array<std::string_view, 4> kXYPQ{"x", "y", "p", "q"};
constexpr std::array<std::string_view, 4> kABCD{"a", "b", "c", "d"};

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(long constant) : UniPoly(BigInt(constant)) {}

UniPoly::UniPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::monomial(int exp, BigInt c) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(exp) + 1);
  v.back() = std::move(c);
  UniPoly p;
  p.coeffs_ = std::move(v);
  return p;
}

const BigInt& UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return zero_int();
  return coeffs_[static_cast<std::size_t>(k)];
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

BigInt UniPoly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(out, coeffs_[i], i == 0 ? std::string() : power(var, static_cast<int>(i)), first);
    first = false;
  }
  return out;
}

// --------------------------------------------------------------- variables

std::span<const std::string_view> var_names(VarSet vars) {
  switch (vars) {
    case VarSet::Q: return kQ;
    case VarSet::YQ: return kYQ;
    case VarSet::XYPQ: return kXYPQ;
    case VarSet::ABCD: return kABCD;
  }
  return {};
}

int var_count(VarSet vars) { return static_cast<int>(var_names(vars).size()); }

int var_index(VarSet vars, std::string_view name) {
  const auto names = var_names(vars);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("no variable '" + std::string(name) + "' in this polynomial ring");
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(VarSet vars, long constant) : MultiPoly(vars, BigInt(constant)) {}

MultiPoly::MultiPoly(VarSet vars, const BigInt& constant) : vars_(vars) {
  if (constant != 0) terms_.push_back({0, constant});
}

MultiPoly::Key MultiPoly::pack(const Exponents& exps) {
  Key key = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    if (exps[i] >= (1 << kExpBits)) throw std::overflow_error("exponent overflow");
    key |= static_cast<Key>(exps[i]) << (kExpBits * i);
  }
  return key;
}

MultiPoly::Exponents MultiPoly::unpack(Key key) {
  Exponents e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<int>((key >> (kExpBits * i)) & ((Key{1} << kExpBits) - 1));
  return e;
}

MultiPoly MultiPoly::monomial(VarSet vars, const Exponents& exps, BigInt c) {
  for (int i = var_count(vars); i < kMaxVars; ++i) {
    if (exps[i] != 0) throw std::invalid_argument("exponent on a variable outside the ring");
  }
  MultiPoly p(vars);
  if (c != 0) p.terms_.push_back({pack(exps), std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(VarSet vars, std::string_view name, int exp) {
  Exponents e{};
  e[var_index(vars, name)] = exp;
  return monomial(vars, e);
}

MultiPoly MultiPoly::from_uni(VarSet vars, std::string_view name, const UniPoly& p) {
  const int idx = var_index(vars, name);
  MultiPoly out(vars);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    Exponents e{};
    e[idx] = k;
    out.terms_.push_back({pack(e), p.coeff(k)});
  }
  out.normalize();
  return out;
}

MultiPoly MultiPoly::from_terms(VarSet vars, std::vector<Term> terms) {
  MultiPoly out(vars);
  const auto n = var_count(vars);
  for (const auto& t : terms) {
    const auto e = unpack(t.key);
    for (int v = n; v < kMaxVars; ++v) {
      if (e[v] != 0) throw std::invalid_argument("exponent on a variable outside the ring");
    }
  }
  out.terms_ = std::move(terms);
  out.normalize();
  return out;
}

bool MultiPoly::is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1; }

BigInt MultiPoly::coefficient(const Exponents& exps) const {
  const Key key = pack(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, Key k) { return t.key < k; });
  return it != terms_.end() && it->key == key ? it->coeff : BigInt(0);
}

void MultiPoly::check_same(const MultiPoly& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().key == t.key) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_same(rhs);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].key < rhs.terms_[j].key)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || rhs.terms_[j].key < terms_[i].key) {
      out.push_back(rhs.terms_[j++]);
    } else {
      BigInt c = terms_[i].coeff + rhs.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_same(rhs);
  MultiPoly neg = rhs;
  for (auto& t : neg.terms_) t.coeff = -t.coeff;
  return *this += neg;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].key, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].key, b.terms_[0].coeff);

  // Keys add without carries only while every exponent sum fits its field.
  MultiPoly::Exponents max_a{};
  MultiPoly::Exponents max_b{};
  for (const auto& t : a.terms_) {
    const auto e = MultiPoly::unpack(t.key);
    for (int v = 0; v < MultiPoly::kMaxVars; ++v) max_a[v] = std::max(max_a[v], e[v]);
  }
  for (const auto& t : b.terms_) {
    const auto e = MultiPoly::unpack(t.key);
    for (int v = 0; v < MultiPoly::kMaxVars; ++v) max_b[v] = std::max(max_b[v], e[v]);
  }
  for (int v = 0; v < MultiPoly::kMaxVars; ++v) {
    if (max_a[v] + max_b[v] >= (1 << MultiPoly::kExpBits)) throw std::overflow_error("exponent overflow");
  }

  const MultiPoly::Key lo = a.terms_.front().key + b.terms_.front().key;
  const MultiPoly::Key hi = a.terms_.back().key + b.terms_.back().key;
  constexpr MultiPoly::Key kDenseLimit = 1u << 16;
  if (hi - lo < kDenseLimit) {
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo) + 1);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        mpz_addmul(acc[ta.key + tb.key - lo].get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] != 0) out.terms_.push_back({lo + k, std::move(acc[k])});
    }
    return out;
  }

  std::vector<std::pair<MultiPoly::Key, std::pair<std::size_t, std::size_t>>> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      products.push_back({a.terms_[i].key + b.terms_[j].key, {i, j}});
    }
  }
  std::sort(products.begin(), products.end());
  for (std::size_t k = 0; k < products.size();) {
    const auto key = products[k].first;
    BigInt c = 0;
    for (; k < products.size() && products[k].first == key; ++k) {
      const auto [i, j] = products[k].second;
      mpz_addmul(c.get_mpz_t(), a.terms_[i].coeff.get_mpz_t(), b.terms_[j].coeff.get_mpz_t());
    }
    if (c != 0) out.terms_.push_back({key, std::move(c)});
  }
  return out;
}

MultiPoly MultiPoly::times_monomial(Key key, const BigInt& c) const {
  MultiPoly out(vars_);
  if (c == 0) return out;
  const auto shift = unpack(key);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    const auto e = unpack(t.key);
    Exponents sum{};
    for (int v = 0; v < kMaxVars; ++v) sum[v] = e[v] + shift[v];
    out.terms_.push_back({pack(sum), t.coeff * c});
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view name, const BigInt& value) const {
  const int idx = var_index(vars_, name);
  MultiPoly out(vars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    BigInt c = t.coeff;
    if (e[idx] > 0) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e[idx]));
      c *= p;
    }
    e[idx] = 0;
    out.terms_.push_back({pack(e), std::move(c)});
  }
  out.normalize();
  return out;
}

UniPoly MultiPoly::to_uni(std::string_view name) const {
  const int idx = var_index(vars_, name);
  std::vector<BigInt> coeffs;
  for (const auto& t : terms_) {
    const auto e = unpack(t.key);
    for (int v = 0; v < kMaxVars; ++v) {
      if (v != idx && e[v] != 0) {
        throw std::invalid_argument("polynomial depends on variables other than " + std::string(name));
      }
    }
    const auto k = static_cast<std::size_t>(e[idx]);
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += t.coeff;
  }
  return UniPoly(std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  const auto names = var_names(vars_);
  std::vector<std::pair<Exponents, const BigInt*>> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.emplace_back(unpack(t.key), &t.coeff);
  auto total = [](const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; };
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    const int tx = total(x.first);
    const int ty = total(y.first);
    if (tx != ty) return tx < ty;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : order) {
    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += power(names[v], e[v]);
    }
    append_term(out, *c, mono, first);
    first = false;
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace motzkin
