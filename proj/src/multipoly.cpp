#include "osculo/multipoly.hpp"

#include "osculo/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace osculo {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 0 || ny < 0) throw InputError("negative variable count");
}

MultiPoly MultiPoly::constant(int nx, int ny, const Rational& c) {
  MultiPoly p(nx, ny);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nx + ny), 0), c);
  return p;
}

MultiPoly MultiPoly::variable_x(int nx, int ny, int j) {
  if (j < 1 || j > nx) throw InputError("X variable index out of range");
  MultiPoly p(nx, ny);
  std::vector<int> e(static_cast<std::size_t>(nx + ny), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::variable_y(int nx, int ny, int j) {
  if (j < 1 || j > ny) throw InputError("Y variable index out of range");
  MultiPoly p(nx, ny);
  std::vector<int> e(static_cast<std::size_t>(nx + ny), 0);
  e[static_cast<std::size_t>(nx + j - 1)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

long MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  const std::vector<int>& lead = terms_.rbegin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0L);
}

bool MultiPoly::depends_on_y() const {
  for (const auto& [e, c] : terms_) {
    for (int j = nx_; j < nx_ + ny_; ++j) {
      if (e[static_cast<std::size_t>(j)] > 0) return true;
    }
  }
  return false;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != var_count()) {
    throw InputError("exponent vector length mismatch");
  }
  for (int e : exponents) {
    if (e < 0) throw InputError("negative exponent");
  }
  if (coeff.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational MultiPoly::evaluate(const RatVector& xy) const {
  if (xy.size() != var_count()) throw InputError("evaluation point dimension mismatch");
  // Cache powers per variable up to the largest exponent used.
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(var_count()));
  for (int v = 0; v < var_count(); ++v) {
    int max_e = 0;
    for (const auto& [e, c] : terms_) {
      max_e = std::max(max_e, e[static_cast<std::size_t>(v)]);
    }
    auto& cache = powers[static_cast<std::size_t>(v)];
    cache.resize(static_cast<std::size_t>(max_e) + 1, Rational(1));
    for (int k = 1; k <= max_e; ++k) {
      cache[static_cast<std::size_t>(k)] =
          cache[static_cast<std::size_t>(k - 1)] * xy[v];
    }
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < var_count(); ++v) {
      const int exp = e[static_cast<std::size_t>(v)];
      if (exp > 0) term *= powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(exp)];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::partial_derivative(int var) const {
  if (var < 0 || var >= var_count()) throw InputError("derivative variable out of range");
  MultiPoly out(nx_, ny_);
  for (const auto& [e, c] : terms_) {
    const int exp = e[static_cast<std::size_t>(var)];
    if (exp == 0) continue;
    std::vector<int> de = e;
    de[static_cast<std::size_t>(var)] = exp - 1;
    out.add_term(de, c * Rational(exp));
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nx_, ny_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nx_ != o.nx_ || ny_ != o.ny_) throw InputError("variable space mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nx_ != o.nx_ || ny_ != o.ny_) throw InputError("variable space mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nx_ != b.nx_ || a.ny_ != b.ny_) throw InputError("variable space mismatch");
  MultiPoly out(a.nx_, a.ny_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nx_, ny_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw InputError("negative polynomial power");
  MultiPoly acc = constant(nx_, ny_, Rational(1));
  for (int i = 0; i < exponent; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::tilde_substitute(const Sphere& s) const {
  if (s.dimension() != nx_ || ny_ != nx_ - 1) {
    throw InputError("sphere dimension does not match the polynomial's variable space");
  }
  const long deg = degree();
  MultiPoly out(nx_, ny_);
  // Per term c·X^a·Y^b:
  //   c·X^a·Π_j ((X_j - c_j)/(X_n - c_n))^{b_j} · (X_n - c_n)^{deg}
  // = c·X^a·Π_j (X_j - c_j)^{b_j} · (X_n - c_n)^{deg - Σb_j}.
  const MultiPoly xn_minus_cn =
      variable_x(nx_, ny_, nx_) - constant(nx_, ny_, s.center[nx_ - 1]);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(nx_, ny_, c);
    long y_total = 0;
    std::vector<int> xpart(e.size(), 0);
    for (int v = 0; v < nx_; ++v) xpart[static_cast<std::size_t>(v)] = e[static_cast<std::size_t>(v)];
    MultiPoly xmono(nx_, ny_);
    xmono.add_term(xpart, Rational(1));
    term = term * xmono;
    for (int j = 1; j <= ny_; ++j) {
      const int bj = e[static_cast<std::size_t>(nx_ + j - 1)];
      if (bj == 0) continue;
      y_total += bj;
      const MultiPoly factor =
          variable_x(nx_, ny_, j) - constant(nx_, ny_, s.center[j - 1]);
      term = term * factor.pow(bj);
    }
    term = term * xn_minus_cn.pow(static_cast<int>(deg - y_total));
    out += term;
  }
  return out;
}

namespace {

bool exponent_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

bool divides(const MultiPoly& divisor, const MultiPoly& dividend) {
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  if (divisor.nx() != dividend.nx() || divisor.ny() != dividend.ny()) {
    throw InputError("variable space mismatch");
  }
  const auto& lead = *divisor.terms().rbegin();
  MultiPoly rem = dividend;
  while (!rem.is_zero()) {
    const auto& top = *rem.terms().rbegin();
    if (!exponent_divides(lead.first, top.first)) return false;
    std::vector<int> q(top.first.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = top.first[i] - lead.first[i];
    MultiPoly factor(divisor.nx(), divisor.ny());
    factor.add_term(q, top.second / lead.second);
    rem -= factor * divisor;
  }
  return true;
}

MultiPoly sphere_polynomial(const Sphere& s, int ny) {
  const int n = s.dimension();
  MultiPoly p = MultiPoly::constant(n, ny, s.radius * s.radius);
  for (int j = 1; j <= n; ++j) {
    const MultiPoly diff =
        MultiPoly::variable_x(n, ny, j) - MultiPoly::constant(n, ny, s.center[j - 1]);
    p -= diff * diff;
  }
  return p;
}

MultiPoly slope_polynomial(const Sphere& s, int j) {
  const int n = s.dimension();
  const int ny = n - 1;
  if (j < 1 || j > ny) throw InputError("slope index out of range");
  const MultiPoly xn_minus_cn =
      MultiPoly::variable_x(n, ny, n) - MultiPoly::constant(n, ny, s.center[n - 1]);
  const MultiPoly xj_minus_cj =
      MultiPoly::variable_x(n, ny, j) - MultiPoly::constant(n, ny, s.center[j - 1]);
  return xn_minus_cn * MultiPoly::variable_y(n, ny, j) - xj_minus_cj;
}

namespace {

std::string variable_name(int index, int nx) {
  if (index < nx) return "X" + std::to_string(index + 1);
  return "Y" + std::to_string(index - nx + 1);
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Grlex-descending canonical print.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (int v = 0; v < var_count(); ++v) {
      const int e = it->first[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      os << " * " << variable_name(v, nx_);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, int nx, int ny) {
  MultiPoly out(nx, ny);
  const std::string whole = strip(text);
  if (whole.empty()) throw InputError("empty polynomial text");
  if (whole == "0") return out;

  // Terms are separated by " + "; a leading coefficient may itself be
  // negative, so only top-level plus signs split terms.
  std::vector<std::string> term_texts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = whole.find(" + ", start);
    if (plus == std::string::npos) {
      term_texts.push_back(whole.substr(start));
      break;
    }
    term_texts.push_back(whole.substr(start, plus - start));
    start = plus + 3;
  }

  for (const std::string& raw : term_texts) {
    std::vector<std::string> factors;
    std::size_t fstart = 0;
    const std::string t = strip(raw);
    if (t.empty()) throw InputError("empty term in polynomial text");
    for (;;) {
      const std::size_t star = t.find('*', fstart);
      if (star == std::string::npos) {
        factors.push_back(strip(std::string_view(t).substr(fstart)));
        break;
      }
      factors.push_back(strip(std::string_view(t).substr(fstart, star - fstart)));
      fstart = star + 1;
    }
    if (factors.empty() || factors[0].empty()) {
      throw InputError("term missing coefficient: '" + t + "'");
    }
    const Rational coeff = Rational::parse(factors[0]);
    std::vector<int> e(static_cast<std::size_t>(nx + ny), 0);
    for (std::size_t f = 1; f < factors.size(); ++f) {
      const std::string& factor = factors[f];
      if (factor.size() < 2 || (factor[0] != 'X' && factor[0] != 'Y')) {
        throw InputError("bad variable factor '" + factor + "'");
      }
      const std::size_t caret = factor.find('^');
      const std::string name = factor.substr(1, caret == std::string::npos
                                                     ? std::string::npos
                                                     : caret - 1);
      int exp = 1;
      if (caret != std::string::npos) {
        const std::string exp_text = strip(std::string_view(factor).substr(caret + 1));
        try {
          exp = std::stoi(exp_text);
        } catch (const std::exception&) {
          throw InputError("bad exponent in '" + factor + "'");
        }
        if (exp < 1) throw InputError("exponent must be positive in '" + factor + "'");
      }
      int index = 0;
      try {
        index = std::stoi(name);
      } catch (const std::exception&) {
        throw InputError("bad variable index in '" + factor + "'");
      }
      int slot = 0;
      if (factor[0] == 'X') {
        if (index < 1 || index > nx) throw InputError("X index out of range in '" + factor + "'");
        slot = index - 1;
      } else {
        if (index < 1 || index > ny) throw InputError("Y index out of range in '" + factor + "'");
        slot = nx + index - 1;
      }
      e[static_cast<std::size_t>(slot)] += exp;
    }
    out.add_term(e, coeff);
  }
  return out;
}

}  // namespace osculo
