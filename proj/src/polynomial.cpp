#include "polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace arbor {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial(std::vector<Int>{std::move(c)}); }

IntPolynomial IntPolynomial::variable() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Int> coeffs;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coeffs.push_back(parse_int(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t IntPolynomial::deg() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Int IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

const Int& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Int& k) {
  for (auto& c : coeffs_) c *= k;
  normalize();
  return *this;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::divexact(const Int& k) const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return r;
}

std::string IntPolynomial::to_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += to_string(coeffs_[i]);
  }
  return out;
}

std::string IntPolynomial::to_display(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t db = b.deg();
  if (a.is_zero() || a.deg() < db) return a;
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const Int& lb = b.leading();
  std::size_t steps = a.deg() - db + 1;
  std::size_t top = a.deg();
  // Each pass multiplies by lc(b) and cancels the current top term.
  for (std::size_t s = 0; s < steps; ++s, --top) {
    Int q = r[top];
    for (auto& c : r) c *= lb;
    std::size_t shift = top - db;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= q * b.coeffs()[j];
  }
  return IntPolynomial(std::move(r));
}

Int resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  IntPolynomial A = p;
  IntPolynomial B = q;
  if (A.deg() == 0 && B.deg() == 0) return 1;
  if (B.deg() == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), B.leading().get_mpz_t(), A.deg());
    return r;
  }
  if (A.deg() == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), A.leading().get_mpz_t(), B.deg());
    return r;
  }

  int sign = 1;
  if (A.deg() < B.deg()) {
    std::swap(A, B);
    if ((A.deg() & 1U) && (B.deg() & 1U)) sign = -sign;
  }
  Int ca = A.content();
  Int cb = B.content();
  A = A.divexact(ca);
  B = B.divexact(cb);
  Int t, tb;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), B.deg());
  mpz_pow_ui(tb.get_mpz_t(), cb.get_mpz_t(), A.deg());
  t *= tb;

  Int g = 1;
  Int h = 1;
  while (true) {
    const std::size_t delta = A.deg() - B.deg();
    if ((A.deg() & 1U) && (B.deg() & 1U)) sign = -sign;
    IntPolynomial R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    Int hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
    B = R.divexact(g * hd);
    g = A.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Int gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
    if (B.deg() == 0) break;
  }
  const std::size_t da = A.deg();
  Int lb_pow, h_pow;
  mpz_pow_ui(lb_pow.get_mpz_t(), B.leading().get_mpz_t(), da);
  mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), da - 1);
  mpz_divexact(h.get_mpz_t(), lb_pow.get_mpz_t(), h_pow.get_mpz_t());
  Int out = t * h;
  return sign < 0 ? Int(-out) : out;
}

Int discriminant(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "discriminant of the zero polynomial");
  const std::size_t d = p.deg();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "discriminant needs degree >= 1");
  Int r = resultant(p, p.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if ((d * (d - 1) / 2) & 1U) r = -r;
  return r;
}

double poly_height(const IntPolynomial& p) {
  double h = 0.0;
  for (const auto& c : p.coeffs()) h = std::max(h, height(c));
  return h;
}

}  // namespace arbor
