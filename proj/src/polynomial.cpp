#include "rpade/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "rpade/errors.hpp"

namespace rpade {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::variable() { return Polynomial(std::vector<Rational>{0, 1}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Polynomial& rhs) {
  auto [q, r] = divmod(*this, rhs);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return *this = std::move(q);
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  const Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Polynomial::operator()(const Real& x) const {
  Real acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Real(*it);
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.leading();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm.
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f / a;
  Polynomial c = df / a;
  Polynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

namespace {

class Isolator {
 public:
  Isolator(const Polynomial& f, unsigned multiplicity, const Rational& width)
      : f_(f), chain_(sturm_chain(f)), multiplicity_(multiplicity), width_(width) {}

  // Roots in (a, b], given V(a) and V(b).
  void run(const Rational& a, const Rational& b, int va, int vb, std::vector<IsolatedRoot>& out) {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      refine(a, b, out);
      return;
    }
    const Rational m = (a + b) / 2;
    const int vm = sign_variations(chain_, m);
    if (f_.sign_at(m) == 0) {
      // V(m) equals V(m+) at a simple root, so (a, m) holds va - vm - 1 roots.
      run_open(a, m, va, vm + 1, out);
      out.push_back({m, m, multiplicity_});
      run(m, b, vm, vb, out);
      return;
    }
    run(a, m, va, vm, out);
    run(m, b, vm, vb, out);
  }

 private:
  void run_open(const Rational& a, const Rational& m, int va, int vm_minus, std::vector<IsolatedRoot>& out) {
    if (va - vm_minus <= 0) return;
    // Shrink the right end until it is no longer a root, keeping all roots in (a, m).
    Rational right = m;
    Rational step = (m - a) / 2;
    for (;;) {
      Rational probe = right - step;
      if (f_.sign_at(probe) != 0 && sign_variations(chain_, probe) == vm_minus) {
        run(a, probe, va, vm_minus, out);
        return;
      }
      step /= 2;
    }
  }

  void refine(Rational a, Rational b, std::vector<IsolatedRoot>& out) {
    // One root in (a, b]. If b is the root, report it exactly.
    if (f_.sign_at(b) == 0) {
      out.push_back({b, b, multiplicity_});
      return;
    }
    const int sb = f_.sign_at(b);
    int va = sign_variations(chain_, a);
    while (b - a >= width_) {
      const Rational m = (a + b) / 2;
      const int sm = f_.sign_at(m);
      if (sm == 0) {
        out.push_back({m, m, multiplicity_});
        return;
      }
      if (f_.sign_at(a) != 0) {
        // Simple root with a sign change across it.
        if (sm == sb) {
          b = m;
        } else {
          a = m;
        }
      } else {
        const int vm = sign_variations(chain_, m);
        if (va - vm == 1) {
          b = m;
        } else {
          a = m;
          va = vm;
        }
      }
    }
    out.push_back({a, b, multiplicity_});
  }

  Polynomial f_;
  std::vector<Polynomial> chain_;
  unsigned multiplicity_;
  Rational width_;
};

}  // namespace

std::vector<IsolatedRoot> poly_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                          long precision_bits) {
  if (p.is_zero()) throw InvalidArgument("root isolation of the zero polynomial");
  if (!(lo < hi)) throw InvalidArgument("root isolation needs lo < hi");
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<mp_bitcnt_t>(std::max(1L, precision_bits / 2)));

  std::vector<IsolatedRoot> out;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    if (factor.sign_at(lo) == 0) out.push_back({lo, lo, mult});
    Isolator iso(factor, mult, width);
    const auto chain = sturm_chain(factor);
    iso.run(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi), out);
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace rpade
