#include "ffhyper/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace ffhyper {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

using Poly = std::vector<std::uint32_t>;  // coefficients low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t powmod(std::uint64_t base, std::uint64_t k, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (k > 0) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

// Remainder of a modulo a nonzero polynomial m.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint32_t factor = mulmod(a.back(), lead_inv, p);
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint32_t t = mulmod(factor, m[i], p);
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_rem(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return poly_rem(std::move(result), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^k} mod m by repeated p-th powering.
Poly frobenius_power_of_x(std::uint32_t k, const Poly& m, std::uint32_t p) {
  Poly h{0, 1};
  h = poly_rem(std::move(h), m, p);
  for (std::uint32_t i = 0; i < k; ++i) h = poly_powmod(h, p, m, p);
  return h;
}

Poly sub_x(Poly h, std::uint32_t p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  trim(h);
  return h;
}

// Rabin's test: f of degree e is irreducible iff x^{p^e} = x mod f and
// gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto e = static_cast<std::uint32_t>(f.size() - 1);
  if (!sub_x(frobenius_power_of_x(e, f, p), p).empty()) return false;
  for (auto r : prime_factors(e)) {
    Poly g = poly_gcd(f, sub_x(frobenius_power_of_x(e / static_cast<std::uint32_t>(r), f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Smallest monic irreducible polynomial of degree e, comparing c_0 first, then c_1, ...
Poly find_modulus(std::uint32_t p, std::uint32_t e) {
  Poly f(e + 1, 0);
  f[e] = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    // Lexicographic increment with c_{e-1} as the least significant position.
    std::int64_t i = static_cast<std::int64_t>(e) - 1;
    while (i >= 0) {
      if (++f[static_cast<std::size_t>(i)] < p) break;
      f[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) throw Error(ErrorKind::InvalidInput, "no irreducible polynomial found");
  }
}

Poly to_poly(std::uint32_t value, std::uint32_t p) {
  Poly a;
  while (value > 0) {
    a.push_back(value % p);
    value /= p;
  }
  return a;
}

std::uint32_t from_poly(const Poly& a, std::uint32_t p) {
  std::uint64_t value = 0;
  for (std::size_t i = a.size(); i-- > 0;) value = value * p + a[i];
  return static_cast<std::uint32_t>(value);
}

// Arithmetic used before the log tables exist.
struct SlowArithmetic {
  std::uint32_t p;
  std::uint32_t e;
  Poly modulus;

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (e == 1) return mulmod(x, y, p);
    return from_poly(poly_mulmod(to_poly(x, p), to_poly(y, p), modulus, p), p);
  }

  std::uint32_t pow(std::uint32_t x, std::uint64_t k) const {
    if (e == 1) return powmod(x, k, p);
    return from_poly(poly_powmod(to_poly(x, p), k, modulus, p), p);
  }

  bool is_primitive(std::uint32_t x, std::uint32_t q) const {
    if (x == 0) return false;
    if (pow(x, q - 1) != 1) return false;
    for (auto r : prime_factors(q - 1)) {
      if (pow(x, (q - 1) / r) == 1) return false;
    }
    return true;
  }
};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
  auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  for (std::uint64_t m = n; m > 1; m /= factors[0]) ++e;
  return std::make_pair(static_cast<std::uint32_t>(factors[0]), e);
}

std::shared_ptr<const Field> Field::build(std::uint32_t p, std::uint32_t e,
                                          const FieldOptions& options) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorKind::InvalidInput, "characteristic must be odd");
  if (e == 0) throw Error(ErrorKind::InvalidInput, "extension degree must be at least 1");
  const std::uint64_t bound = std::min<std::uint64_t>(options.max_order, 1u << 31);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > bound) {
      throw Error(ErrorKind::SizeOverflow,
                  "field order exceeds the size bound " + std::to_string(options.max_order));
    }
  }
  if (q < 5) throw Error(ErrorKind::InvalidInput, "field order must be at least 5");

  std::shared_ptr<Field> field(new Field());
  field->p_ = p;
  field->e_ = e;
  field->q_ = static_cast<std::uint32_t>(q);
  if (e > 1) field->modulus_ = find_modulus(p, e);

  const SlowArithmetic slow{p, e, field->modulus_};
  std::uint32_t g = 0;
  if (options.generator) {
    g = options.generator->value;
    if (g >= q || !slow.is_primitive(g, field->q_)) {
      throw Error(ErrorKind::InvalidInput, "requested generator is not primitive");
    }
  } else {
    for (std::uint32_t x = 1; x < q; ++x) {
      if (slow.is_primitive(x, field->q_)) {
        g = x;
        break;
      }
    }
  }

  const std::uint32_t n = field->q_ - 1;
  field->exp_table_.resize(n);
  field->log_table_.assign(q, kNoLog);
  std::uint32_t x = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    field->exp_table_[j] = x;
    field->log_table_[x] = j;
    x = slow.mul(x, g);
  }

  // The trace is additive, so it is fixed by its values on the basis 1, a, ..., a^{e-1}.
  std::vector<std::uint32_t> basis_trace(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    Poly mono(i + 1, 0);
    mono[i] = 1;
    const Element b{from_poly(mono, p)};
    Element conj = b;
    std::vector<std::uint32_t> sum(e, 0);
    for (std::uint32_t k = 0; k < e; ++k) {
      auto d = field->digits(conj);
      for (std::uint32_t t = 0; t < e; ++t) sum[t] = (sum[t] + d[t]) % p;
      conj = field->pow(conj, p);
    }
    basis_trace[i] = sum[0];
  }
  field->trace_table_.resize(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    std::uint64_t t = 0;
    std::uint32_t rest = v;
    for (std::uint32_t i = 0; i < e; ++i) {
      t += std::uint64_t{rest % p} * basis_trace[i];
      rest /= p;
    }
    field->trace_table_[v] = static_cast<std::uint32_t>(t % p);
  }
  return field;
}

std::shared_ptr<const Field> build_field(std::uint32_t p, std::uint32_t e,
                                         const FieldOptions& options) {
  return Field::build(p, e, options);
}

Element Field::from_integer(std::int64_t n) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return Element{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > e_) throw Error(ErrorKind::InvalidInput, "too many digits for this field");
  std::uint64_t value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error(ErrorKind::InvalidInput, "digit out of range");
    value = value * p_ + digits[i];
  }
  return Element{static_cast<std::uint32_t>(value)};
}

std::vector<std::uint32_t> Field::digits(Element x) const {
  std::vector<std::uint32_t> d(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = x.value % p_;
    x.value /= p_;
  }
  return d;
}

Element Field::add(Element x, Element y) const noexcept {
  if (e_ == 1) return Element{(x.value + y.value) % p_};
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    result += ((x.value % p_ + y.value % p_) % p_) * place;
    x.value /= p_;
    y.value /= p_;
    place *= p_;
  }
  return Element{result};
}

Element Field::neg(Element x) const noexcept {
  if (e_ == 1) return Element{(p_ - x.value) % p_};
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    result += ((p_ - x.value % p_) % p_) * place;
    x.value /= p_;
    place *= p_;
  }
  return Element{result};
}

Element Field::sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

Element Field::mul(Element x, Element y) const noexcept {
  if (x.value == 0 || y.value == 0) return zero();
  const std::uint64_t j = std::uint64_t{log_table_[x.value]} + log_table_[y.value];
  return Element{exp_table_[j % unit_order()]};
}

Element Field::inv(Element x) const {
  if (x.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t j = log_table_[x.value];
  return Element{exp_table_[(unit_order() - j) % unit_order()]};
}

Element Field::div(Element x, Element y) const { return mul(x, inv(y)); }

Element Field::pow(Element x, std::int64_t k) const {
  if (x.value == 0) {
    if (k == 0) return one();
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return zero();
  }
  const auto n = static_cast<std::int64_t>(unit_order());
  const std::int64_t kr = ((k % n) + n) % n;
  const std::uint64_t j = std::uint64_t{log_table_[x.value]} * static_cast<std::uint64_t>(kr);
  return Element{exp_table_[j % unit_order()]};
}

std::uint32_t Field::discrete_log(Element x) const {
  if (x.value == 0 || x.value >= q_) {
    throw Error(ErrorKind::NoDiscreteLog, "zero has no discrete logarithm");
  }
  return log_table_[x.value];
}

std::uint32_t Field::reduce_index(std::int64_t j) const noexcept {
  const auto n = static_cast<std::int64_t>(unit_order());
  return static_cast<std::uint32_t>(((j % n) + n) % n);
}

Element Field::exp(std::int64_t j) const noexcept { return Element{exp_table_[reduce_index(j)]}; }

int Field::quadratic_character(Element x) const noexcept {
  if (x.value == 0) return 0;
  return log_table_[x.value] % 2 == 0 ? 1 : -1;
}

std::string Field::format(Element x) const {
  if (e_ == 1) return std::to_string(x.value);
  std::string out;
  const auto d = digits(x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

Element Field::parse(std::string_view text) const {
  std::vector<std::uint32_t> d;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw Error(ErrorKind::InvalidInput, "malformed element '" + std::string(text) + "'");
    }
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::InvalidInput, "element out of range: " + std::string(text));
    }
    d.push_back(static_cast<std::uint32_t>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (e_ == 1) {
    if (d.size() != 1 || d[0] >= q_) {
      throw Error(ErrorKind::InvalidInput, "element out of range: " + std::string(text));
    }
    return Element{d[0]};
  }
  if (d.size() > e_) {
    throw Error(ErrorKind::InvalidInput, "too many digits in '" + std::string(text) + "'");
  }
  for (auto digit : d) {
    if (digit >= p_) throw Error(ErrorKind::InvalidInput, "digit out of range in '" + std::string(text) + "'");
  }
  return from_digits(d);
}

std::vector<Element> sqrt_opt(const Field& field, Element x) {
  if (x.value == 0) return {Field::zero()};
  const std::uint32_t j = field.discrete_log(x);
  if (j % 2 != 0) return {};
  const Element r = field.exp(j / 2);
  std::vector<Element> roots{r, field.neg(r)};
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Element> roots_of_cubic(const Field& field, Element a, Element b) {
  std::vector<Element> roots;
  for (std::uint32_t v = 0; v < field.order(); ++v) {
    const Element x{v};
    const Element value = field.add(field.mul(x, field.add(field.mul(x, x), a)), b);
    if (value.value == 0) roots.push_back(x);
  }
  return roots;
}

std::vector<Element> primitive_elements(const Field& field) {
  std::vector<Element> out;
  const std::uint32_t n = field.unit_order();
  for (std::uint32_t v = 1; v < field.order(); ++v) {
    const std::uint32_t j = field.discrete_log(Element{v});
    if (std::gcd(j, n) == 1) out.push_back(Element{v});
  }
  return out;
}

}  // namespace ffhyper
