#include "sepstat/formulas.hpp"

#include <ostream>
#include <stdexcept>

namespace sepstat {

namespace {

// (k-i) i (i+1) / 2, always an integer.
BigInt gap_weight(std::size_t k, std::size_t i) {
  return BigInt(k - i) * i * (i + 1) / 2;
}

}  // namespace

BigInt record_triangle_sum(std::size_t k) {
  BigInt total = 0;
  for (std::size_t a = 1; a <= k; ++a) total += BigInt(a) * (a - 1) / 2;
  return total;
}

BigInt total_sep_nk(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::out_of_range("total_sep_nk: need 1 <= k <= n");
  BigInt total = stirling2(n, k) * record_triangle_sum(k);
  for (std::size_t i = 1; i < k; ++i) {
    BigInt inner = 0;
    BigInt power = 1;  // i^{j-1}
    for (std::size_t j = 1; j + k <= n; ++j) {
      inner += stirling2(n - j, k) * power;
      power *= i;
    }
    total += gap_weight(k, i) * inner;
  }
  return total;
}

BigInt total_sep_n(std::size_t n) {
  if (n < 1) throw std::out_of_range("total_sep_n: need n >= 1");
  const BigRational half_n(BigInt(n), BigInt(2));
  const BigRational value = BigRational(bell(n + 3)) / 3 - BigRational(bell(n + 2)) / 4 -
                            (half_n + BigRational(13, 12)) * bell(n + 1) -
                            (BigRational(1, 12) + half_n) * bell(n);
  if (!is_integral(value)) {
    throw std::logic_error("total_sep_n: non-integral result for n = " + std::to_string(n));
  }
  return numerator(value);
}

BigInt total_sep_n_times_12(std::size_t n) {
  return 4 * bell(n + 3) - 3 * bell(n + 2) - BigInt(6 * n + 13) * bell(n + 1) -
         BigInt(6 * n + 1) * bell(n);
}

std::vector<BigInt> lemma_coeff(std::size_t k, std::size_t order) {
  if (k < 1 || k > order) throw std::out_of_range("lemma_coeff: need 1 <= k <= order");
  using IntSeries = std::vector<BigInt>;

  // s / (1 - c x)
  auto div_linear = [order](const IntSeries& s, std::size_t c) {
    IntSeries h(order + 1, BigInt(0));
    for (std::size_t n = 0; n <= order; ++n) {
      h[n] = s[n];
      if (n > 0) h[n] += h[n - 1] * c;
    }
    return h;
  };

  // x^k / prod_{i=1}^{k} (1 - i x)
  IntSeries base(order + 1, BigInt(0));
  base[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) base = div_linear(base, i);

  IntSeries out(order + 1, BigInt(0));
  const BigInt triangle = record_triangle_sum(k);
  for (std::size_t n = 0; n <= order; ++n) out[n] = base[n] * triangle;

  // Multiplying by x shifts base up one slot.
  IntSeries shifted(order + 1, BigInt(0));
  for (std::size_t n = 1; n <= order; ++n) shifted[n] = base[n - 1];
  for (std::size_t i = 1; i < k; ++i) {
    const IntSeries term = div_linear(shifted, i);
    const BigInt w = gap_weight(k, i);
    for (std::size_t n = 0; n <= order; ++n) out[n] += term[n] * w;
  }
  return out;
}

namespace {

PfdCoefficients pfd_closed_form(std::size_t k, int cube_sign) {
  if (k < 1) throw std::out_of_range("pfd_coeffs: need k >= 1");
  PfdCoefficients out{k, {}};
  out.rows.reserve(k);
  const BigRational triangle(record_triangle_sum(k));
  const BigInt kk(k);
  for (std::size_t m = 1; m <= k; ++m) {
    const BigInt mm(m);
    const BigInt sign = ((k - m) % 2 == 0) ? 1 : -1;
    const BigInt denom = factorial(m - 1) * factorial(k - m);
    PfdRow row;
    row.a = BigRational(sign * (kk - mm) * mm * (mm + 1), 2 * denom);
    BigRational inner = BigRational(cube_sign * kk * kk * kk, 12) -
                        BigRational(kk * kk * (mm + 1), 4) +
                        BigRational(kk * (6 * mm * mm + 21 * mm + 10), 12) -
                        BigRational(3 * mm * mm, 2) - BigRational(mm) + triangle;
    row.b = inner * sign / denom;
    out.rows.push_back(std::move(row));
  }
  return out;
}

using RationalPoly = std::vector<BigRational>;  // ascending powers

RationalPoly times_linear(const RationalPoly& p, const BigRational& root) {
  // p(y) * (y - root)
  RationalPoly out(p.size() + 1, BigRational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= p[i] * root;
  }
  return out;
}

// Value and first derivative at y by Horner's scheme.
std::pair<BigRational, BigRational> eval_with_derivative(const RationalPoly& p,
                                                         const BigRational& y) {
  BigRational value = 0;
  BigRational slope = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    slope = slope * y + value;
    value = value * y + p[i];
  }
  return {value, slope};
}

}  // namespace

PfdCoefficients pfd_coeffs(std::size_t k) { return pfd_closed_form(k, -1); }

PfdCoefficients pfd_coeffs_literal(std::size_t k) { return pfd_closed_form(k, +1); }

PfdCoefficients pfd_oracle(std::size_t k) {
  if (k < 1) throw std::out_of_range("pfd_oracle: need k >= 1");

  // Num(y) = T prod_i (y - i) + sum_i w_i prod_{l != i} (y - l).
  RationalPoly all{BigRational(1)};
  for (std::size_t i = 1; i <= k; ++i) all = times_linear(all, BigRational(i));
  RationalPoly num(all.size(), BigRational(0));
  const BigRational triangle(record_triangle_sum(k));
  for (std::size_t d = 0; d < all.size(); ++d) num[d] = all[d] * triangle;
  for (std::size_t i = 1; i <= k; ++i) {
    RationalPoly others{BigRational(1)};
    for (std::size_t l = 1; l <= k; ++l) {
      if (l != i) others = times_linear(others, BigRational(l));
    }
    const BigRational w(gap_weight(k, i));
    for (std::size_t d = 0; d < others.size(); ++d) num[d] += others[d] * w;
  }

  PfdCoefficients out{k, {}};
  out.rows.reserve(k);
  for (std::size_t m = 1; m <= k; ++m) {
    RationalPoly den{BigRational(1)};
    for (std::size_t i = 1; i <= k; ++i) {
      if (i == m) continue;
      den = times_linear(den, BigRational(i));
      den = times_linear(den, BigRational(i));
    }
    const BigRational at(m);
    const auto [n0, n1] = eval_with_derivative(num, at);
    const auto [d0, d1] = eval_with_derivative(den, at);
    out.rows.push_back({n0 / d0, (n1 * d0 - n0 * d1) / (d0 * d0)});
  }
  return out;
}

namespace {

void require_not_pole(std::size_t k, const BigRational& y) {
  if (is_integral(y) && numerator(y) >= 1 && numerator(y) <= k) {
    throw std::domain_error("evaluation at a pole y = " + to_string(y));
  }
}

}  // namespace

BigRational pfd_function_value(std::size_t k, const BigRational& y) {
  require_not_pole(k, y);
  BigRational bracket(record_triangle_sum(k));
  BigRational product = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const BigRational gap = y - BigRational(i);
    bracket += BigRational(gap_weight(k, i)) / gap;
    product /= gap;
  }
  return bracket * product;
}

BigRational pfd_evaluate(const PfdCoefficients& c, const BigRational& y) {
  require_not_pole(c.k, y);
  BigRational total = 0;
  for (std::size_t m = 1; m <= c.k; ++m) {
    const BigRational gap = y - BigRational(m);
    total += c.at(m).a / (gap * gap) + c.at(m).b / gap;
  }
  return total;
}

void write_pfd_golden(std::ostream& os, std::size_t max_k) {
  for (std::size_t k = 1; k <= max_k; ++k) {
    const auto c = pfd_oracle(k);
    for (std::size_t m = 1; m <= k; ++m) {
      const auto& r = c.at(m);
      os << k << ' ' << m << ' ' << numerator(r.a) << ' ' << denominator(r.a) << ' '
         << numerator(r.b) << ' ' << denominator(r.b) << '\n';
    }
  }
}

RationalSeries rational_series_mul(const RationalSeries& f, const RationalSeries& g) {
  if (f.size() != g.size()) throw std::invalid_argument("series truncation orders differ");
  RationalSeries out(f.size(), BigRational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j < f.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

RationalSeries exp_linear_series(long c, std::size_t order) {
  RationalSeries out(order + 1);
  BigRational term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = term;
    term = term * c / static_cast<long>(n + 1);
  }
  return out;
}

RationalSeries x_exp_linear_series(long c, std::size_t order) {
  const RationalSeries e = exp_linear_series(c, order);
  RationalSeries out(order + 1, BigRational(0));
  for (std::size_t n = 1; n <= order; ++n) out[n] = e[n - 1];
  return out;
}

RationalSeries bell_egf(std::size_t order) {
  RationalSeries out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out[n] = BigRational(bell(n), factorial(n));
  return out;
}

RationalSeries bell_egf_by_exponentiation(std::size_t order) {
  RationalSeries f = exp_linear_series(1, order);  // e^x - 1
  f[0] = 0;
  RationalSeries h(order + 1, BigRational(0));
  h[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigRational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += f[j] * h[n - j] * static_cast<long>(j);
    h[n] = acc / static_cast<long>(n);
  }
  return h;
}

BigInt EgfSeries::integer_total(std::size_t n) const {
  const BigRational v = coeffs.at(n) * factorial(n);
  if (!is_integral(v)) {
    throw std::logic_error("EGF coefficient times n! is not an integer at n = " +
                           std::to_string(n));
  }
  return numerator(v);
}

EgfSeries egf_coeffs(std::size_t order) {
  RationalSeries inner(order + 1, BigRational(0));
  auto add = [&inner](const RationalSeries& s, const BigRational& w) {
    for (std::size_t n = 0; n < inner.size(); ++n) inner[n] += s[n] * w;
  };
  add(exp_linear_series(3, order), BigRational(1, 3));
  add(x_exp_linear_series(2, order), BigRational(-1, 2));
  add(exp_linear_series(2, order), BigRational(3, 4));
  add(x_exp_linear_series(1, order), BigRational(-1));
  add(exp_linear_series(1, order), BigRational(-1));
  inner[0] -= BigRational(1, 12);
  return EgfSeries{rational_series_mul(bell_egf(order), inner)};
}

std::vector<IdentityCheck> bell_shift_identities_check(std::size_t order) {
  const RationalSeries e = bell_egf_by_exponentiation(order);
  // Bell numbers up to order + 3 come from the independent triangle table.
  const BellTable b(order + 3);

  struct Identity {
    const char* name;
    RationalSeries factor;
    BigInt (*expected)(const BellTable&, std::size_t);
  };
  const Identity identities[] = {
      {"exp(x)E", exp_linear_series(1, order),
       [](const BellTable& t, std::size_t n) { return BigInt(t[n + 1]); }},
      {"exp(2x)E", exp_linear_series(2, order),
       [](const BellTable& t, std::size_t n) { return BigInt(t[n + 2] - t[n + 1]); }},
      {"exp(3x)E", exp_linear_series(3, order),
       [](const BellTable& t, std::size_t n) {
         return BigInt(t[n + 3] - 3 * t[n + 2] + 2 * t[n + 1]);
       }},
      {"x*exp(x)E", x_exp_linear_series(1, order),
       [](const BellTable& t, std::size_t n) { return BigInt(t[n] * n); }},
      {"x*exp(2x)E", x_exp_linear_series(2, order),
       [](const BellTable& t, std::size_t n) { return BigInt(t[n + 1] * n - t[n] * n); }},
  };

  std::vector<IdentityCheck> report;
  for (const auto& id : identities) {
    const RationalSeries product = rational_series_mul(id.factor, e);
    IdentityCheck check{id.name, order, std::nullopt};
    for (std::size_t n = 0; n <= order; ++n) {
      if (product[n] * factorial(n) != BigRational(id.expected(b, n))) {
        check.first_failure = n;
        break;
      }
    }
    report.push_back(std::move(check));
  }
  return report;
}

}  // namespace sepstat
