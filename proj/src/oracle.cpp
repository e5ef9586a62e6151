#include "motint/oracle.hpp"

#include <vector>

#include "motint/errors.hpp"
#include "motint/parallel.hpp"
#include "motint/witt.hpp"

namespace motint {

namespace {

// Per-exponent class counts: exact[e] classes contribute q^{-e} to both
// bounds, tail[e] classes contribute q^{-e} to the upper bound only.
struct Tally {
  std::vector<std::uint64_t> exact;
  std::vector<std::uint64_t> tail;

  explicit Tally(std::size_t size = 0) : exact(size, 0), tail(size, 0) {}
  void merge(const Tally& o) {
    for (std::size_t e = 0; e < exact.size(); ++e) {
      exact[e] += o.exact[e];
      tail[e] += o.tail[e];
    }
  }
};

std::uint64_t class_count(std::uint64_t q, unsigned depth, unsigned n) {
  const Integer total = ipow(ipow(Integer(static_cast<unsigned long>(q)), depth), n);
  if (total > kMaxOracleClasses)
    throw BudgetError("enumerating " + total.get_str() + " residue classes exceeds the budget of " +
                      std::to_string(kMaxOracleClasses));
  return total.get_ui();
}

void check_depth(unsigned depth) {
  if (depth < 1) throw DomainError("truncation depth must be at least 1");
}

// Runs `ords(index, out)` over all classes; `out` receives ord per form with
// `depth` meaning undetermined.
template <class Ords>
Bracket tally_bracket(const FormProduct& fp, std::uint64_t q, unsigned depth, Ords make_ords) {
  const unsigned s = static_cast<unsigned>(fp.forms.size());
  const std::uint64_t total = class_count(q, depth, fp.n);
  const std::size_t width = static_cast<std::size_t>(s) * depth + 1;
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    Tally t(width);
    auto ords = make_ords();
    std::vector<unsigned> ord(s);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      ords(idx, ord);
      unsigned sum = 0;
      bool determined = true;
      for (unsigned o : ord) {
        sum += o;
        determined &= o < depth;
      }
      (determined ? t.exact : t.tail)[sum] += 1;
    }
    return t;
  };
  Tally t = parallel_reduce<Tally>(total, Tally(width), work, [](Tally a, const Tally& b) {
    a.merge(b);
    return a;
  });

  const Integer Q(static_cast<unsigned long>(q));
  Bracket b;
  b.q = q;
  b.depth = depth;
  b.lower = 0;
  Rational tail = 0;
  for (std::size_t e = 0; e < width; ++e) {
    const Integer scale = ipow(Q, static_cast<unsigned long>(width - 1 - e));
    b.lower += Rational(Integer(static_cast<unsigned long>(t.exact[e])) * scale);
    tail += Rational(Integer(static_cast<unsigned long>(t.tail[e])) * scale);
  }
  Rational denom(ipow(Q, static_cast<unsigned long>(width - 1)) * Integer(static_cast<unsigned long>(total)));
  b.lower /= denom;
  b.upper = b.lower + tail / denom;
  return b;
}

}  // namespace

Bracket padic_bracket_zp(const FormProduct& fp, std::uint64_t p, unsigned depth) {
  fp.validate();
  check_depth(depth);
  if (!is_prime(p)) throw DomainError("Z_p oracle needs a prime, got " + std::to_string(p));
  const unsigned n = fp.n;
  class_count(p, depth, n);
  const std::uint64_t modulus = ipow(Integer(static_cast<unsigned long>(p)), depth).get_ui();
  std::vector<std::vector<std::uint64_t>> coeffs;
  for (const auto& f : fp.forms) {
    std::vector<std::uint64_t> c;
    for (const auto& x : f) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), modulus);
      c.push_back(r.get_ui());
    }
    coeffs.push_back(std::move(c));
  }
  return tally_bracket(fp, p, depth, [&] {
    return [&, x = std::vector<std::uint64_t>(n)](std::uint64_t idx, std::vector<unsigned>& ord) mutable {
      for (unsigned i = n; i-- > 0;) {
        x[i] = idx % modulus;
        idx /= modulus;
      }
      for (std::size_t f = 0; f < coeffs.size(); ++f) {
        unsigned __int128 acc = 0;
        for (unsigned i = 0; i < n; ++i) acc += static_cast<unsigned __int128>(coeffs[f][i]) * x[i];
        std::uint64_t v = static_cast<std::uint64_t>(acc % modulus);
        unsigned o = 0;
        if (v == 0) {
          o = depth;
        } else {
          while (v % p == 0) {
            v /= p;
            ++o;
          }
        }
        ord[f] = o;
      }
    };
  });
}

Bracket padic_bracket_wq(const FormProduct& fp, std::uint64_t p, unsigned degree, unsigned depth) {
  fp.validate();
  check_depth(depth);
  const FiniteField field = FiniteField::construct(p, degree);
  const std::uint64_t q = field.order();
  const unsigned n = fp.n;
  class_count(q, depth, n);
  const WittArithmetic<FiniteField> W(WittContext::get(p, depth), field);
  using Vec = WittArithmetic<FiniteField>::Vector;
  std::vector<std::vector<Vec>> coeffs;
  for (const auto& f : fp.forms) {
    std::vector<Vec> c;
    for (const auto& x : f) c.push_back(W.from_integer(x));
    coeffs.push_back(std::move(c));
  }
  const std::uint64_t per_var = ipow(Integer(static_cast<unsigned long>(q)), depth).get_ui();
  return tally_bracket(fp, q, depth, [&] {
    return [&, x = std::vector<Vec>(n, W.zero())](std::uint64_t idx, std::vector<unsigned>& ord) mutable {
      for (unsigned i = n; i-- > 0;) {
        std::uint64_t r = idx % per_var;
        idx /= per_var;
        for (unsigned j = depth; j-- > 0;) {
          x[i].coeffs[j] = static_cast<FiniteField::Element>(r % q);
          r /= q;
        }
      }
      for (std::size_t f = 0; f < coeffs.size(); ++f) {
        Vec acc = W.zero();
        for (unsigned i = 0; i < n; ++i)
          if (W.ord(coeffs[f][i])) acc = W.add(acc, W.mul(coeffs[f][i], x[i]));
        ord[f] = W.ord(acc).value_or(depth);
      }
    };
  });
}

Bracket equalchar_bracket(const FormProduct& fp, std::uint64_t q, unsigned depth) {
  fp.validate();
  check_depth(depth);
  std::uint64_t p;
  unsigned e;
  if (!split_prime_power(q, p, e)) throw DomainError(std::to_string(q) + " is not a prime power");
  const FiniteField field = FiniteField::construct(p, e);
  const unsigned n = fp.n;
  class_count(q, depth, n);
  // Coefficients are constants, so each t-coordinate of l(x) is l applied to
  // the matching coordinates of x.
  std::vector<std::vector<FiniteField::Element>> coeffs;
  for (const auto& f : fp.forms) {
    std::vector<FiniteField::Element> c;
    for (const auto& x : f) c.push_back(field.from_integer(x));
    coeffs.push_back(std::move(c));
  }
  const std::uint64_t per_var = ipow(Integer(static_cast<unsigned long>(q)), depth).get_ui();
  return tally_bracket(fp, q, depth, [&] {
    return [&, x = std::vector<FiniteField::Element>(std::size_t{n} * depth)](std::uint64_t idx,
                                                                              std::vector<unsigned>& ord) mutable {
      for (unsigned i = n; i-- > 0;) {
        std::uint64_t r = idx % per_var;
        idx /= per_var;
        for (unsigned j = depth; j-- > 0;) {
          x[i * depth + j] = static_cast<FiniteField::Element>(r % q);
          r /= q;
        }
      }
      for (std::size_t f = 0; f < coeffs.size(); ++f) {
        unsigned o = depth;
        for (unsigned j = 0; j < depth && o == depth; ++j) {
          FiniteField::Element acc = 0;
          for (unsigned i = 0; i < n; ++i)
            if (coeffs[f][i]) acc = field.add(acc, field.mul(coeffs[f][i], x[i * depth + j]));
          if (acc != 0) o = j;
        }
        ord[f] = o;
      }
    };
  });
}

std::uint64_t cylinder_count(const MultiPoly& f, std::uint64_t p, unsigned degree, unsigned m, unsigned level) {
  if (f.modulus() != 0) throw DomainError("cylinder_count expects an integer polynomial");
  if (m < 1 || level > m) throw DomainError("cylinder_count needs 1 <= m and level <= m");
  const FiniteField field = FiniteField::construct(p, degree);
  const std::uint64_t q = field.order();
  const unsigned d = f.nvars();
  const std::uint64_t total = class_count(q, m, d);
  const WittArithmetic<FiniteField> W(WittContext::get(p, m), field);
  using Vec = WittArithmetic<FiniteField>::Vector;
  std::vector<WittPolynomialTerm<FiniteField::Element>> terms;
  for (const auto& [mono, c] : f.terms()) terms.push_back({W.from_integer(c), mono});
  const std::uint64_t per_var = ipow(Integer(static_cast<unsigned long>(q)), m).get_ui();

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Vec> x(d, W.zero());
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned i = d; i-- > 0;) {
        std::uint64_t r = rest % per_var;
        rest /= per_var;
        for (unsigned j = m; j-- > 0;) {
          x[i].coeffs[j] = static_cast<FiniteField::Element>(r % q);
          r /= q;
        }
      }
      const Vec value = W.evaluate(std::span<const WittPolynomialTerm<FiniteField::Element>>(terms), x);
      count += W.ord(value).value_or(m) >= level;
    }
    return count;
  };
  return parallel_reduce<std::uint64_t>(total, 0, work, [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

std::uint64_t cylinder_count(const MultiPoly& f, std::uint64_t p, unsigned degree, unsigned m) {
  return cylinder_count(f, p, degree, m, m);
}

MultiPoly univariate_polynomial(const IntegerPolynomial& f) {
  MultiPoly out(1);
  for (std::size_t e = 0; e < f.size(); ++e) out.add_term({static_cast<std::uint32_t>(e)}, f[e]);
  return out;
}

}  // namespace motint
