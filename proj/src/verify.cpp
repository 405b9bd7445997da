#include "clbits/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "clbits/binary.hpp"
#include "clbits/blade_oracle.hpp"
#include "clbits/classify.hpp"
#include "clbits/efb.hpp"
#include "clbits/efb_convert.hpp"
#include "clbits/efb_kernels.hpp"
#include "clbits/null_word.hpp"
#include "clbits/random.hpp"

namespace clbits {

namespace {

struct Tally {
  explicit Tally(std::string name) { r.name = std::move(name); }

  SuiteResult r;

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++r.checked;
    if (!ok) {
      if (r.failures == 0) r.first_failure = describe();
      ++r.failures;
    }
  }
};

struct Limits {
  std::int64_t lucas_n;
  unsigned lucas_i;
  unsigned efb_m;       // eigenvectors, Witt relations, sign oracle
  unsigned cocycle_m;   // cocycle and matrix units
  unsigned equiv_m;
  unsigned equiv_pairs;
  unsigned signature;   // k, l bound for closed forms and n mod 8 recovery
  unsigned center;      // k, l bound for the centrality check
  unsigned involution;  // k, l bound for the omega / tau conjugations
  unsigned counts_m;
};

// Populated cells of the (n, nu) periodicity table, n, nu in 0..7.
const std::map<std::pair<unsigned, unsigned>, std::string>& periodicity_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::string> table = {
      {{0, 0}, "R"},     {{1, 1}, "2R"},    {{2, 0}, "R(2)"},  {{2, 2}, "R(2)"},  {{3, 1}, "2R(2)"},
      {{3, 3}, "C(2)"},  {{4, 0}, "R(4)"},  {{4, 2}, "R(4)"},  {{4, 4}, "H(2)"},  {{5, 1}, "2R(4)"},
      {{5, 3}, "C(4)"},  {{5, 5}, "2H(2)"}, {{6, 0}, "R(8)"},  {{6, 2}, "R(8)"},  {{6, 4}, "H(4)"},
      {{6, 6}, "H(4)"},  {{7, 1}, "2R(8)"}, {{7, 3}, "C(8)"},  {{7, 5}, "2H(4)"}, {{7, 7}, "C(8)"},
  };
  return table;
}

SuiteResult table_suite() {
  Tally t{"periodicity table"};
  for (const auto& [cell, expected] : periodicity_table()) {
    const auto [n, nu] = cell;
    const AlgebraClass c = classify((n + nu) / 2, (n - nu) / 2);
    t.check(c.table_name() == expected && c.dimension_identity_holds(), [&] {
      return "(n,nu)=(" + std::to_string(n) + "," + std::to_string(nu) + ") gave " + c.table_name();
    });
  }
  return t.r;
}

SuiteResult lucas_suite(const Limits& lim) {
  Tally t{"binary / Lucas"};
  for (std::int64_t n = 0; n < lim.lucas_n; ++n) {
    for (unsigned i = 0; i <= lim.lucas_i; ++i)
      t.check(lucas_sign(n, i) == sign_bit(n, i), [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); });
    t.check(half_pochhammer_sign(n) == sign_bit(n, 1), [&] { return "half Pochhammer n=" + std::to_string(n); });
  }
  return t.r;
}

SuiteResult witt_suite(const Limits& lim) {
  Tally t{"Witt relations"};
  for (unsigned m = 1; m <= lim.efb_m; ++m) {
    const WittBasis w = witt_basis(m);
    const auto metric = neutral_metric(m);
    const Multivector zero(metric);
    const Multivector one = Multivector::scalar(metric, 1);
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < m; ++j) {
        const auto where = [&] { return "m=" + std::to_string(m) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1); };
        t.check(w.p[i] * w.p[j] + w.p[j] * w.p[i] == zero, where);
        t.check(w.q[i] * w.q[j] + w.q[j] * w.q[i] == zero, where);
        t.check(w.p[i] * w.q[j] + w.q[j] * w.p[i] == (i == j ? one : zero), where);
      }
    }
  }
  return t.r;
}

SuiteResult eigen_suite(const Limits& lim) {
  Tally t{"omega eigenvectors"};
  for (unsigned m = 1; m <= lim.efb_m; ++m) {
    const std::uint32_t dim = std::uint32_t{1} << m;
    for (std::uint32_t a = 0; a < dim; ++a) {
      for (std::uint32_t b = 0; b < dim; ++b) {
        const EFBElement e = efb_element(a, b, m);
        const ChiralityRecord ch = signatures(e).chirality;
        bool ok = false;
        try {
          const auto [right, left] = omega_eigen_check(e);
          ok = right == ch.h_hat && left == ch.h_hat * ch.g_hat;
        } catch (const std::logic_error&) {
          ok = false;
        }
        t.check(ok, [&] { return e.to_string(); });
      }
    }
  }
  return t.r;
}

SuiteResult sign_oracle_suite(const Limits& lim) {
  Tally t{"sign_s vs normal ordering"};
  for (unsigned m = 1; m <= lim.efb_m; ++m) {
    const std::uint32_t dim = std::uint32_t{1} << m;
    for (std::uint32_t a = 0; a < dim; ++a)
      for (std::uint32_t b = 0; b < dim; ++b)
        for (std::uint32_t d = 0; d < dim; ++d) {
          auto word = letters(efb_element(a, b, m));
          const auto right = letters(efb_element(b, d, m));
          word.insert(word.end(), right.begin(), right.end());
          const auto normal = normal_order(word, m);
          const bool ok = normal && index_of(*normal) == EFBIndex{a, d, m} && normal->sign == sign_s(a, b, d, m);
          t.check(ok, [&] { return "m=" + std::to_string(m) + " (a,b,d)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")"; });
        }
  }
  return t.r;
}

SuiteResult cocycle_suite(const Limits& lim) {
  Tally t{"sign cocycle and matrix units"};
  for (unsigned m = 1; m <= lim.cocycle_m; ++m) {
    const std::uint32_t dim = std::uint32_t{1} << m;
    const auto units = matrix_unit_normalization(m);
    const auto unit = [&](std::uint32_t a, std::uint32_t b) { return units[static_cast<std::size_t>(a) * dim + b]; };
    for (std::uint32_t a = 0; a < dim; ++a)
      for (std::uint32_t b = 0; b < dim; ++b)
        for (std::uint32_t d = 0; d < dim; ++d)
          for (std::uint32_t e = 0; e < dim; ++e) {
            const auto where = [&] { return "m=" + std::to_string(m) + " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + "," + std::to_string(e) + ")"; };
            t.check(sign_s(a, b, d, m) * sign_s(a, d, e, m) == sign_s(b, d, e, m) * sign_s(a, b, e, m), where);
            // E_ab E_bd = n(a,b) n(b,d) s(a,b,d) Psi_ad must equal E_ad
            if (e == 0) t.check(unit(a, b) * unit(b, d) * sign_s(a, b, d, m) == unit(a, d), where);
          }
  }
  return t.r;
}

SuiteResult equivalence_suite(const Limits& lim) {
  Tally t{"EFB product vs blade oracle"};
  std::mt19937_64 rng(0x5eed1234);
  for (unsigned m = 1; m <= lim.equiv_m; ++m) {
    const auto metric = neutral_metric(m);
    for (unsigned trial = 0; trial < lim.equiv_pairs; ++trial) {
      const Multivector x = random_multivector(metric, rng);
      const Multivector y = random_multivector(metric, rng);
      const ExactEFB fast = efb_product(blades_to_efb(x, m), blades_to_efb(y, m));
      t.check(fast == blades_to_efb(x * y, m) && efb_to_blades(fast) == x * y,
              [&] { return "m=" + std::to_string(m) + " trial " + std::to_string(trial); });
    }
  }
  return t.r;
}

SuiteResult formula_suite(const Limits& lim) {
  Tally t{"closed forms vs blade products"};
  for (unsigned k = 0; k <= lim.signature; ++k)
    for (unsigned l = 0; l <= lim.signature; ++l) {
      const auto where = [&] { return "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")"; };
      const Metric metric = Metric::block(k, l);
      t.check(omega_squared(k, l) == omega_squared_oracle(metric), where);
      t.check(omega_squared(k, l) == sign_bit(mod8(metric.nu()), 1), where);
      if ((k + l) % 2 == 0) {
        t.check(tau_squared(k, l) == tau_squared_oracle(k, l), where);
        t.check(omega_tau_squared(k, l) == omega_tau_squared_oracle(k, l), where);
      }
    }
  return t.r;
}

SuiteResult n_recovery_suite(const Limits& lim) {
  Tally t{"n mod 8 recovery and (a,b,c)"};
  for (unsigned k = 0; k <= lim.signature; ++k)
    for (unsigned l = 0; l <= lim.signature; ++l) {
      if ((k + l) % 2 != 0) continue;
      const auto where = [&] { return "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")"; };
      const int n8 = static_cast<int>((k + l) % 8);
      const int nu8 = mod8(static_cast<std::int64_t>(k) - l);
      t.check(recover_n_bits(nu8, tau_squared(k, l), omega_tau_squared(k, l)) == n8, where);
      const AutomorphismBits v = varlamov_bits(k, l);
      // a = (omega tau)^2 = _1n tau^2; the bare _1n form holds only where tau^2 = +1
      const SignBit b = sign_bit(nu8, 2) * sign_bit(n8, 2);
      t.check(v.a == sign_bit(n8, 1) * b && v.b == b && v.c == sign_bit(nu8, 1), where);
      const AlgebraClass c = classify(k, l);
      const PartialSignature ps = recover_signature_partial(c.is_central, c.base, v);
      t.check(ps == PartialSignature{n8, nu8, static_cast<int>(k % 4), static_cast<int>(l % 4)}, where);
    }
  return t.r;
}

SuiteResult center_suite(const Limits& lim) {
  Tally t{"centrality of omega"};
  for (unsigned k = 0; k <= lim.center; ++k)
    for (unsigned l = 0; l <= lim.center; ++l) {
      const bool central_omega = center_check(Metric::block(k, l));
      t.check(central_omega == ((k + l) % 2 == 1) && classify(k, l).is_central == !central_omega,
              [&] { return "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
    }
  return t.r;
}

SuiteResult involution_suite(const Limits& lim) {
  Tally t{"inner involutions omega, tau"};
  for (unsigned k = 0; k <= lim.involution; ++k)
    for (unsigned l = 0; l <= lim.involution; ++l)
      if ((k + l) % 2 == 0)
        t.check(check_inner_involutions(k, l).all(), [&] { return "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
  return t.r;
}

SuiteResult counts_suite(const Limits& lim) {
  Tally t{"operation counts ratio 2^m"};
  std::mt19937_64 rng(77);
  for (unsigned m = 1; m <= lim.counts_m; ++m) {
    const auto metric = neutral_metric(m);
    OpCounts blade_counts;
    OpCounts efb_counts;
    mv_mul(random_multivector(metric, rng, 1.0), random_multivector(metric, rng, 1.0), &blade_counts);
    efb_product(random_dense_efb(m, rng), random_dense_efb(m, rng), &efb_counts);
    t.check(blade_counts.multiplies == efb_counts.multiplies << m,
            [&] { return "m=" + std::to_string(m) + ": " + std::to_string(blade_counts.multiplies) + " vs " + std::to_string(efb_counts.multiplies); });
  }
  return t.r;
}

}  // namespace

std::vector<SuiteResult> run_verification(VerifyLevel level) {
  const Limits lim = level == VerifyLevel::Quick ? Limits{256, 8, 3, 2, 2, 10, 6, 4, 4, 3}
                                                 : Limits{4096, 12, 4, 3, 4, 100, 16, 12, 8, 5};
  const std::vector<std::function<SuiteResult()>> suites = {
      [] { return table_suite(); },
      [&] { return lucas_suite(lim); },
      [&] { return witt_suite(lim); },
      [&] { return eigen_suite(lim); },
      [&] { return sign_oracle_suite(lim); },
      [&] { return cocycle_suite(lim); },
      [&] { return equivalence_suite(lim); },
      [&] { return formula_suite(lim); },
      [&] { return n_recovery_suite(lim); },
      [&] { return center_suite(lim); },
      [&] { return involution_suite(lim); },
      [&] { return counts_suite(lim); },
  };
  const auto timed = [](const std::function<SuiteResult()>& f) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  std::vector<SuiteResult> results;
  if (level == VerifyLevel::Quick) {
    for (const auto& s : suites) results.push_back(timed(s));
    return results;
  }
  std::vector<std::future<SuiteResult>> pending;
  for (const auto& s : suites) pending.push_back(std::async(std::launch::async, timed, s));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace clbits
