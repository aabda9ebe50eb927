#pragma once

// Invariant suite behind `liouville selftest`. Each check is exact; a failed
// check is reported by name and makes the suite fail.

#include "bott.hpp"
#include "cech.hpp"
#include "killing.hpp"
#include "poly.hpp"
#include "reconf.hpp"
#include "weights.hpp"
#include "young_map.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace liouville {

struct SelftestCheck {
    std::string name;
    std::function<bool()> run;
};

inline std::vector<SelftestCheck> selftest_checks() {
    std::vector<SelftestCheck> checks;
    checks.push_back({"weights: weyl_dim of S^d and Lambda^p match binomials", [] {
                          for (int n = 1; n <= 6; ++n) {
                              for (int d = 0; d <= 10; ++d)
                                  if (weyl_dim(Weight::padded({d}, n)) != binomial(n + d - 1, d)) return false;
                              for (int p = 0; p <= n; ++p)
                                  if (weyl_dim(Weight::column(p, n)) != binomial(n, p)) return false;
                          }
                          return true;
                      }});
    checks.push_back({"weights: Pieri dimension identity", [] {
                          for (int n = 2; n <= 5; ++n)
                              for (int d = 0; d <= 6; ++d)
                                  for (int k = 1; k <= 3; ++k) {
                                      const Weight l = Weight::padded({d, d / 2}, n);
                                      if (weyl_dim(l) * weyl_dim(Weight::padded({k}, n)) != dim(pieri_sym(l, k)))
                                          return false;
                                  }
                          return true;
                      }});
    checks.push_back({"bott: S^d(G)(+-1) on P(M) match the eight-row table", [] {
                          for (int n = 3; n <= 6; ++n)
                              for (int d = 0; d <= 10; ++d) {
                                  const auto N = static_cast<std::size_t>(n);
                                  const auto minus = sdg_cohomology_on_P(n, d, -1);
                                  const auto plus = sdg_cohomology_on_P(n, d, +1);
                                  if (d == 0 ? !minus.is_zero() : minus.dim(1) != dim_sym(n, d - 1) || minus.groups().size() != 1)
                                      return false;
                                  Integer expect_h0 = d == 0 ? Integer(n) : d == 1 ? binomial(n, 2) : Integer(0);
                                  Integer expect_h1 = d >= 3 ? weyl_dim(Weight::padded({d - 1, 2}, N)) : Integer(0);
                                  if (plus.dim(0) != expect_h0 || plus.dim(1) != expect_h1 || plus.top_degree() > 1) return false;
                              }
                          return true;
                      }});
    checks.push_back({"bott: quadric cohomology has the Euler characteristic of the sequence", [] {
                          for (int n = 3; n <= 5; ++n)
                              for (int d = 0; d <= 10; ++d) {
                                  const auto q = les_restriction_to_Q(n, d);
                                  if (q.euler_characteristic() != sdg_cohomology_on_P(n, d, 1).euler_characteristic() -
                                                                      sdg_cohomology_on_P(n, d, -1).euler_characteristic())
                                      return false;
                              }
                          return true;
                      }});
    checks.push_back({"polyspaces: harmonic decomposition of S^d", [] {
                          for (int n = 1; n <= 4; ++n) {
                              const auto q = QuadraticForm::standard(n);
                              for (int d = 0; d <= 6; ++d) {
                                  Integer s = 0;
                                  for (int k = 0; 2 * k <= d; ++k) s += harmonic_dim(n, d - 2 * k, q);
                                  if (s != dim_sym(n, d)) return false;
                              }
                          }
                          return true;
                      }});
    checks.push_back({"young_map: y_{d,q} injective for n = 3, 4 and d = 2..4", [] {
                          for (int n = 3; n <= 4; ++n)
                              for (int d = 2; d <= 4; ++d)
                                  if (kernel_cokernel_dims(n, d).ker != 0) return false;
                          return true;
                      }});
    checks.push_back({"young_map: n = 2 kernel has dimension 2, cokernel 0", [] {
                          for (int d = 2; d <= 6; ++d) {
                              const auto kc = kernel_cokernel_dims(2, d);
                              if (kc.ker != 2 || kc.coker != 0) return false;
                          }
                          return true;
                      }});
    checks.push_back({"cech: ranks agree with the closed form, n <= 3, |m_i| <= 2", [] {
                          for (int n = 1; n <= 3; ++n) punctured_affine_table(n, 2);
                          return true;
                      }});
    checks.push_back({"killing: conformal Killing dimensions per degree", [] {
                          for (int d = 0; d <= 4; ++d)
                              if (ck_kernel(2, d).size() != 2) return false;
                          for (int n = 3; n <= 4; ++n) {
                              const std::size_t expect[] = {std::size_t(n), std::size_t(n * (n - 1) / 2 + 1), std::size_t(n), 0};
                              for (int d = 0; d <= 3; ++d)
                                  if (ck_kernel(n, d).size() != expect[d]) return false;
                          }
                          return true;
                      }});
    checks.push_back({"killing: conformal algebra is so(n+2), n = 3, 4", [] {
                          return so_np2_isomorphism(3).ok() && so_np2_isomorphism(4).ok();
                      }});
    checks.push_back({"reconf: H^0 total and H^1 cokernels, n = 3, 4", [] {
                          for (int n = 3; n <= 4; ++n) {
                              const auto t = reconf_table(n, 6);
                              if (t.h0_total != expected_h0_total(n)) return false;
                              for (const auto& row : t.rows) {
                                  const Integer expect = row.d >= 3 ? weyl_dim(Weight::padded({row.d - 1, 2}, n)) -
                                                                          dim_sym(n, row.d - 1)
                                                                    : Integer(0);
                                  if (row.h1() != expect) return false;
                              }
                          }
                          return true;
                      }});
    return checks;
}

/// Runs every check, printing one line each; true when all pass.
inline bool run_selftest(std::ostream& os) {
    bool all = true;
    for (const auto& check : selftest_checks()) {
        bool ok = false;
        std::string detail;
        try {
            ok = check.run();
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        os << (ok ? "PASS " : "FAIL ") << check.name << detail << '\n';
        all = all && ok;
    }
    return all;
}

} // namespace liouville
