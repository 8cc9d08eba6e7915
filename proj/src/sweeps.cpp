#include "mateq/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "mateq/cline.hpp"
#include "mateq/gen_inverse.hpp"
#include "mateq/generator.hpp"
#include "mateq/kcomm.hpp"
#include "mateq/penrose.hpp"

namespace mateq {
namespace {

constexpr std::size_t kMaxStoredFailures = 20;

template <typename Body>
SweepReport timed_sweep(const std::string& name, Body&& body) {
  SweepReport report;
  report.name = name;
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void sort_canonical(std::vector<Matrix>& matrices) {
  std::sort(matrices.begin(), matrices.end(),
            [](const Matrix& a, const Matrix& b) { return a.compare(b) < 0; });
}

void dedupe_sorted(std::vector<Matrix>& matrices) {
  matrices.erase(std::unique(matrices.begin(), matrices.end()), matrices.end());
}

bool sorted_member(const std::vector<Matrix>& sorted, const Matrix& x) {
  const auto it = std::lower_bound(
      sorted.begin(), sorted.end(), x,
      [](const Matrix& a, const Matrix& b) { return a.compare(b) < 0; });
  return it != sorted.end() && *it == x;
}

/// Run one instance body, converting any stray exception into a failure so a
/// sweep never aborts half way.
template <typename Body>
void guarded(SweepReport& report, const std::string& where, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.fail(where + ": unexpected error: " + e.what());
  }
}

}  // namespace

void SweepReport::count(const std::string& key, long long delta) {
  for (auto& [name, value] : counters) {
    if (name == key) {
      value += delta;
      return;
    }
  }
  counters.emplace_back(key, delta);
}

void SweepReport::fail(const std::string& detail) {
  pass = false;
  count("failures");
  if (failures.size() < kMaxStoredFailures) failures.push_back(detail);
}

std::string SweepReport::to_line() const {
  std::string line = pass ? "PASS " : "FAIL ";
  line += name;
  for (const auto& [key, value] : counters) {
    line += " " + key + "=" + std::to_string(value);
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), " (%.2fs)", seconds);
  return line + buffer;
}

std::vector<Matrix> all_matrices(std::size_t rows, std::size_t cols, const FieldSpec& field,
                                 std::size_t cap) {
  if (!field.is_prime_field()) {
    throw Error(ErrorCode::NotEnumerable, "cannot enumerate matrices over the rationals");
  }
  const std::size_t cells = rows * cols;
  BigInt total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    total *= field.p;
    if (total > cap) {
      throw Error(ErrorCode::CapExceeded,
                  "matrix enumeration exceeds cap " + std::to_string(cap));
    }
  }
  const auto count = total.convert_to<std::size_t>();

  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    Matrix m(rows, cols, field);
    std::size_t rem = t;
    for (std::size_t cell = cells; cell-- > 0;) {
      const auto digit = static_cast<std::int64_t>(rem % static_cast<std::size_t>(field.p));
      rem /= static_cast<std::size_t>(field.p);
      m.set(cell / cols, cell % cols, Scalar::from_integer(digit, field));
    }
    out.push_back(std::move(m));
  }
  return out;
}

Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> numerator(-3, 3);
  std::uniform_int_distribution<int> denominator(1, 3);
  Matrix m(rows, cols, FieldSpec::rationals());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, Scalar::rational(numerator(rng), denominator(rng)));
    }
  }
  return m;
}

Matrix random_residue_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                             const FieldSpec& field) {
  if (!field.is_prime_field()) {
    throw Error(ErrorCode::ValidationError, "random residues need a prime field");
  }
  std::uniform_int_distribution<std::int64_t> entry(0, field.p - 1);
  Matrix m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, Scalar::from_integer(entry(rng), field));
    }
  }
  return m;
}

SweepReport sweep_cline_exhaustive_gf2(unsigned m, unsigned n) {
  const std::string name =
      "cline-gf2-m" + std::to_string(m) + "n" + std::to_string(n);
  return timed_sweep(name, [&](SweepReport& rep) {
    const FieldSpec f2 = FieldSpec::gf(2);
    const std::vector<Matrix> all = all_matrices(2, 2, f2);

    for (const Matrix& a : all) {
      for (const Matrix& b : all) {
        for (const Matrix& c : all) {
          const std::string where = "A=" + a.to_string() + " B=" + b.to_string() +
                                    " C=" + c.to_string();
          guarded(rep, where, [&] {
            rep.count("instances");
            const ClineProblem prob{a, b, c, m, n};
            const ClineContext ctx = cline_context(prob, std::nullopt, std::nullopt, true);
            if (ctx.power_validated) rep.count("power_validated");

            const ConsistencyReport verdict = cline_consistent(ctx, prob);
            const AffineSolutionSet oracle = solve_linear_system(cline_system(prob));

            std::vector<Matrix> brute;
            for (const Matrix& x : all) {
              if (ctx.am * x * ctx.bn == c) brute.push_back(x);
            }

            if (verdict.consistent != oracle.consistent ||
                oracle.consistent != !brute.empty()) {
              rep.fail("verdict disagreement (closed-form vs oracle vs brute) at " + where);
              return;
            }
            if (!verdict.consistent) return;
            rep.count("consistent");

            const AffineGenerator f = cline_f_generator(ctx, prob);
            if (!is_reproductive(f).reproductive) {
              rep.fail("canonical generator not reproductive at " + where);
            }
            const AffineSolutionSet image = image_of(f);
            if (!sets_equal(image, oracle)) {
              rep.fail("generator image differs from oracle set at " + where);
            }

            std::vector<Matrix> applied;
            applied.reserve(all.size());
            for (const Matrix& y : all) applied.push_back(apply(f, y));
            sort_canonical(applied);
            dedupe_sorted(applied);

            std::vector<Matrix> listed = enumerate_solutions(oracle);
            sort_canonical(listed);
            sort_canonical(brute);

            if (applied != listed || listed != brute) {
              rep.fail("enumerated solution lists differ at " + where);
            }
          });
        }
      }
    }
  });
}

SweepReport sweep_penrose_exhaustive_gf2() {
  return timed_sweep("penrose-gf2-m1n1", [](SweepReport& rep) {
    const FieldSpec f2 = FieldSpec::gf(2);
    const std::vector<Matrix> all = all_matrices(2, 2, f2);

    for (const Matrix& a : all) {
      for (const Matrix& b : all) {
        for (const Matrix& d : all) {
          for (const Matrix& e : all) {
            const std::string where = "A=" + a.to_string() + " B=" + b.to_string() +
                                      " D=" + d.to_string() + " E=" + e.to_string();
            guarded(rep, where, [&] {
              rep.count("instances");
              const PenroseProblem prob{a, b, d, e, 1, 1};
              const PenroseContext ctx =
                  penrose_context(prob, std::nullopt, std::nullopt, true);

              const ConsistencyReport verdict = penrose_consistent(ctx, prob);
              const AffineSolutionSet oracle = solve_linear_system(penrose_system(prob));

              bool brute_consistent = false;
              for (const Matrix& x : all) {
                if (ctx.am * x == b && x * ctx.dn == e) {
                  brute_consistent = true;
                  break;
                }
              }

              if (verdict.consistent != oracle.consistent ||
                  oracle.consistent != brute_consistent) {
                rep.fail("verdict disagreement (three-clause vs oracle vs brute) at " + where);
                return;
              }
              if (!verdict.consistent) return;
              rep.count("consistent");

              if (ctx.x1_literal && *ctx.x1 != *ctx.x1_literal) {
                rep.count("alternative_reading_differs");
              }

              const AffineGenerator f = penrose_f_generator(ctx, prob);
              if (!is_reproductive(f).reproductive) {
                rep.fail("canonical generator not reproductive at " + where);
              }
              if (!sets_equal(image_of(f), oracle)) {
                rep.fail("generator image differs from oracle set at " + where);
              }
            });
          }
        }
      }
    }
  });
}

namespace {

/// Shared body for the commuting-pair sweeps: check one instance end to end
/// against brute-force enumeration of every candidate.
void check_kcomm_instance(SweepReport& rep, const Matrix& a, unsigned k,
                          const std::vector<Matrix>& candidates) {
  const std::string where = "A=" + a.to_string() + " k=" + std::to_string(k);
  guarded(rep, where, [&] {
    rep.count("instances");
    const KCommProblem prob{a, k};
    const AffineSolutionSet oracle = solve_linear_system(kcomm_system(prob));
    const Matrix ak = power(a, k);

    std::vector<Matrix> brute;
    for (const Matrix& x : candidates) {
      if (a * x * a == a && ak * x == x * ak) brute.push_back(x);
    }

    if (oracle.consistent != !brute.empty()) {
      rep.fail("oracle vs brute-force verdict disagreement at " + where);
      return;
    }
    const std::optional<KCommContext> ctx = find_kcomm_inverse(prob);
    if (ctx.has_value() != oracle.consistent) {
      rep.fail("canonical-context verdict differs from oracle at " + where);
      return;
    }
    if (k >= index_of(a)) {
      rep.count("k_at_or_above_index");
      if (!oracle.consistent) {
        rep.fail("expected consistency once the power reaches the index at " + where);
        return;
      }
    }
    if (!oracle.consistent) return;
    rep.count("consistent");

    std::vector<Matrix> listed = enumerate_solutions(oracle);
    sort_canonical(listed);
    sort_canonical(brute);
    if (listed != brute) {
      rep.fail("oracle enumeration differs from brute-force solutions at " + where);
    }

    const AffineGenerator f = kcomm_f_generator(*ctx, prob);
    if (!is_reproductive(f).reproductive) {
      rep.fail("canonical generator not reproductive at " + where);
    }
    if (!sets_equal(image_of(f), oracle)) {
      rep.fail("generator image differs from oracle set at " + where);
    }

    for (const Matrix& x0 : brute) {
      rep.count("solutions_checked");
      const KCommIdentityReport identities = kcomm_identity_report(*ctx, prob, x0);
      if (!identities.all_hold) {
        for (const auto& item : identities.items) {
          if (!item.holds) {
            rep.fail("identity \"" + item.name + "\" fails at " + where +
                     " x0=" + x0.to_string());
          }
        }
      }
    }
  });
}

}  // namespace

SweepReport sweep_kcomm_exhaustive_gf3() {
  return timed_sweep("kcomm-gf3-k123", [](SweepReport& rep) {
    const FieldSpec f3 = FieldSpec::gf(3);
    const std::vector<Matrix> all = all_matrices(2, 2, f3);
    for (unsigned k = 1; k <= 3; ++k) {
      for (const Matrix& a : all) check_kcomm_instance(rep, a, k, all);
    }
  });
}

SweepReport sweep_kcomm_random_gf2_3x3(std::uint64_t seed, std::size_t samples) {
  return timed_sweep("kcomm-gf2-3x3", [&](SweepReport& rep) {
    const FieldSpec f2 = FieldSpec::gf(2);
    const std::vector<Matrix> all = all_matrices(3, 3, f2);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const Matrix a = random_residue_matrix(rng, 3, 3, f2);
      for (unsigned k = 1; k <= 3; ++k) check_kcomm_instance(rep, a, k, all);
    }
  });
}

namespace {

/// First candidate anchor that differs from the canonical one: the oracle's
/// particular solution, then one or two steps along the first basis direction.
/// Positive-dimensional sets over the rationals always yield one.
std::optional<Matrix> distinct_anchor(const AffineSolutionSet& set, const Matrix& canonical) {
  if (!set.consistent) return std::nullopt;
  if (*set.particular != canonical) return *set.particular;
  for (int t = 1; t <= 2 && !set.basis.empty(); ++t) {
    const Matrix candidate =
        *set.particular + set.basis.front().scaled(Scalar::from_integer(t, set.field));
    if (candidate != canonical) return candidate;
  }
  return std::nullopt;
}

}  // namespace

SweepReport sweep_random_rational_families(std::uint64_t seed, std::size_t per_family) {
  return timed_sweep("rational-families", [&](SweepReport& rep) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_pick(2, 3);
    std::uniform_int_distribution<int> coin(0, 1);

    // Random rational matrices are usually invertible, which makes the
    // solution sets zero-dimensional; zeroing the last row and column of half
    // the coefficient matrices forces rank deficiency so the anchored
    // (non-canonical) direction of the equivalence gets real exercise.
    const auto coefficient = [&](std::size_t n) {
      Matrix a = random_rational_matrix(rng, n, n);
      if (coin(rng) == 0) {
        for (std::size_t j = 0; j < n; ++j) a.set(n - 1, j, Scalar::zero(a.field()));
        for (std::size_t i = 0; i < n; ++i) a.set(i, n - 1, Scalar::zero(a.field()));
      }
      return a;
    };

    const auto check_anchors = [&rep](const std::string& where, const AffineGenerator& f,
                                      const AffineSolutionSet& oracle,
                                      const std::function<AffineGenerator(const Matrix&)>&
                                          anchored) {
      const Matrix canonical = f.constant;
      if (!is_reproductive(f).reproductive) {
        rep.fail("canonical generator not reproductive at " + where);
      }
      if (!sets_equal(image_of(f), oracle)) {
        rep.fail("generator image differs from oracle set at " + where);
      }
      if (!is_reproductive(anchored(canonical)).reproductive) {
        rep.fail("generator anchored at the canonical solution not reproductive at " + where);
      }
      if (const std::optional<Matrix> alt = distinct_anchor(oracle, canonical)) {
        rep.count("distinct_anchors");
        const AffineGenerator g = anchored(*alt);
        const ReproVerdict verdict = is_reproductive(g);
        if (verdict.reproductive) {
          rep.fail("generator anchored away from the canonical solution is reproductive at " +
                   where);
        }
        if (verdict.defect != *alt - canonical) {
          rep.fail("anchored defect is not anchor minus canonical at " + where);
        }
      }
    };

    for (std::size_t i = 0; i < per_family; ++i) {
      guarded(rep, "two-sided #" + std::to_string(i), [&] {
        rep.count("two_sided_instances");
        const std::size_t p = size_pick(rng), q = size_pick(rng);
        const Matrix a = coefficient(p);
        const Matrix b = coefficient(q);
        const Matrix planted = random_rational_matrix(rng, p, q);
        const auto m = static_cast<unsigned>(std::max<std::size_t>(1, index_of(a)));
        const auto n = static_cast<unsigned>(std::max<std::size_t>(1, index_of(b)));
        const ClineProblem prob{a, b, power(a, m) * planted * power(b, n), m, n};
        const ClineContext ctx = cline_context(prob);
        if (!cline_consistent(ctx, prob).consistent) {
          rep.fail("planted two-sided instance reported inconsistent");
          return;
        }
        const AffineSolutionSet oracle = solve_linear_system(cline_system(prob));
        check_anchors("two-sided #" + std::to_string(i), cline_f_generator(ctx, prob), oracle,
                      [&](const Matrix& x0) { return cline_g_generator(ctx, prob, x0); });
      });

      guarded(rep, "pair #" + std::to_string(i), [&] {
        rep.count("pair_instances");
        const std::size_t p = size_pick(rng), q = size_pick(rng);
        const Matrix a = coefficient(p);
        const Matrix d = coefficient(q);
        const Matrix planted = random_rational_matrix(rng, p, q);
        const auto m = static_cast<unsigned>(std::max<std::size_t>(1, index_of(a)));
        const auto n = static_cast<unsigned>(std::max<std::size_t>(1, index_of(d)));
        const PenroseProblem prob{a, power(a, m) * planted, d, planted * power(d, n), m, n};
        const PenroseContext ctx = penrose_context(prob);
        if (!penrose_consistent(ctx, prob).consistent) {
          rep.fail("planted pair instance reported inconsistent");
          return;
        }
        const AffineSolutionSet oracle = solve_linear_system(penrose_system(prob));
        check_anchors("pair #" + std::to_string(i), penrose_f_generator(ctx, prob), oracle,
                      [&](const Matrix& x0) { return penrose_g_generator(ctx, prob, x0); });
      });

      guarded(rep, "commuting #" + std::to_string(i), [&] {
        rep.count("commuting_instances");
        const std::size_t p = size_pick(rng);
        const Matrix a = coefficient(p);
        const auto k = static_cast<unsigned>(std::max<std::size_t>(1, index_of(a)));
        const KCommProblem prob{a, k};
        const std::optional<KCommContext> ctx = find_kcomm_inverse(prob);
        if (!ctx) {
          rep.fail("commuting pair inconsistent although the power reaches the index");
          return;
        }
        const AffineSolutionSet oracle = solve_linear_system(kcomm_system(prob));
        check_anchors("commuting #" + std::to_string(i), kcomm_f_generator(*ctx, prob), oracle,
                      [&](const Matrix& x0) { return kcomm_g_generator(*ctx, prob, x0); });
      });
    }
  });
}

SweepReport sweep_cline_anchor_witness_gf2() {
  return timed_sweep("cline-anchor-witness-gf2", [](SweepReport& rep) {
    const FieldSpec f2 = FieldSpec::gf(2);
    const std::vector<Matrix> all = all_matrices(2, 2, f2);
    long long witnesses = 0;

    for (const Matrix& a : all) {
      for (const Matrix& b : all) {
        std::vector<Matrix> ga_list, gb_list;
        for (const Matrix& c : all) {
          const std::string where = "A=" + a.to_string() + " B=" + b.to_string() +
                                    " C=" + c.to_string();
          guarded(rep, where, [&] {
            const ClineProblem prob{a, b, c, 1, 1};
            const ClineContext ctx = cline_context(prob, std::nullopt, std::nullopt, true);
            if (!cline_consistent(ctx, prob).consistent) return;
            rep.count("consistent_instances");

            if (ga_list.empty()) {
              ga_list = enumerate_solutions(all_one_inverses(a));
              gb_list = enumerate_solutions(all_one_inverses(b));
            }
            std::vector<Matrix> products;
            products.reserve(ga_list.size() * gb_list.size());
            for (const Matrix& ga : ga_list) {
              for (const Matrix& gb : gb_list) products.push_back(ga * c * gb);
            }
            sort_canonical(products);
            dedupe_sorted(products);

            for (const Matrix& x0 : enumerate_solutions(solve_linear_system(cline_system(prob)))) {
              if (!sorted_member(products, x0)) {
                ++witnesses;
                if (witnesses <= 3) {
                  rep.notes.push_back("witness: " + where + " x0=" + x0.to_string() +
                                      " solves the equation but is no inverse product");
                }
              }
            }
          });
        }
      }
    }
    rep.count("witnesses", witnesses);
    if (witnesses == 0) {
      rep.fail("no solution outside the inverse-product family was found");
    }
  });
}

SweepReport sweep_primitive_cross_checks(std::uint64_t seed, std::size_t samples) {
  return timed_sweep("primitive-cross-checks", [&](SweepReport& rep) {
    std::mt19937_64 rng(seed);
    const FieldSpec fields[3] = {FieldSpec::rationals(), FieldSpec::gf(3), FieldSpec::gf(2)};
    std::uniform_int_distribution<std::size_t> rows_pick(1, 4), cols_pick(1, 5);

    for (std::size_t i = 0; i < samples; ++i) {
      guarded(rep, "inner-inverse #" + std::to_string(i), [&] {
        rep.count("inner_inverse_checks");
        const FieldSpec& field = fields[i % 3];
        const std::size_t r = rows_pick(rng), c = cols_pick(rng);
        const Matrix a = field.is_prime_field() ? random_residue_matrix(rng, r, c, field)
                                                : random_rational_matrix(rng, r, c);
        const OneInverseCertificate cert = one_inverse(a);
        if (!is_one_inverse(a, cert.g)) {
          rep.fail("canonical inner inverse fails its identity");
          return;
        }
        if (cert.input_rank != rank(a)) {
          rep.fail("certificate rank differs from input rank");
        }
        if (!contains(all_one_inverses(a), cert.g)) {
          rep.fail("canonical inner inverse is outside the full solution set");
        }
      });
    }

    for (std::size_t i = 0; i < samples; ++i) {
      guarded(rep, "index #" + std::to_string(i), [&] {
        rep.count("index_checks");
        const FieldSpec& field = fields[i % 3];
        const Matrix a = field.is_prime_field() ? random_residue_matrix(rng, 4, 4, field)
                                                : random_rational_matrix(rng, 4, 4);

        // Independent naive route: ranks of freshly recomputed powers, rank
        // as columns minus nullity.
        std::vector<std::size_t> ranks;
        for (unsigned j = 0; j <= 5; ++j) {
          Matrix pj = Matrix::identity(4, field);
          for (unsigned step = 0; step < j; ++step) pj = pj * a;
          ranks.push_back(pj.cols() - nullspace_basis(pj).size());
        }
        std::size_t naive = 0;
        while (naive + 1 < ranks.size() && ranks[naive] != ranks[naive + 1]) ++naive;

        if (index_of(a) != naive) {
          rep.fail("index disagrees with the naive rank-stabilization loop at A=" +
                   a.to_string());
        }
      });
    }
  });
}

}  // namespace mateq
