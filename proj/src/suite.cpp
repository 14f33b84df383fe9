#include "slicelab/suite.hpp"

#include <algorithm>
#include <numeric>

#include "slicelab/applications.hpp"
#include "slicelab/cayley.hpp"
#include "slicelab/deg1.hpp"
#include "slicelab/goodslices.hpp"
#include "slicelab/slices.hpp"
#include "slicelab/walk.hpp"

namespace slicelab {

namespace {

constexpr std::size_t kMaxFailures = 8;

std::string instance(std::initializer_list<std::pair<const char*, std::int64_t>> params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += std::string(key) + "=" + std::to_string(value);
  }
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + v.str();
  return out;
}

// Random polynomial of degree <= d with each monomial present with
// probability 1/2 and a uniform nonzero coefficient; redrawn until it is
// nonzero somewhere on slice k.
MultilinearPoly random_poly(int n, int k, int d, const GroupSpec& spec, Rng& rng) {
  const auto monomials = monomials_up_to(n, d);
  for (;;) {
    MultilinearPoly p(n, spec);
    for (Mask m : monomials) {
      if (!rng.bit()) continue;
      p.set_coeff(m, spec.element(1 + rng.below(spec.order() - 1)));
    }
    if (!is_zero_on_slice(p, k)) return p;
  }
}

RationalPoly random_rational_poly(int n, int k, int d, Rng& rng) {
  const auto monomials = monomials_up_to(n, d);
  const auto points = enumerate_slice(n, k);
  for (;;) {
    RationalPoly p(n);
    for (Mask m : monomials) {
      if (!rng.bit()) continue;
      auto c = static_cast<long>(rng.below(7)) - 3;
      if (c != 0) p.add_term(m, Rational(c));
    }
    if (std::any_of(points.begin(), points.end(), [&](const SlicePoint& x) { return !evaluate(p, x).is_zero(); })) {
      return p;
    }
  }
}

std::vector<bool> nonzero_members(const SliceFunction& f) {
  std::vector<bool> member(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) member[i] = f.values[i] != 0;
  return member;
}

std::vector<bool> nonzero_members(const WalkMatrix& w, const MultilinearPoly& p) {
  std::vector<bool> member(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) member[i] = !evaluate(p, SlicePoint{w.n(), w.points()[i]}).is_zero();
  return member;
}

std::vector<std::uint32_t> evaluation_vector(const MultilinearPoly& p, int k) {
  std::vector<std::uint32_t> out;
  for (Mask x : slice_masks(p.n(), k)) out.push_back(static_cast<std::uint32_t>(p.spec().index(evaluate(p, SlicePoint{p.n(), x}))));
  return out;
}

std::int64_t smallest_prime_factor(std::int64_t q) {
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return f;
  }
  return q;
}

}  // namespace

void CheckResult::fail(const std::string& message) {
  passed = false;
  if (failures.size() < kMaxFailures) failures.push_back(message);
}

CheckResult check_gamma_golden() {
  CheckResult r{"gamma_golden"};
  SlicePoint u = SlicePoint::parse("10101010");
  Matching m = Matching::from_edges(u, {{2, 3}, {6, 1}, {4, 5}, {8, 7}});
  SlicePoint v = gamma_map(u, m, SlicePoint::parse("0110").bits);
  r.instances = 1;
  r.fact("gamma", v.str());
  if (v.str() != "00110110") r.fail("gamma_map gave " + v.str());
  return r;
}

CheckResult check_weight_oracle(const std::vector<int>& ns) {
  CheckResult r{"weight_oracle"};
  for (int n : ns) {
    auto points = enumerate_slice(n, n / 2);
    for (const auto& u : points) {
      for (const auto& v : points) {
        ++r.instances;
        if (edge_weight(u, v) != enumerated_edge_weight(u, v)) r.fail("u=" + u.str() + " v=" + v.str());
      }
    }
  }
  return r;
}

CheckResult check_walk_matrix(const std::vector<int>& ns) {
  CheckResult r{"walk_matrix"};
  for (int n : ns) {
    WalkMatrix w = build_walk_matrix(n);
    WalkInvariants inv = check_walk_invariants(w);
    ++r.instances;
    r.fact("n=" + std::to_string(n) + " diagonal", w.at(0, 0).str());
    if (!inv.symmetric) r.fail(instance({{"n", n}}) + " not symmetric");
    if (!inv.stochastic) r.fail(instance({{"n", n}}) + " row sum differs from 1");
    if (!inv.distance_dependent) r.fail(instance({{"n", n}}) + " not distance-dependent");
    if (!inv.diagonal) r.fail(instance({{"n", n}}) + " diagonal differs from 2^{-n/2}");
    if (!inv.matches_closed_form) r.fail(instance({{"n", n}}) + " entries differ from the closed form");
  }
  return r;
}

CheckResult check_spectrum(const std::vector<int>& ns) {
  CheckResult r{"spectrum"};
  for (int n : ns) {
    SpectrumReport s = spectrum(n);
    ++r.instances;
    const std::string tag = instance({{"n", n}});
    r.fact(tag + " lambda", join(s.lambdas));
    r.fact(tag + " mu", s.mu_exact.str());
    if (!s.eigenvectors_exact) r.fail(tag + " W f_t != lambda_t f_t");
    if (!s.float_matches) r.fail(tag + " float spectrum deviates from the exact multiset");
    if (!s.trace_identity) r.fail(tag + " trace identity fails");
    for (int t = 1; t <= n / 2; ++t) {
      Rational good = matching_stats(n, t).good;
      if (s.lambdas[static_cast<std::size_t>(t)] > good) {
        r.fail(instance({{"n", n}, {"t", t}}) + " lambda_t exceeds Pr[t-good]");
      }
    }
  }
  return r;
}

CheckResult check_interlacing(const std::vector<int>& ns) {
  CheckResult r{"interlacing"};
  for (int n : ns) {
    InterlacingReport rep = verify_interlacing(n);
    ++r.instances;
    const std::string tag = instance({{"n", n}});
    r.fact(tag + " cayley_second", rep.cayley_second.str());
    r.fact(tag + " cayley_min", rep.cayley_min.str());
    if (!rep.upper) r.fail(tag + " second eigenvalue above the Cayley bound");
    if (!rep.lower) r.fail(tag + " smallest eigenvalue below the Cayley minimum");
    if (!rep.mu_bound) r.fail(tag + " mu above the largest nontrivial character");
    if (!rep.induced_submatrix) r.fail(tag + " W is not the induced Cayley submatrix");
  }
  return r;
}

CheckResult check_lower_bound(int family_n, int random_n, int random_count, std::uint64_t seed) {
  CheckResult r{"lower_bound"};
  const GroupSpec z2 = GroupSpec::cyclic(2);
  if (family_n > 0) {
    WalkMatrix w = build_walk_matrix(family_n);
    for (const auto& f : distinct_functions(family_n, family_n / 2, 2, z2)) {
      ++r.instances;
      LowerBoundReport rep = verify_lower_bound(w, nonzero_members(f), f.poly.degree());
      if (!rep.holds) r.fail("n=" + std::to_string(family_n) + " P=" + f.poly.str());
    }
    r.fact("family_n", std::to_string(family_n));
  }
  if (random_n > 0 && random_count > 0) {
    WalkMatrix w = build_walk_matrix(random_n);
    Rng rng(seed);
    for (int i = 0; i < random_count; ++i) {
      MultilinearPoly p = random_poly(random_n, random_n / 2, 3, z2, rng);
      ++r.instances;
      LowerBoundReport rep = verify_lower_bound(w, nonzero_members(w, p), p.degree());
      if (!rep.holds) r.fail("n=" + std::to_string(random_n) + " P=" + p.str());
    }
    r.fact("random_n", std::to_string(random_n));
  }
  return r;
}

CheckResult check_balanced_distance(const std::vector<int>& ns, const std::vector<int>& ds) {
  CheckResult r{"balanced_distance"};
  const GroupSpec z2 = GroupSpec::cyclic(2);
  for (int n : ns) {
    for (int d : ds) {
      if (2 * d > n) continue;
      ExtremalResult e = extremal_min_fraction(n, n / 2, d, z2);
      Rational bound = suboptimal_bound(n, n / 2, d);
      ++r.instances;
      const std::string tag = instance({{"n", n}, {"d", d}});
      r.fact(tag + " min", e.min.str());
      r.fact(tag + " witness", e.witness.str());
      if (e.min < bound) r.fail(tag + " min " + e.min.str() + " below " + bound.str());
    }
  }
  return r;
}

CheckResult check_deg1(const std::vector<int>& ns, const std::vector<std::string>& groups) {
  CheckResult r{"deg1"};
  for (int n : ns) {
    for (const auto& g : groups) {
      GroupSpec spec = GroupSpec::parse(g);
      for (int k = 1; k <= n - 1; ++k) {
        Deg1Scan scan = deg1_extremal_scan(n, k, spec, ScanMode::assert_bound);
        ++r.instances;
        const std::string tag = instance({{"n", n}, {"k", k}}) + " group=" + g;
        if (!scan.holds) r.fail(tag + " min " + scan.min.str() + " below " + scan.bound.str());
        if (2 * k == n && spec == GroupSpec::cyclic(2)) {
          Rational expected = Rational(1, 2) - Rational(1) / Rational(2 * (n - 1));
          r.fact(instance({{"n", n}}) + " balanced Z2 min", scan.min.str());
          if (scan.min != expected) r.fail(tag + " balanced minimum " + scan.min.str() + " != " + expected.str());
        }
      }
    }
  }
  return r;
}

CheckResult check_good_slices(int max_k, int max_d, int shift_max_k, int shift_max_d,
                              const std::vector<std::int64_t>& primes) {
  CheckResult r{"good_slices"};
  std::uint64_t good = 0;
  for (std::int64_t p : primes) {
    for (int d = 0; d <= max_d; ++d) {
      for (int k = d; k <= max_k; ++k) {
        if (!is_good_slice(k, d, p)) continue;
        ++good;
        ++r.instances;
        for (int i = 0; i < d; ++i) {
          if (lucas_binom_mod_p(k - i, d - i, p) == 0) {
            r.fail(instance({{"k", k}, {"d", d}, {"p", p}, {"i", i}}) + " C(k-i,d-i) = 0 mod p");
          }
        }
      }
    }
    for (int d = 1; d <= shift_max_d; ++d) {
      for (int k = 3 * d; k <= shift_max_k; ++k) {
        ++r.instances;
        const std::string tag = instance({{"k", k}, {"d", d}, {"p", p}});
        try {
          std::int64_t c = find_good_shift(k, d, p);
          if (c < 0 || c > 2 * d || k - c < d || !is_good_slice(k - c, d, p)) {
            r.fail(tag + " invalid shift " + std::to_string(c));
          }
        } catch (const Error& e) {
          r.fail(tag + " " + e.what());
        }
      }
    }
  }
  r.fact("good_slices", std::to_string(good));
  return r;
}

CheckResult check_wilson(const std::vector<WilsonInstance>& instances) {
  CheckResult r{"wilson"};
  for (const auto& in : instances) {
    const GroupSpec spec = GroupSpec::cyclic(in.q);
    const std::int64_t p = smallest_prime_factor(in.q);
    const bool good = is_good_slice(in.k, in.d, p);
    const BigInt target = big_pow(in.q, static_cast<unsigned long>(binomial(in.n, in.d).get_ui()));
    const BigInt full = count_degree_d_functions(in.n, in.k, in.d, spec);
    const BigInt homogeneous = count_degree_d_functions(in.n, in.k, in.d, spec, SearchMode::homogeneous);
    ++r.instances;
    const std::string tag = instance({{"n", in.n}, {"k", in.k}, {"d", in.d}, {"q", in.q}});
    r.fact(tag + " count", full.get_str());
    r.fact(tag + " homogeneous_count", homogeneous.get_str());
    if (full < target) r.fail(tag + " fewer than q^C(n,d) functions");
    if (good && full != target) r.fail(tag + " good slice but count != q^C(n,d)");
    if ((homogeneous == target) != good) r.fail(tag + " homogeneous span disagrees with goodness");
    if (!good || in.k < in.d || in.k > in.n - in.d) continue;

    // Round trip every polynomial of degree <= d through the homogeneous basis.
    const auto monomials = monomials_up_to(in.n, in.d);
    const std::uint64_t total = big_pow(in.q, static_cast<unsigned long>(monomials.size())).get_ui();
    std::vector<std::uint32_t> digits(monomials.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      MultilinearPoly poly(in.n, spec);
      for (std::size_t j = 0; j < monomials.size(); ++j) {
        poly.set_coeff(monomials[j], spec.element(rest % static_cast<std::uint64_t>(in.q)));
        rest /= static_cast<std::uint64_t>(in.q);
      }
      MultilinearPoly rewritten(in.n, spec);
      for (const auto& [m, c] : to_homogeneous_basis(poly, in.k, in.d, p)) rewritten.set_coeff(m, c);
      if (evaluation_vector(poly, in.k) != evaluation_vector(rewritten, in.k)) {
        r.fail(tag + " round trip changes " + poly.str());
        break;
      }
    }
  }
  return r;
}

CheckResult check_restrictions(int max_n, std::uint64_t seed) {
  CheckResult r{"restrictions"};
  const GroupSpec z2 = GroupSpec::cyclic(2);
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (int d = 0; d <= k; ++d) {
        MultilinearPoly mono(n, z2);
        mono.set_coeff(full_mask(d), z2.scalar(1));
        Rational survival = restriction_survival_probability(mono, k);
        Rational exact(binomial(n - d, 2 * k - d), binomial(n, 2 * k));
        Rational floor = Rational(2 * k, n).pow(d) * (Rational(1) - Rational(d * d, 2 * k));
        ++r.instances;
        const std::string tag = instance({{"n", n}, {"k", k}, {"d", d}});
        if (survival != exact) r.fail(tag + " survival " + survival.str() + " != " + exact.str());
        if (survival < floor) r.fail(tag + " survival below (2k/n)^d (1 - d^2/2k)");
      }
    }
  }

  // Random polynomials on (deg P, p)-good slices keep the same survival floor.
  Rng rng(seed);
  for (int n = 2; n <= std::min(max_n, 8); ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (const auto& g : {GroupSpec::cyclic(2), GroupSpec::cyclic(3)}) {
        for (int i = 0; i < 3; ++i) {
          MultilinearPoly p = random_poly(n, k, std::min(k, 3), g, rng);
          const int d = p.degree();
          if (!is_good_slice(k, d, g.orders()[0])) continue;
          ++r.instances;
          Rational floor = Rational(2 * k, n).pow(d) * (Rational(1) - Rational(d * d, 2 * k));
          if (restriction_survival_probability(p, k) < floor) {
            r.fail(instance({{"n", n}, {"k", k}}) + " P=" + p.str() + " survival below (2k/n)^d (1 - d^2/2k)");
          }
        }
      }
    }
  }

  // Bad indices under the descent that fixes coordinates to 1.
  std::uint64_t in_range = 0;
  for (int n = 4; n <= std::min(max_n, 8); ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      for (int d = 1; d <= std::min({k, n - k, 3}); ++d) {
        std::vector<MultilinearPoly> polys;
        MultilinearPoly mono(n, z2);
        mono.set_coeff(full_mask(d), z2.scalar(1));
        polys.push_back(mono);
        for (const auto& g : {GroupSpec::cyclic(2), GroupSpec::cyclic(3)}) {
          for (int i = 0; i < 3; ++i) polys.push_back(random_poly(n, k, d, g, rng));
        }
        const NonrootsReport nr = check_nonroots_inequality(n, k, d);
        const std::int64_t rigorous = max_bad_indices(n, k, d);
        for (const auto& p : polys) {
          ++r.instances;
          const std::string tag = instance({{"n", n}, {"k", k}, {"d", d}}) + " P=" + p.str();
          const auto bad = bad_indices(p, k);
          const auto count = static_cast<std::int64_t>(bad.size());
          if (count > rigorous) r.fail(tag + " more bad indices than C(n-l,k) >= C(n-2d,k-d) allows");
          if (nr.in_asymptotic_range) {
            ++in_range;
            if (count > nr.ell) r.fail(tag + " more than floor(n/sqrt(k)) bad indices");
          }
          for (int s = 1; s <= n; ++s) {
            bool is_bad = std::binary_search(bad.begin(), bad.end(), s);
            if (is_bad != is_zero_on_slice(restrict(p, s, 1), k - 1)) {
              r.fail(tag + " bad index " + std::to_string(s) + " disagrees with the restriction");
            }
          }
          Descent step = fix_ones_descent(p, k, 1, rng.next());
          if (step.slice != k - 1 || !(step.poly == restrict(p, step.chosen.front(), 1))) {
            r.fail(tag + " descent step disagrees with restrict");
          }
        }
      }
    }
  }
  r.fact("bad_index_instances_in_range", std::to_string(in_range));
  return r;
}

CheckResult check_covers(int max_n, int points_per_slice, std::uint64_t seed) {
  CheckResult r{"covers"};
  Rng rng(seed);
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const int t = std::min(k, n - k);
      for (int m = 0; m < t; ++m) {
        ++r.instances;
        if (!cover_impossibility(n, k, m)) r.fail(instance({{"n", n}, {"k", k}, {"m", m}}) + " impossibility fails");
      }
      for (int i = 0; i < points_per_slice; ++i) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 1);
        rng.shuffle(labels);
        SlicePoint a{n, 0};
        for (int j = 0; j < k; ++j) a.bits |= bit_of(labels[static_cast<std::size_t>(j)]);
        for (Field field : {Field::rationals, Field::binary}) {
          auto forms = hyperplane_cover(n, k, a, field);
          ++r.instances;
          const std::string tag = instance({{"n", n}, {"k", k}}) + " a=" + a.str();
          if (static_cast<int>(forms.size()) != t) r.fail(tag + " cover has the wrong size");
          if (!verify_cover(n, k, a, forms)) r.fail(tag + " cover fails");
        }
      }
    }
  }
  return r;
}

CheckResult check_influence(const std::vector<int>& ns, int family_n) {
  CheckResult r{"influence"};
  const GroupSpec z2 = GroupSpec::cyclic(2);
  for (int n : ns) {
    const int k = n / 2;
    const bool family = n == family_n;
    const Rational floor = extremal_min_fraction(n, k, 2, z2).min;
    if (family) r.fact(instance({{"n", n}}) + " floor", floor.str());
    for (const auto& f : distinct_functions(n, k, 2, z2)) {
      ++r.instances;
      const std::string tag = instance({{"n", n}}) + " f=" + f.poly.str();
      InfluenceBoundReport rep = influence_lower_bound_check(f.poly, 2, k, floor);
      if (!rep.matches_difference) r.fail(tag + " disagreement count differs from the difference polynomial");
      if (!family) continue;
      if (!rep.holds) r.fail(tag + " influence below floor / 4");
      const int d = f.poly.degree();
      if (!total_influence_degree_check(f.poly, d, k).holds) r.fail(tag + " total influence above degree");
    }
    Rng rng(static_cast<std::uint64_t>(n));
    for (int i = 0; i < 20; ++i) {
      RationalPoly p = random_rational_poly(n, k, 2, rng);
      ++r.instances;
      const std::string tag = instance({{"n", n}}) + " f=" + p.str();
      InfluenceBoundReport rep = influence_lower_bound_check(p, 2, k);
      if (!rep.matches_difference) r.fail(tag + " disagreement count differs from the difference polynomial");
      if (!rep.holds) r.fail(tag + " influence below floor / 4");
    }
  }
  return r;
}

std::vector<CheckResult> run_suite(int max_n, std::uint64_t seed) {
  if (max_n < 2) throw Error("verify-all: --max-n must be at least 2");
  auto capped = [&](std::vector<int> ns) {
    ns.erase(std::remove_if(ns.begin(), ns.end(), [&](int n) { return n > max_n; }), ns.end());
    return ns;
  };
  std::vector<CheckResult> out;
  out.push_back(check_gamma_golden());
  out.push_back(check_weight_oracle(capped({2, 4, 6})));
  out.push_back(check_walk_matrix(capped({4, 6, 8, 10, 12})));
  out.push_back(check_spectrum(capped({4, 6, 8, 10})));
  out.push_back(check_interlacing(capped({4, 6, 8})));
  out.push_back(check_lower_bound(max_n >= 6 ? 6 : 0, max_n >= 8 ? 8 : 0, 100, seed));
  out.push_back(check_balanced_distance(capped({4, 6}), {1, 2}));
  out.push_back(check_deg1(capped({8, 10, 12}), {"Z2", "Z3", "Z4", "Z5", "Z2xZ2"}));
  out.push_back(check_good_slices(512, 16, 200, 8, {2, 3, 5, 7}));
  std::vector<WilsonInstance> wilson;
  for (WilsonInstance in : {WilsonInstance{4, 1, 1, 2}, {5, 1, 1, 2}, {4, 2, 2, 2}, {5, 2, 1, 3}, {4, 2, 1, 2}, {4, 2, 1, 4}}) {
    if (in.n <= max_n) wilson.push_back(in);
  }
  out.push_back(check_wilson(wilson));
  out.push_back(check_restrictions(std::min(max_n, 10), seed));
  out.push_back(check_covers(std::min(max_n, 12), 20, seed));
  out.push_back(check_influence(capped({4, 6}), 6));
  return out;
}

}  // namespace slicelab
