#include "dieout/nullspace.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dieout {

namespace {

std::vector<int> support_of(const RatVec& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back((int)i);
  return s;
}

bool is_left_null(const SystemSpec& spec, const RatVec& nu) {
  for (int j = 0; j < spec.dprime; ++j) {
    Rational acc = 0;
    for (int i = 0; i < spec.d; ++i) acc += nu[i] * spec.S[i][j];
    if (acc != 0) return false;
  }
  return true;
}

// C(n, k) clamped at `cap` + 1 to keep the count overflow-free.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (std::uint64_t)(n - k + i) / (std::uint64_t)i;
  }
  return std::min(r, cap + 1);
}

// All size-s subsets of {0..n-1}, flattened (count * s indices).
std::vector<int> combinations_flat(int n, int s) {
  std::vector<int> out, c(s);
  for (int i = 0; i < s; ++i) c[i] = i;
  while (true) {
    out.insert(out.end(), c.begin(), c.end());
    int i = s - 1;
    while (i >= 0 && c[i] == n - s + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// If the rows of S indexed by sigma carry a one-dimensional left kernel
// spanned by a full-support vector, returns that vector embedded in R^d.
std::optional<RatVec> member_on_support(const SystemSpec& spec,
                                        const int* sigma, int s) {
  RatMat sub(s, RatVec(spec.dprime));
  for (int i = 0; i < s; ++i) sub[i] = spec.S[sigma[i]];
  std::vector<RatVec> left = null_space(transpose(sub), s);
  if (left.size() != 1) return std::nullopt;
  for (const auto& q : left[0])
    if (q == 0) return std::nullopt;
  RatVec full(spec.d, Rational(0));
  for (int i = 0; i < s; ++i) full[sigma[i]] = left[0][i];
  return full;
}

} // namespace

NullVector make_null_vector(const RatVec& entries, bool canonicalize) {
  NullVector nu;
  nu.entries = entries;
  nu.support = support_of(entries);
  if (nu.support.empty()) throw Error(ErrorCode::ZeroVector, "null vector");
  if (canonicalize) {
    nu.entries = canonical_integer_direction(entries);
    nu.canonical = true;
  }
  return nu;
}

std::vector<NullVector> kernel_basis(const SystemSpec& spec) {
  std::vector<RatVec> b = null_space(transpose(spec.S), spec.d);
  std::vector<NullVector> out;
  out.reserve(b.size());
  for (const auto& v : b) out.push_back(make_null_vector(v));
  return out;
}

bool is_minimal_support(const SystemSpec& spec, const NullVector& nu) {
  if ((int)nu.entries.size() != spec.d)
    throw Error(ErrorCode::DimensionMismatch, "null vector length");
  if (nu.support.empty()) throw Error(ErrorCode::ZeroVector, "null vector");
  if (!is_left_null(spec, nu.entries)) return false;
  RatMat sub = select_rows(spec.S, nu.support);
  int dim = (int)nu.support.size() - rank(sub);
  return dim == 1;
}

NullTeam team(const SystemSpec& spec, const TeamOptions& opts) {
  NullTeam t;
  t.basis = kernel_basis(spec);
  t.k = (int)t.basis.size();
  if (t.k == 0) return t;

  int r = spec.d - t.k;
  int bound = std::min(r + 1, spec.d);
  if (opts.max_support) bound = std::min(bound, std::max(1, *opts.max_support));

  std::uint64_t total = 0;
  for (int s = 1; s <= bound; ++s) {
    total += binomial_capped(spec.d, s, opts.subset_cap);
    if (total > opts.subset_cap)
      throw Error(ErrorCode::TooLarge,
                  "support scan exceeds " + std::to_string(opts.subset_cap) +
                      " candidate subsets; restrict max_support or raise the cap");
  }

  std::vector<std::pair<std::vector<int>, RatVec>> found;
  for (int s = 1; s <= bound; ++s) {
    std::vector<int> flat = combinations_flat(spec.d, s);
    const std::int64_t count = (std::int64_t)flat.size() / s;
    std::vector<std::vector<std::pair<std::vector<int>, RatVec>>> buckets;
    if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel
      {
#pragma omp single
        buckets.resize(omp_get_num_threads());
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t c = 0; c < count; ++c) {
          const int* sigma = flat.data() + c * s;
          auto v = member_on_support(spec, sigma, s);
          if (v)
            buckets[omp_get_thread_num()].emplace_back(
                std::vector<int>(sigma, sigma + s), std::move(*v));
        }
      }
#else
      buckets.resize(1);
      for (std::int64_t c = 0; c < count; ++c) {
        const int* sigma = flat.data() + c * s;
        auto v = member_on_support(spec, sigma, s);
        if (v)
          buckets[0].emplace_back(std::vector<int>(sigma, sigma + s),
                                  std::move(*v));
      }
#endif
    } else {
      buckets.resize(1);
      for (std::int64_t c = 0; c < count; ++c) {
        const int* sigma = flat.data() + c * s;
        auto v = member_on_support(spec, sigma, s);
        if (v)
          buckets[0].emplace_back(std::vector<int>(sigma, sigma + s),
                                  std::move(*v));
      }
    }
    for (auto& b : buckets)
      for (auto& e : b) found.push_back(std::move(e));
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  std::set<int> coords;
  for (auto& [sigma, v] : found) {
    t.members.push_back(make_null_vector(v));
    coords.insert(sigma.begin(), sigma.end());
  }
  t.kernel_coordinates.assign(coords.begin(), coords.end());
  return t;
}

NullVector orient(const NullVector& nu, const RatVec& C) {
  if (nu.support.empty()) throw Error(ErrorCode::ZeroVector, "orient");
  Rational d = dot(nu.entries, C);
  if (d == 0) throw Error(ErrorCode::Balanced, "nu . C = 0");
  if (d < 0) return nu;
  NullVector flipped = nu;
  for (auto& q : flipped.entries) q = -q;
  flipped.canonical = false;
  return flipped;
}

NullVector cover_vector(const std::vector<int>& J,
                        const std::vector<NullVector>& basis,
                        const SystemSpec& spec) {
  const int k = (int)basis.size();
  std::set<int> js(J.begin(), J.end());
  for (int j : js)
    if (j < 0 || j >= spec.d)
      throw Error(ErrorCode::DimensionMismatch, "cover index out of range");
  if ((int)js.size() >= k)
    throw Error(ErrorCode::NotEnoughKernel,
                "need |J| < kernel dimension " + std::to_string(k));

  // Combination of basis vectors vanishing on J.
  RatMat constraints;
  for (int j : js) {
    RatVec row(k);
    for (int l = 0; l < k; ++l) row[l] = basis[l].entries[j];
    constraints.push_back(row);
  }
  std::vector<RatVec> alphas = null_space(constraints, k);
  if (alphas.empty())
    throw Error(ErrorCode::NotEnoughKernel, "kernel forces the avoided set");
  RatVec nu(spec.d, Rational(0));
  for (int l = 0; l < k; ++l)
    for (int i = 0; i < spec.d; ++i) nu[i] += alphas[0][l] * basis[l].entries[i];

  // Shrink to a circuit: while the support carries extra kernel directions,
  // cancel one coordinate against an independent direction.
  while (true) {
    std::vector<int> sigma;
    for (int i = 0; i < spec.d; ++i)
      if (nu[i] != 0) sigma.push_back(i);
    if (sigma.empty()) throw Error(ErrorCode::NotEnoughKernel, "shrank to zero");
    RatMat sub = select_rows(spec.S, sigma);
    std::vector<RatVec> left = null_space(transpose(sub), (int)sigma.size());
    if (left.size() == 1) break;
    int anchor = sigma[0];
    bool progressed = false;
    for (const auto& bloc : left) {
      RatVec b(spec.d, Rational(0));
      for (size_t i = 0; i < sigma.size(); ++i) b[sigma[i]] = bloc[i];
      bool proportional = true;
      for (int i : sigma)
        if (nu[anchor] * b[i] != nu[i] * b[anchor]) { proportional = false; break; }
      if (proportional) continue; // an independent direction exists since dim > 1
      int cancel = -1;
      for (int i : sigma)
        if (b[i] != 0) { cancel = i; break; }
      Rational f = nu[cancel] / b[cancel];
      for (int i = 0; i < spec.d; ++i) nu[i] -= f * b[i];
      progressed = true;
      break;
    }
    if (!progressed)
      throw std::logic_error("cover_vector: no independent direction found");
  }
  return make_null_vector(nu);
}

SystemSpec restrict_system(const SystemSpec& full, const std::vector<int>& F,
                           const std::vector<int>& R) {
  if (full.d != full.dprime)
    throw Error(ErrorCode::NotSquare, "restriction needs a self-coupled square system");
  if (F.empty() || R.empty())
    throw Error(ErrorCode::DimensionMismatch, "F and R must be nonempty");
  for (int i : F)
    if (i < 0 || i >= full.d)
      throw Error(ErrorCode::DimensionMismatch, "focal index out of range");
  std::vector<bool> in_r(full.d, false);
  for (int j : R) {
    if (j < 0 || j >= full.d)
      throw Error(ErrorCode::DimensionMismatch, "resource index out of range");
    in_r[j] = true;
  }
  for (int i : F)
    for (int j = 0; j < full.d; ++j)
      if (!in_r[j] && full.S[i][j] != 0)
        throw Error(ErrorCode::NotClosed,
                    "focal row " + std::to_string(i + 1) +
                        " couples to non-resource column " + std::to_string(j + 1));
  SystemSpec out;
  out.d = (int)F.size();
  out.dprime = (int)R.size();
  for (int i : F) {
    out.C.push_back(full.C[i]);
    RatVec row;
    for (int j : R) row.push_back(full.S[i][j]);
    out.S.push_back(row);
  }
  return out;
}

} // namespace dieout
