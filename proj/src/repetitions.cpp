#include "nonrep/repetitions.hpp"

#include <algorithm>

#include "nonrep/errors.hpp"

namespace nonrep {

std::string to_string(const Repetition& r) {
  return "start=" + std::to_string(r.start) + " len=" + std::to_string(r.length) +
         " period=" + std::to_string(r.period) + " exp=" + to_string(r.exponent());
}

std::vector<Repetition> find_squares(const Word& w, std::size_t min_period,
                                     std::size_t max_period) {
  if (min_period < 1 || min_period > max_period) {
    throw DomainError("find_squares needs 1 <= min_period <= max_period");
  }
  const auto s = w.symbols();
  const std::size_t n = s.size();
  std::vector<Repetition> out;
  const std::size_t top = std::min(max_period, n / 2);
  for (std::size_t p = min_period; p <= top; ++p) {
    std::size_t matched = 0;
    for (std::size_t i = 0; i + p < n; ++i) {
      matched = s[i] == s[i + p] ? matched + 1 : 0;
      if (matched >= p) out.push_back({i + 1 - p, 2 * p, p});
    }
  }
  std::sort(out.begin(), out.end(), [](const Repetition& a, const Repetition& b) {
    return a.start != b.start ? a.start < b.start : a.period < b.period;
  });
  return out;
}

Rational max_exponent(const Word& w, std::size_t min_period) {
  if (min_period < 1) throw DomainError("min_period must be at least 1");
  const auto s = w.symbols();
  const std::size_t n = s.size();
  Rational best(0);
  std::vector<std::size_t> border(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    // failure function of s[i..n); border[len] = longest proper border of the prefix of length len
    const std::size_t m = n - i;
    border[0] = 0;
    if (m >= 1) border[1] = 0;
    std::size_t b = 0;
    for (std::size_t len = 2; len <= m; ++len) {
      while (b > 0 && s[i + len - 1] != s[i + b]) b = border[b];
      if (s[i + len - 1] == s[i + b]) ++b;
      border[len] = b;
    }
    for (std::size_t len = 1; len <= m; ++len) {
      const std::size_t period = len - border[len];
      if (period < min_period) continue;
      const Rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(period));
      if (e > best) best = e;
    }
  }
  return best;
}

Verdict<Repetition> is_power_free(const Word& w, const PowerFreeSpec& spec) {
  const auto s = w.symbols();
  const std::size_t n = s.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t p = spec.min_period; start + p < n; ++p) {
      const std::size_t need = spec.forbidden_run(p);
      if (start + p + need > n) break;
      std::size_t t = 0;
      while (start + t + p < n && s[start + t] == s[start + t + p]) ++t;
      if (t >= need) return {Repetition{start, t + p, p}};
    }
  }
  return {};
}

Verdict<ReversalPair> is_d_directed(const Word& w, std::size_t d) {
  if (d < 1) throw DomainError("directedness window must be at least 1");
  if (w.size() < d) return {};
  const auto present = factors(w, d);
  for (std::size_t i = 0; i + d <= w.size(); ++i) {
    auto f = w.slice(i, d);
    auto r = reverse(f);
    if (present.count(r)) return {ReversalPair{std::move(f), std::move(r), i}};
  }
  return {};
}

std::optional<Repetition> suffix_violation(std::span<const Symbol> w,
                                           const PowerFreeSpec& spec) {
  const std::size_t n = w.size();
  for (std::size_t p = spec.min_period; p < n; ++p) {
    const std::size_t need = spec.forbidden_run(p);
    if (need > n - p) break;  // need grows with p
    if (suffix_run(w, p, need) >= need) return Repetition{n - need - p, need + p, p};
  }
  return std::nullopt;
}

std::optional<Repetition> suffix_square(std::span<const Symbol> w,
                                        std::size_t min_period,
                                        std::size_t max_period) {
  const std::size_t n = w.size();
  const std::size_t top = std::min(max_period, n / 2);
  for (std::size_t p = std::max<std::size_t>(min_period, 1); p <= top; ++p) {
    if (suffix_run(w, p, p) == p) return Repetition{n - 2 * p, 2 * p, p};
  }
  return std::nullopt;
}

}  // namespace nonrep
