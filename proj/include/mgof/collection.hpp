#pragma once

#include <mgof/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mgof {

enum class CollectionKind { Naive, Geometric, LogLog, Explicit };

enum class LogBase { Natural, Two };

/// A finite set of dimension parameters aggregated by the max-test.
struct Collection {
  CollectionKind kind = CollectionKind::Explicit;
  double m = 1.0;                // LogLog only
  std::vector<double> members;   // strictly increasing, positive
  bool truncated = false;        // Naive collection hit the size cap

  std::size_t size() const noexcept { return members.size(); }
};

inline constexpr std::size_t kNaiveCap = 10000;

namespace detail {

inline double log_in(double x, LogBase base) {
  return base == LogBase::Natural ? std::log(x) : std::log2(x);
}

inline std::vector<double> powers_of_two(long jmax) {
  std::vector<double> out{1.0};
  for (long j = 1; j <= jmax; ++j) out.push_back(std::ldexp(1.0, static_cast<int>(j)));
  return out;
}

}  // namespace detail

/// Explicit collection; members are sorted and must be distinct and positive.
inline Collection explicit_collection(std::vector<double> members) {
  require(!members.empty(), "collection must be nonempty");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    require(members[i] > 0.0 && std::isfinite(members[i]),
            "collection members must be positive");
    require(i == 0 || members[i] > members[i - 1],
            "collection members must be distinct");
  }
  return {CollectionKind::Explicit, 1.0, std::move(members), false};
}

/// Naive {1..n^2} (capped at 10^4 members), geometric {1} u {2^j, j <= log n^2}
/// and log-log {1} u {2^j, j <= log(log n) / m} collections.
inline Collection build_collection(CollectionKind kind, std::size_t n, double m = 1.0,
                                   LogBase base = LogBase::Natural) {
  require(n >= 2, "collections require n >= 2");
  const double nd = static_cast<double>(n);
  switch (kind) {
    case CollectionKind::Naive: {
      const double full = nd * nd;
      const bool capped = full > static_cast<double>(kNaiveCap);
      const auto count = capped ? kNaiveCap : static_cast<std::size_t>(full);
      std::vector<double> members(count);
      for (std::size_t i = 0; i < count; ++i) members[i] = static_cast<double>(i + 1);
      return {kind, 1.0, std::move(members), capped};
    }
    case CollectionKind::Geometric: {
      const auto jmax = static_cast<long>(std::floor(detail::log_in(nd * nd, base)));
      return {kind, 1.0, detail::powers_of_two(jmax), false};
    }
    case CollectionKind::LogLog: {
      require(m > 0.0, "log-log collection requires m > 0");
      const double ll = detail::log_in(detail::log_in(nd, base), base);
      if (!(ll > 0.0))
        throw PreconditionError("log-log collection requires log log n > 0 (n = " +
                                std::to_string(n) + ")");
      const auto jmax = static_cast<long>(std::floor(ll / m));
      return {kind, m, detail::powers_of_two(jmax), false};
    }
    case CollectionKind::Explicit:
      break;
  }
  throw PreconditionError("explicit collections need their members; use explicit_collection");
}

/// `naive`, `geometric`, `loglog:<m>`, `explicit:<k1,k2,...>`.
inline Collection parse_collection(std::string_view spec, std::size_t n,
                                   LogBase base = LogBase::Natural) {
  auto number = [&](const std::string& text) {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw DataError("bad number '" + text + "' in collection spec '" +
                      std::string(spec) + "'");
    }
  };
  if (spec == "naive") return build_collection(CollectionKind::Naive, n, 1.0, base);
  if (spec == "geometric") return build_collection(CollectionKind::Geometric, n, 1.0, base);
  if (spec.starts_with("loglog:"))
    return build_collection(CollectionKind::LogLog, n, number(std::string(spec.substr(7))),
                            base);
  if (spec.starts_with("explicit:")) {
    std::vector<double> members;
    std::string_view rest = spec.substr(9);
    while (!rest.empty()) {
      const auto pos = rest.find(',');
      members.push_back(number(std::string(rest.substr(0, pos))));
      if (pos == std::string_view::npos) break;
      rest = rest.substr(pos + 1);
    }
    return explicit_collection(std::move(members));
  }
  throw DataError("unknown collection spec '" + std::string(spec) + "'");
}

/// Adaptive factor (1 + log |K|)^{-1/2}.
inline double delta_K(std::size_t size) {
  require(size >= 1, "delta_K requires a nonempty collection");
  return 1.0 / std::sqrt(1.0 + std::log(static_cast<double>(size)));
}

inline double delta_K(const Collection& collection) { return delta_K(collection.size()); }

}  // namespace mgof
