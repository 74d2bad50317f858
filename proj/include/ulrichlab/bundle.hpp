#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "errors.hpp"

namespace ulrichlab {

/// (F_* O_X(k))(c): the Frobenius pushforward of O_X(k), twisted by c.
struct FrobPush {
  int k = 0;
  int c = 0;
  friend bool operator==(const FrobPush&, const FrobPush&) = default;
};

/// B^1_X(c): the cokernel of O_X -> F_* O_X, twisted by c.
struct B1Sheaf {
  int c = 0;
  friend bool operator==(const B1Sheaf&, const B1Sheaf&) = default;
};

using BundleSpec = std::variant<FrobPush, B1Sheaf>;

inline std::string bundle_kind(const BundleSpec& spec) {
  return std::holds_alternative<FrobPush>(spec) ? "frobpush" : "b1";
}

inline int bundle_twist(const BundleSpec& spec) {
  return std::visit([](const auto& b) { return b.c; }, spec);
}

inline std::string to_string(const BundleSpec& spec) {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, FrobPush>)
          return "frobpush:k=" + std::to_string(b.k) + ",c=" + std::to_string(b.c);
        else
          return "b1:c=" + std::to_string(b.c);
      },
      spec);
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

}  // namespace detail

/// Parses `frobpush:k=<int>,c=<int>`, `b1:c=<int>` or bare `b1` (c = 0).
/// Missing keys default to 0.
inline BundleSpec parse_bundle(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  int k = 0, c = 0;
  bool saw_k = false;
  std::string_view remaining = rest;
  while (!remaining.empty()) {
    const auto comma = remaining.find(',');
    const std::string_view item = remaining.substr(0, comma);
    remaining = comma == std::string_view::npos ? std::string_view{} : remaining.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("bundle descriptor item '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const int value = detail::parse_int(item.substr(eq + 1), text);
    if (key == "k") {
      k = value;
      saw_k = true;
    } else if (key == "c") {
      c = value;
    } else {
      throw ParseError("unknown bundle key '" + std::string(key) + "'");
    }
  }

  if (kind == "frobpush") return FrobPush{k, c};
  if (kind == "b1") {
    if (saw_k) throw ParseError("b1 bundle takes no k");
    return B1Sheaf{c};
  }
  throw ParseError("unknown bundle kind '" + std::string(kind) + "'");
}

}  // namespace ulrichlab
