#include "heunconv/maier.hpp"

namespace heunconv {

namespace {

struct Entry {
  MaierVariant variant;
  std::string_view id;
  MaierInfo info;
};

constexpr std::array<Entry, 9> kTable = {{
    {MaierVariant::A1a, "a1a", {"x", "(1-x)^(1-delta)", "a"}},
    {MaierVariant::A1b, "a1b", {"x", "x^(1-gamma) (1-x)^(1-delta)", "a"}},
    {MaierVariant::A2a, "a2a", {"1-x", "1", "1-a"}},
    {MaierVariant::A2b, "a2b", {"1-x", "(1-x)^(1-delta)", "1-a"}},
    {MaierVariant::A3, "a3", {"1/x", "x^(-alpha)", "1/a"}},
    {MaierVariant::A4a, "a4a", {"(1-a)x/(x-a)", "(1-x/a)^(-beta)", "1-a"}},
    {MaierVariant::A4b, "a4b", {"(1-a)x/(x-a)", "(1-x)^(1-delta) (1-x/a)^(-beta+delta-1)", "1-a"}},
    {MaierVariant::A5, "a5", {"(x-1)/x", "x^(-alpha)", "(a-1)/a"}},
    {MaierVariant::A6, "a6", {"a(x-1)/(x-a)", "((x-a)/(1-a))^(-alpha)", "a"}},
}};

}  // namespace

std::string_view variant_id(MaierVariant v) {
  for (const auto& e : kTable)
    if (e.variant == v) return e.id;
  return "?";
}

std::optional<MaierVariant> parse_variant(std::string_view id) {
  for (const auto& e : kTable)
    if (e.id == id) return e.variant;
  return std::nullopt;
}

MaierInfo maier_info(MaierVariant v) {
  for (const auto& e : kTable)
    if (e.variant == v) return e.info;
  return {};
}

}  // namespace heunconv
