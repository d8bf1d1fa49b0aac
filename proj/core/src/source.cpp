#include "palgen/source.hpp"

#include "palgen/error.hpp"

namespace palgen {

namespace {

constexpr std::string_view kStd = "std:";
constexpr std::string_view kPeriodic = "periodic:";
constexpr std::string_view kDouble = "double:";
constexpr std::string_view kDoublingTag = "/A=";

}  // namespace

std::string Source::str() const {
  switch (kind) {
    case Kind::ThueMorse:
      return "tm";
    case Kind::Standard:
      return std::string(kStd) + directive.str();
    case Kind::Periodic:
      return std::string(kPeriodic) + block.str();
    case Kind::DoubledStandard:
      return std::string(kDouble) + std::string(kStd) + directive.str() +
             std::string(kDoublingTag) + doubling.str();
  }
  return {};
}

Source Source::parse(std::string_view text) {
  Source src;
  if (text == "tm") {
    src.kind = Kind::ThueMorse;
    return src;
  }
  if (text.starts_with(kStd)) {
    src.kind = Kind::Standard;
    src.directive = DirectiveSequence::parse(text.substr(kStd.size()));
    if (src.directive.terms.empty()) throw ParseError("std: source needs at least one term", kStd.size() + 1);
    return src;
  }
  if (text.starts_with(kPeriodic)) {
    src.kind = Kind::Periodic;
    src.block = parse_word(text.substr(kPeriodic.size()));
    if (src.block.empty()) throw ParseError("periodic: source needs a nonempty block", kPeriodic.size() + 1);
    return src;
  }
  if (text.starts_with(kDouble)) {
    auto rest = text.substr(kDouble.size());
    const auto tag = rest.find(kDoublingTag);
    if (!rest.starts_with(kStd) || tag == std::string_view::npos) {
      throw ParseError("expected double:std:<terms>/A=<letters>", kDouble.size() + 1);
    }
    src.kind = Kind::DoubledStandard;
    src.directive = DirectiveSequence::parse(rest.substr(kStd.size(), tag - kStd.size()));
    if (src.directive.terms.empty()) throw ParseError("double: source needs at least one term", kDouble.size() + 1);
    src.doubling = DoublingSet::parse(rest.substr(tag + kDoublingTag.size()));
    return src;
  }
  throw ParseError("unknown source descriptor '" + std::string(text) + "'", 1);
}

Word Source::prefix(std::size_t len) const {
  if (len > kMaxSourcePrefix) {
    throw ResourceError("prefix length " + std::to_string(len) + " exceeds " +
                        std::to_string(kMaxSourcePrefix));
  }
  switch (kind) {
    case Kind::ThueMorse:
      return thue_morse_prefix(len);
    case Kind::Standard:
      return standard_prefix(directive, len);
    case Kind::Periodic: {
      std::vector<Letter> out(len);
      const auto b = block.letters();
      for (std::size_t k = 0; k < len; ++k) out[k] = b[k % b.size()];
      return Word(std::move(out));
    }
    case Kind::DoubledStandard: {
      // Doubling never shortens, so a base prefix of length len suffices.
      const Word doubled = double_word(standard_prefix(directive, len), doubling);
      return len == 0 ? Word() : doubled.factor({1, len});
    }
  }
  return {};
}

}  // namespace palgen
