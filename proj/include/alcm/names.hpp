#ifndef ALCM_NAMES_HPP_
#define ALCM_NAMES_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace alcm {

/// Interned identifier used for concept, role and individual names.
///
/// Equality is identity of the interned string. Ordering is by the string
/// itself, so sorted containers of names do not depend on the order in which
/// names were first seen.
class Name {
 public:
  Name() = default;

  static Name intern(std::string_view text);

  const std::string& str() const;
  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != 0; }

  friend bool operator==(Name a, Name b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Name a, Name b);

 private:
  explicit Name(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Names minted by the reasoner itself contain '#', which the input grammar
/// cannot produce.
Name freshName(std::string_view prefix, std::size_t index);
bool isReservedName(Name n);

}  // namespace alcm

template <>
struct std::hash<alcm::Name> {
  std::size_t operator()(alcm::Name n) const noexcept { return n.id(); }
};

#endif  // ALCM_NAMES_HPP_
