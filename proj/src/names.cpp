#include "alcm/names.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace alcm {

namespace {

struct NamePool {
  std::mutex mutex;
  std::deque<std::string> strings{std::string()};
  std::unordered_map<std::string_view, std::uint32_t> index;
};

NamePool& pool() {
  static NamePool p;
  return p;
}

}  // namespace

Name Name::intern(std::string_view text) {
  NamePool& p = pool();
  std::lock_guard lock(p.mutex);
  if (auto it = p.index.find(text); it != p.index.end()) return Name(it->second);
  p.strings.emplace_back(text);
  auto id = static_cast<std::uint32_t>(p.strings.size() - 1);
  p.index.emplace(p.strings.back(), id);
  return Name(id);
}

const std::string& Name::str() const {
  NamePool& p = pool();
  std::lock_guard lock(p.mutex);
  return p.strings[id_];
}

std::strong_ordering operator<=>(Name a, Name b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  int c = a.str().compare(b.str());
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Name freshName(std::string_view prefix, std::size_t index) {
  std::string s(prefix);
  s += '#';
  s += std::to_string(index);
  return Name::intern(s);
}

bool isReservedName(Name n) { return n.str().find('#') != std::string::npos; }

}  // namespace alcm
