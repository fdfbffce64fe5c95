#include "af_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace testsupport {

using repairaf::Semantics;

AfMatrix to_matrix(const repairaf::ArgFramework& f) {
  AfMatrix m;
  std::map<std::string, std::size_t> index;
  for (const auto& a : f.arguments()) {
    index[a.id] = m.ids.size();
    m.ids.push_back(a.id);
  }
  m.att.assign(m.ids.size(), std::vector<bool>(m.ids.size(), false));
  for (const auto& [from, to] : f.attack_list()) m.att[index.at(from)][index.at(to)] = true;
  return m;
}

std::vector<std::vector<std::string>> oracle_extensions(const AfMatrix& m, Semantics sem, bool allow_empty) {
  const std::size_t n = m.ids.size();
  if (n > 16) throw std::invalid_argument("oracle_extensions: framework too large");
  const std::uint32_t limit = 1u << n;
  auto in = [](std::uint32_t s, std::size_t a) { return ((s >> a) & 1u) != 0; };

  std::vector<char> cf(limit), adm(limit), stb(limit);
  for (std::uint32_t s = 0; s < limit; ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (in(s, a) && in(s, b) && m.att[a][b]) ok = false;
    cf[s] = ok;
    if (!ok) continue;
    bool defended = true;
    for (std::size_t a = 0; a < n && defended; ++a) {
      if (!in(s, a)) continue;
      for (std::size_t x = 0; x < n && defended; ++x) {
        if (!m.att[x][a]) continue;
        bool countered = false;
        for (std::size_t c = 0; c < n; ++c)
          if (in(s, c) && m.att[c][x]) countered = true;
        defended = countered;
      }
    }
    adm[s] = defended;
    bool covers = true;
    for (std::size_t x = 0; x < n && covers; ++x) {
      if (in(s, x)) continue;
      bool hit = false;
      for (std::size_t c = 0; c < n; ++c)
        if (in(s, c) && m.att[c][x]) hit = true;
      covers = hit;
    }
    stb[s] = covers;
  }

  auto maximal = [&](const std::vector<char>& base, std::uint32_t s) {
    for (std::uint32_t t = 0; t < limit; ++t)
      if (t != s && (t & s) == s && base[t]) return false;
    return true;
  };

  std::vector<std::vector<std::string>> out;
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (s == 0 && !allow_empty) continue;
    bool keep = false;
    switch (sem) {
      case Semantics::ConflictFree: keep = cf[s]; break;
      case Semantics::Naive: keep = cf[s] && maximal(cf, s); break;
      case Semantics::Admissible: keep = adm[s]; break;
      case Semantics::Preferred: keep = adm[s] && maximal(adm, s); break;
      case Semantics::Stable: keep = stb[s]; break;
    }
    if (!keep) continue;
    std::vector<std::string> ext;
    for (std::size_t a = 0; a < n; ++a)
      if (in(s, a)) ext.push_back(m.ids[a]);
    std::sort(ext.begin(), ext.end());
    out.push_back(std::move(ext));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> oracle_extensions(const repairaf::ArgFramework& f, Semantics sem,
                                                        bool allow_empty) {
  return oracle_extensions(to_matrix(f), sem, allow_empty);
}

std::vector<std::vector<std::string>> members(const std::vector<repairaf::Extension>& exts) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : exts) out.push_back(e.members);
  return out;
}

}  // namespace testsupport
