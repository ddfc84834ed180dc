#include "tropj/polynomial.hpp"

#include <map>
#include <set>
#include <sstream>

#include "tropj/linprog.hpp"

namespace tropj {

int VariableSet::index_of(const std::string& n) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  throw std::invalid_argument("unknown variable: " + n);
}

std::vector<ExponentVector> hull_vertices(const std::vector<ExponentVector>& pts) {
  std::vector<ExponentVector> uniq = pts;
  std::sort(uniq.begin(), uniq.end(), grlex_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  size_t n = uniq.size();
  if (n <= 2) return uniq;
  size_t d = uniq[0].e.size();

  // -1 unknown, 0 interior, 1 vertex.
  std::vector<int> state(n, -1);

  // Midpoint prefilter: a point that is the average of two others is not a
  // vertex.
  std::map<std::vector<int32_t>, size_t> index;
  for (size_t i = 0; i < n; ++i) index[uniq[i].e] = i;
  std::vector<int32_t> mid(d);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool integral = true;
      for (size_t k = 0; k < d; ++k) {
        int32_t s = uniq[i].e[k] + uniq[j].e[k];
        if (s & 1) {
          integral = false;
          break;
        }
        mid[k] = s / 2;
      }
      if (!integral) continue;
      auto it = index.find(mid);
      if (it != index.end() && it->second != i && it->second != j) state[it->second] = 0;
    }

  // Unique minimizers of a few fixed directions are certainly vertices.
  std::vector<std::vector<int64_t>> dirs;
  for (size_t k = 0; k < d; ++k) {
    std::vector<int64_t> u(d, 0);
    u[k] = 1;
    dirs.push_back(u);
    u[k] = -1;
    dirs.push_back(u);
  }
  uint64_t h = 88172645463325252ull;
  for (int extra = 0; extra < 32; ++extra) {
    std::vector<int64_t> u(d);
    for (size_t k = 0; k < d; ++k) {
      h ^= h << 13;
      h ^= h >> 7;
      h ^= h << 17;
      u[k] = static_cast<int64_t>(h % 2001) - 1000;
    }
    dirs.push_back(u);
  }
  for (auto& u : dirs) {
    int64_t best = 0;
    size_t argmin = n, count = 0;
    for (size_t i = 0; i < n; ++i) {
      int64_t v = 0;
      for (size_t k = 0; k < d; ++k) v += u[k] * uniq[i].e[k];
      if (i == 0 || v < best) {
        best = v;
        argmin = i;
        count = 1;
      } else if (v == best) {
        ++count;
      }
    }
    if (count == 1) state[argmin] = 1;
  }

  // Exact membership test settles the rest.
  for (size_t i = 0; i < n; ++i) {
    if (state[i] != -1) continue;
    std::vector<std::vector<Rational>> others;
    others.reserve(n - 1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> p(d);
      for (size_t k = 0; k < d; ++k) p[k] = Rational(uniq[j].e[k]);
      others.push_back(std::move(p));
    }
    std::vector<Rational> target(d);
    for (size_t k = 0; k < d; ++k) target[k] = Rational(uniq[i].e[k]);
    state[i] = in_convex_hull(others, target) ? 0 : 1;
  }

  std::vector<ExponentVector> out;
  for (size_t i = 0; i < n; ++i)
    if (state[i] == 1) out.push_back(uniq[i]);
  return out;
}

std::string to_string(const SparsePolynomial<Rational>& p) {
  if (p.is_zero()) return "0";
  std::vector<ExponentVector> s = support(p);
  std::ostringstream os;
  bool first = true;
  for (auto& ev : s) {
    const Rational& c = *p.coefficient(ev);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    bool constant = ev.total_degree() == 0;
    bool unit = (a == Rational(1));
    if (!unit || constant) os << a.str();
    bool star = !unit && !constant;
    for (size_t i = 0; i < ev.e.size(); ++i) {
      if (ev.e[i] == 0) continue;
      if (star) os << "*";
      os << p.vars()->names[i];
      if (ev.e[i] != 1) os << "^" << ev.e[i];
      star = true;
    }
  }
  return os.str();
}

}  // namespace tropj
