// Alternative ball constructions used as independent cross-checks of the
// level-by-level engine.

#include <algorithm>
#include <map>
#include <unordered_map>

#include "coxkit/errors.hpp"
#include "coxkit/group_ball.hpp"

namespace coxkit {

namespace {

std::string key_of(const Word& w) {
  std::string k(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) k[i] = static_cast<char>(w[i]);
  return k;
}

void check_cap(std::size_t size, const BallOptions& options, int len) {
  if (size >= options.element_cap)
    throw ResourceError("ball enumeration exceeded the element cap of " +
                        std::to_string(options.element_cap) + " at length " +
                        std::to_string(len) + " (partial size " + std::to_string(size) + ")");
}

// Group element in one of the concrete models, acting on signed points.
using State = std::vector<int>;

enum class ModelKind { kA, kB, kD, kDihedral };

struct Model {
  ModelKind kind;
  int points = 0;  // permutation degree, or m for dihedral (0 = infinite)

  State identity() const {
    if (kind == ModelKind::kDihedral) return {0, 1};
    State s(points);
    for (int i = 0; i < points; ++i) s[i] = i + 1;
    return s;
  }

  // Image of the signed point x under generator g.
  int act(Generator g, int x) const {
    const int sign = x < 0 ? -1 : 1;
    const int a = x * sign;
    if (kind == ModelKind::kA) {
      if (a == g + 1) return sign * (g + 2);
      if (a == g + 2) return sign * (g + 1);
      return x;
    }
    if (g == 0) {
      if (kind == ModelKind::kB) return a == 1 ? -x : x;
      if (a == 1) return -sign * 2;
      if (a == 2) return -sign * 1;
      return x;
    }
    if (a == g) return sign * (g + 1);
    if (a == g + 1) return sign * g;
    return x;
  }

  State dihedral_compose(const State& f, const State& g) const {
    // (f o g)(x) = f1*(g1*x + g0) + f0
    State out{f[1] * g[0] + f[0], f[1] * g[1]};
    if (points != 0) out[0] = ((out[0] % points) + points) % points;
    return out;
  }

  State dihedral_generator(Generator g) const {
    return g == 0 ? State{0, -1} : State{1, -1};
  }

  State left(Generator g, const State& w) const {
    if (kind == ModelKind::kDihedral) return dihedral_compose(dihedral_generator(g), w);
    State out(w);
    for (int& v : out) v = act(g, v);
    return out;
  }

  State right(const State& w, Generator g) const {
    if (kind == ModelKind::kDihedral) return dihedral_compose(w, dihedral_generator(g));
    State out(w.size());
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const int image = act(g, i + 1);
      const int pos = image < 0 ? -image : image;
      out[i] = image < 0 ? -w[pos - 1] : w[pos - 1];
    }
    return out;
  }
};

Model model_for(const CoxeterMatrix& m) {
  const int r = m.rank();
  if (r == 2) return {ModelKind::kDihedral, m(0, 1)};
  auto same = [&](const std::string& name) {
    try {
      return CoxeterMatrix::parse(name) == m;
    } catch (const ValidationError&) {
      return false;
    }
  };
  if (same("A" + std::to_string(r))) return {ModelKind::kA, r + 1};
  if (same("B" + std::to_string(r))) return {ModelKind::kB, r};
  if (same("D" + std::to_string(r))) return {ModelKind::kD, r};
  if (r == 1) return {ModelKind::kA, 2};
  throw DomainError("no permutation model for Coxeter matrix " + m.name());
}

}  // namespace

GroupBall build_tits_ball(const CoxeterMatrix& m, int radius, const BallOptions& options) {
  const int r = m.rank();
  const TitsSolver solver(m, options.braid_budget);
  GroupBall::Tables tables;
  tables.lengths = {0};
  tables.normal_forms = {Word{}};
  tables.left.assign(static_cast<std::size_t>(r), kOutside);
  tables.right.assign(static_cast<std::size_t>(r), kOutside);
  std::unordered_map<std::string, ElementId> index{{std::string{}, 0}};
  std::vector<ElementId> current{0};
  bool closed = false;

  auto cell = [&](std::vector<ElementId>& table, ElementId w, Generator s) -> ElementId& {
    return table[static_cast<std::size_t>(w) * r + s];
  };

  for (int n = 0; n < radius; ++n) {
    std::vector<ElementId> next;
    for (ElementId y : current) {
      const Word nf = tables.normal_forms[y];
      const GeneratorSet dl = solver.left_descents(nf);
      for (Generator t = 0; t < r; ++t) {
        if (contains(dl, t)) continue;
        Word w{t};
        w.insert(w.end(), nf.begin(), nf.end());
        const Word x_nf = solver.normal_form(w);
        auto [it, inserted] = index.try_emplace(key_of(x_nf), static_cast<ElementId>(tables.lengths.size()));
        if (inserted) {
          check_cap(tables.lengths.size(), options, n + 1);
          tables.lengths.push_back(n + 1);
          tables.normal_forms.push_back(x_nf);
          tables.left.resize(tables.left.size() + r, kOutside);
          tables.right.resize(tables.right.size() + r, kOutside);
          next.push_back(it->second);
        }
        cell(tables.left, y, t) = it->second;
        cell(tables.left, it->second, t) = y;
      }
    }
    // Right edges between levels n and n+1, located through normal forms.
    for (ElementId y : current) {
      const Word nf = tables.normal_forms[y];
      const GeneratorSet dr = solver.right_descents(nf);
      for (Generator t = 0; t < r; ++t) {
        if (contains(dr, t)) continue;
        Word w = nf;
        w.push_back(t);
        const ElementId x = index.at(key_of(solver.normal_form(w)));
        cell(tables.right, y, t) = x;
        cell(tables.right, x, t) = y;
      }
    }
    if (next.empty()) {
      closed = true;
      break;
    }
    current = std::move(next);
  }
  return GroupBall::finalize(m, radius, std::move(tables), options.braid_budget, closed);
}

GroupBall build_model_ball(const CoxeterMatrix& m, int radius, const BallOptions& options) {
  const Model model = model_for(m);
  const int r = m.rank();
  std::map<State, ElementId> index;
  std::vector<State> states{model.identity()};
  std::vector<int> dist{0};
  index.emplace(states[0], 0);
  bool closed = false;
  std::size_t begin = 0;
  for (int n = 0; n < radius; ++n) {
    const std::size_t end = states.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Generator s = 0; s < r; ++s) {
        State next = model.left(s, states[i]);
        if (index.count(next)) continue;
        check_cap(states.size(), options, n + 1);
        index.emplace(next, static_cast<ElementId>(states.size()));
        states.push_back(std::move(next));
        dist.push_back(n + 1);
      }
    }
    if (states.size() == end) {
      closed = true;
      break;
    }
    begin = end;
  }

  const std::size_t size = states.size();
  GroupBall::Tables tables;
  tables.lengths = dist;
  tables.left.assign(size * r, kOutside);
  tables.right.assign(size * r, kOutside);
  for (std::size_t w = 0; w < size; ++w) {
    for (Generator s = 0; s < r; ++s) {
      if (auto it = index.find(model.left(s, states[w])); it != index.end())
        tables.left[w * r + s] = it->second;
      if (auto it = index.find(model.right(states[w], s)); it != index.end())
        tables.right[w * r + s] = it->second;
    }
  }
  // ShortLex normal form: smallest left descent first, then recurse.
  tables.normal_forms.resize(size);
  for (std::size_t w = 1; w < size; ++w) {
    for (Generator s = 0; s < r; ++s) {
      const ElementId v = tables.left[w * r + s];
      if (v != kOutside && dist[v] < dist[w]) {
        Word nf{s};
        nf.insert(nf.end(), tables.normal_forms[v].begin(), tables.normal_forms[v].end());
        tables.normal_forms[w] = std::move(nf);
        break;
      }
    }
  }
  return GroupBall::finalize(m, radius, std::move(tables), options.braid_budget, closed);
}

}  // namespace coxkit
