#include "walks/models.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace walks {

namespace {

const std::map<std::string, std::set<Step>>& catalog_map() {
  static const std::map<std::string, std::set<Step>> k = {
      {"kreweras", {{1, 1}, {-1, 0}, {0, -1}}},
      {"reverse-kreweras", {{1, 0}, {0, 1}, {-1, -1}}},
      {"double-kreweras", {{1, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, -1}}},
      {"simple", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}},
      {"diagonal", {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}},
      {"m6", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}}},
      {"m7", {{1, 1}, {-1, 0}, {0, -1}, {-1, -1}}},
      {"m8", {{1, 1}, {0, 1}, {1, 0}, {-1, -1}}},
      {"m9", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}}},
      {"gessel", {{1, 1}, {-1, -1}, {1, 0}, {-1, 0}}},
      {"gessel-reflected", {{1, 1}, {0, 1}, {-1, -1}, {0, -1}}},
      {"scarecrow", {{1, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}},
      {"gessel-asymmetric", {{1, 1}, {-1, -1}, {1, 0}, {-1, 0}}},
  };
  return k;
}

}  // namespace

StepSet::StepSet(std::set<Step> steps, std::string name)
    : steps_(std::move(steps)), name_(std::move(name)) {
  if (steps_.empty()) throw ModelError("empty step set");
  for (const auto& [dx, dy] : steps_) {
    if (dx < -1 || dx > 1 || dy < -1 || dy > 1 || (dx == 0 && dy == 0))
      throw ModelError("step set is not small-step");
  }
}

StepSet StepSet::named(const std::string& name) {
  auto it = catalog_map().find(name);
  if (it == catalog_map().end()) {
    std::ostringstream os;
    os << "unknown model '" << name << "'; valid choices:";
    for (const auto& n : catalog()) os << " " << n;
    throw ModelError(os.str());
  }
  return StepSet(it->second, name);
}

const std::vector<std::string>& StepSet::catalog() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, s] : catalog_map()) v.push_back(n);
    std::sort(v.begin(), v.end());
    return v;
  }();
  return names;
}

bool StepSet::diagonally_symmetric() const {
  return std::all_of(steps_.begin(), steps_.end(),
                     [&](const Step& s) { return has(s.second, s.first); });
}

BiLaurent StepSet::step_polynomial() const {
  BiLaurent p;
  for (const auto& [dx, dy] : steps_) p.add_term(dx, dy, rat(1));
  return p;
}

Splits splits(const StepSet& m) {
  Splits s;
  for (const auto& [dx, dy] : m.steps()) {
    BiLaurent mx = BiLaurent::mono(dx, 0);
    BiLaurent my = BiLaurent::mono(0, dy);
    if (dy == -1) s.hminus += mx;
    else if (dy == 0) s.h0 += mx;
    else s.hplus += mx;
    if (dx == -1) s.vminus += my;
    else if (dx == 0) s.v0 += my;
    else s.vplus += my;
  }
  return s;
}

StepSet companion(const StepSet& m) {
  if (m.steps() == StepSet::named("diagonal").steps()) {
    // Half-step transform: S(1/sqrt(x), sqrt(x)*y).
    return StepSet::named("gessel-reflected");
  }
  if (m.has(1, -1) || m.has(-1, 1))
    throw ModelError("companion undefined for models with NW or SE steps");
  std::set<Step> c;
  for (const auto& [dx, dy] : m.steps()) c.insert({dy - dx, dy});
  // Preserve catalog names where the image is itself a catalog set.
  for (const auto& [name, steps] : catalog_map())
    if (steps == c) return StepSet(c, name);
  return StepSet(c);
}

TSeries kernel(const StepSet& m) { return TSeries::one_minus_t(m.step_polynomial()); }

TSeries discriminant_y(const StepSet& m) {
  Splits s = splits(m);
  TSeries a = TSeries::one_minus_t(s.v0);
  TSeries b = TSeries::t_mono(2, s.vminus * s.vplus * rat(4));
  return a * a - b;
}

}  // namespace walks
