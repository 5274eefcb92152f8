#include "walks/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace walks {

const Int CountTable::kZero = 0;

Region region_named(const std::string& name) {
  if (name == "quadrant") return Region::kQuadrant;
  if (name == "three-quadrant") return Region::kThreeQuadrant;
  if (name == "full-plane") return Region::kFullPlane;
  throw ModelError("unknown region '" + name +
                   "'; valid choices: quadrant three-quadrant full-plane");
}

std::string region_name(Region r) {
  switch (r) {
    case Region::kQuadrant: return "quadrant";
    case Region::kThreeQuadrant: return "three-quadrant";
    case Region::kFullPlane: return "full-plane";
  }
  return "?";
}

bool region_contains(Region r, long i, long j) {
  switch (r) {
    case Region::kQuadrant: return i >= 0 && j >= 0;
    case Region::kThreeQuadrant: return i >= 0 || j >= 0;
    case Region::kFullPlane: return true;
  }
  return false;
}

namespace {

Int common_denominator(const std::vector<WeightedStart>& starts) {
  Int d = 1;
  for (const auto& s : starts) {
    Int den = s.weight.get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  return d;
}

}  // namespace

CountTable::CountTable(StepSet model, Region region, std::vector<WeightedStart> starts, long nmax)
    : model_(std::move(model)),
      region_(region),
      starts_(std::move(starts)),
      nmax_(nmax),
      denom_(common_denominator(starts_)) {
  if (nmax_ < 0) throw ModelError("nmax must be nonnegative");
  long start_span = 0;
  for (const auto& s : starts_) start_span = std::max({start_span, std::labs(s.i), std::labs(s.j)});
  span_ = nmax_ + start_span;
}

const Int& CountTable::raw(long n, long i, long j) const {
  if (n < 0 || n > nmax_ || std::labs(i) > span_ || std::labs(j) > span_) return kZero;
  return layers_[n][index(i, j)];
}

Rational CountTable::total(long n) const {
  Int sum = 0;
  for (const Int& v : layers_[n]) sum += v;
  return rat(sum, denom_);
}

BiLaurent CountTable::layer(long n) const {
  BiLaurent p;
  for (long i = -span_; i <= span_; ++i)
    for (long j = -span_; j <= span_; ++j) {
      const Int& v = layers_[n][index(i, j)];
      if (v != 0) p.add_term(i, j, rat(v, denom_));
    }
  return p;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,i,j,count\n";
  for (long n = 0; n <= nmax_; ++n)
    for (long i = -span_; i <= span_; ++i)
      for (long j = -span_; j <= span_; ++j) {
        const Int& v = layers_[n][index(i, j)];
        if (v == 0) continue;
        os << n << "," << i << "," << j << "," << rat_str(rat(v, denom_)) << "\n";
      }
  return os.str();
}

std::string CountTable::to_json() const {
  nlohmann::json j;
  j["model"] = model_.name();
  j["region"] = region_name(region_);
  j["nmax"] = nmax_;
  nlohmann::json rows = nlohmann::json::array();
  for (long n = 0; n <= nmax_; ++n)
    for (long a = -span_; a <= span_; ++a)
      for (long b = -span_; b <= span_; ++b) {
        const Int& v = layers_[n][index(a, b)];
        if (v == 0) continue;
        rows.push_back({{"n", n}, {"i", a}, {"j", b}, {"count", rat_str(rat(v, denom_))}});
      }
  j["counts"] = rows;
  return j.dump();
}

CountTable count_walks(const StepSet& model, Region region,
                       const std::vector<WeightedStart>& starts, long nmax) {
  CountTable t(model, region, starts, nmax);
  long span = t.span_;
  long width = 2 * span + 1;
  std::vector<Int> cur(static_cast<std::size_t>(width) * width, Int(0));
  for (const auto& s : t.starts_) {
    if (!region_contains(region, s.i, s.j)) throw ModelError("start point outside region");
    Rational scaled = s.weight * rat(t.denom_, Int(1));
    if (scaled.get_den() != 1) throw ModelError("internal: start weight not cleared");
    cur[t.index(s.i, s.j)] += scaled.get_num();
  }
  t.layers_.push_back(cur);
  std::vector<Int> next(cur.size(), Int(0));
  for (long n = 1; n <= nmax; ++n) {
    for (auto& v : next) v = 0;
    long reach = span;  // cells outside [-(n-1+start), ...] are zero anyway
    for (long i = -reach; i <= reach; ++i)
      for (long j = -reach; j <= reach; ++j) {
        const Int& v = cur[t.index(i, j)];
        if (v == 0) continue;
        for (const auto& [dx, dy] : model.steps()) {
          long ni = i + dx, nj = j + dy;
          if (std::labs(ni) > span || std::labs(nj) > span) continue;
          if (!region_contains(region, ni, nj)) continue;
          next[t.index(ni, nj)] += v;
        }
      }
    t.layers_.push_back(next);
    std::swap(cur, next);
    // cur now holds layer n after the swap (layers_ stores copies).
  }
  return t;
}

StreamCounts count_walks_stream(const StepSet& model, Region region,
                                const std::vector<WeightedStart>& starts, long nmax,
                                const std::vector<std::pair<long, long>>& targets) {
  StreamCounts out;
  out.nmax = nmax;
  out.denom = common_denominator(starts);
  long start_span = 0;
  for (const auto& s : starts) start_span = std::max({start_span, std::labs(s.i), std::labs(s.j)});
  long span = nmax + start_span;
  long width = 2 * span + 1;
  auto index = [&](long i, long j) { return (i + span) * width + (j + span); };
  std::vector<Int> cur(static_cast<std::size_t>(width) * width, Int(0));
  for (const auto& s : starts) {
    if (!region_contains(region, s.i, s.j)) throw ModelError("start point outside region");
    Rational scaled = s.weight * rat(out.denom, Int(1));
    cur[index(s.i, s.j)] += scaled.get_num();
  }
  for (const auto& tg : targets) out.cells[tg] = {};
  auto record = [&](const std::vector<Int>& layer) {
    Int sum = 0;
    for (const Int& v : layer) sum += v;
    out.totals.push_back(sum);
    for (auto& [tg, vec] : out.cells) {
      bool inside = std::labs(tg.first) <= span && std::labs(tg.second) <= span;
      vec.push_back(inside ? layer[index(tg.first, tg.second)] : Int(0));
    }
  };
  record(cur);
  std::vector<Int> next(cur.size(), Int(0));
  for (long n = 1; n <= nmax; ++n) {
    for (auto& v : next) v = 0;
    for (long i = -span; i <= span; ++i)
      for (long j = -span; j <= span; ++j) {
        const Int& v = cur[index(i, j)];
        if (v == 0) continue;
        for (const auto& [dx, dy] : model.steps()) {
          long ni = i + dx, nj = j + dy;
          if (std::labs(ni) > span || std::labs(nj) > span) continue;
          if (!region_contains(region, ni, nj)) continue;
          next[index(ni, nj)] += v;
        }
      }
    std::swap(cur, next);
    record(cur);
  }
  return out;
}

TSeries assemble_series(const CountTable& table) {
  std::vector<std::pair<long, BiLaurent>> terms;
  for (long n = 0; n <= table.nmax(); ++n) terms.push_back({n, table.layer(n)});
  return TSeries::poly(terms).truncated(table.nmax() + 1);
}

TSeries walk_series(const StepSet& model, Region region, long order) {
  return assemble_series(count_walks(model, region, order - 1));
}

DiagonalSplit split_UD(const TSeries& c, const StepSet& model) {
  bool diagonal_model = model.steps() == StepSet::named("diagonal").steps();
  bool symmetric = model.diagonally_symmetric();
  long stride = diagonal_model ? 2 : 1;
  DiagonalSplit out;
  // Points strictly above the diagonal map to U, on it to D, below to L (or to
  // U again by symmetry).
  auto above = [&](const BiLaurent& p) {
    return p.filter([](long i, long j) { return j > i; }).map_exponents([&](BiLaurent::Key k) {
      long a = (k.second - k.first) / stride - 1;  // u exponent
      return BiLaurent::Key{a, k.second};
    });
  };
  auto below_as_L = [&](const BiLaurent& p) {
    return p.filter([](long i, long j) { return i > j; }).map_exponents([&](BiLaurent::Key k) {
      long a = (k.first - k.second) / stride - 1;
      return BiLaurent::Key{a, k.first};
    });
  };
  auto diag = [&](const BiLaurent& p) {
    return p.filter([](long i, long j) { return i == j; }).map_exponents([](BiLaurent::Key k) {
      return BiLaurent::Key{0, k.second};
    });
  };
  if (diagonal_model) {
    // Off-diagonal distances must be even.
    for (long e = c.val(); e < c.support_end(); ++e)
      for (const auto& [k, v] : c.coeff_s(e).terms())
        if ((k.second - k.first) % 2 != 0)
          throw ModelError("split failed: odd diagonal offset in a diagonal-model series");
  }
  out.U = c.map_coeffs(above);
  out.D = c.map_coeffs(diag);
  TSeries L = c.map_coeffs(below_as_L);
  TSeries recomposed =
      out.U.map_coeffs([&](const BiLaurent& p) {
        return p.map_exponents([&](BiLaurent::Key k) {
          return BiLaurent::Key{-stride * (k.first + 1) + k.second, k.second};
        });
      }) +
      out.D.map_coeffs([](const BiLaurent& p) {
        return p.map_exponents([](BiLaurent::Key k) { return BiLaurent::Key{k.second, k.second}; });
      }) +
      L.map_coeffs([&](const BiLaurent& p) {
        return p.map_exponents([&](BiLaurent::Key k) {
          return BiLaurent::Key{k.second, -stride * (k.first + 1) + k.second};
        });
      });
  if (!(residual(c, recomposed)).known_zero())
    throw ModelError("split failed: U/D/L do not recompose the series");
  if (symmetric) {
    if (!residual(out.U, L).known_zero())
      throw ModelError("split failed: diagonally symmetric model with U != L");
  } else {
    out.L = L;
  }
  return out;
}

TSeries boundary_cminus_x(const TSeries& c) {
  return c.map_coeffs([](const BiLaurent& p) {
    return p.filter([](long i, long j) { return j == 0 && i < 0; }).mirror_x();
  });
}

TSeries boundary_cminus_y(const TSeries& c) {
  return c.map_coeffs([](const BiLaurent& p) {
    return p.filter([](long i, long j) { return i == 0 && j < 0; }).mirror_y();
  });
}

TSeries section_y0(const TSeries& f) {
  return f.map_coeffs([](const BiLaurent& p) {
    return p.filter([](long, long j) { return j == 0; });
  });
}

TSeries section_x0(const TSeries& f) {
  return f.map_coeffs([](const BiLaurent& p) {
    return p.filter([](long i, long) { return i == 0; });
  });
}

Rational coeff00(const TSeries& f, long n) { return f.coeff(0, 0, n); }

TSeries series_A(const StepSet& model, long order) {
  bool simple = model.steps() == StepSet::named("simple").steps();
  bool diagonal = model.steps() == StepSet::named("diagonal").steps();
  if (!simple && !diagonal) throw ModelError("series_A is defined for the simple and diagonal models");
  std::vector<WeightedStart> starts = {{0, 0, rat(2, 3)}, {-2, 0, rat(1, 3)}, {0, -2, rat(1, 3)}};
  TSeries a = assemble_series(count_walks(model, Region::kThreeQuadrant, starts, order - 1));
  // Independent route: C - (Q - xbar^2 Q(xbar,y) - ybar^2 Q(x,ybar)) / 3.
  TSeries c = walk_series(model, Region::kThreeQuadrant, order);
  TSeries q = walk_series(model, Region::kQuadrant, order);
  TSeries qx = q.map_coeffs([](const BiLaurent& p) { return p.mirror_x(); })
                   .mul_coeff(BiLaurent::mono(-2, 0));
  TSeries qy = q.map_coeffs([](const BiLaurent& p) { return p.mirror_y(); })
                   .mul_coeff(BiLaurent::mono(0, -2));
  TSeries a2 = c - rat(1, 3) * (q - qx - qy);
  if (first_mismatch(a, a2, order))
    throw ModelError("series_A: weighted-start route disagrees with the quadrant combination");
  return a;
}

}  // namespace walks
