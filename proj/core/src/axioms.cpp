#include "xover/axioms.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>

#include "xover/error.hpp"
#include "xover/graph.hpp"

namespace xover {

namespace {

using Tuple = std::array<std::size_t, 6>;

struct Entry {
  Axiom axiom;
  std::string_view id;
  std::size_t arity;
};

constexpr std::array<Entry, 26> kCatalog{{
    {Axiom::A1, "A1", 3},   {Axiom::A2, "A2", 1},   {Axiom::A2p, "A2p", 1},
    {Axiom::A3, "A3", 4},   {Axiom::A4, "A4", 6},   {Axiom::AX, "AX", 6},
    {Axiom::AXp, "AXp", 6}, {Axiom::B1, "B1", 3},   {Axiom::B2, "B2", 3},
    {Axiom::B3, "B3", 4},   {Axiom::C4, "C4", 3},   {Axiom::CG, "CG", 4},
    {Axiom::CGp, "CGp", 4}, {Axiom::GW3, "GW3", 4}, {Axiom::GW4, "GW4", 3},
    {Axiom::H3, "H3", 4},   {Axiom::M, "M", 4},     {Axiom::MG, "MG", 3},
    {Axiom::MM, "MM", 4},   {Axiom::MO, "MO", 3},   {Axiom::Pa, "Pa", 5},
    {Axiom::S1, "S1", 4},   {Axiom::S2, "S2", 4},   {Axiom::T1, "T1", 2},
    {Axiom::T2, "T2", 2},   {Axiom::T3, "T3", 1},
}};

const Entry& entry_of(Axiom a) { return kCatalog[static_cast<std::size_t>(a)]; }

bool six_variable(Axiom a) { return a == Axiom::A4 || a == Axiom::AX || a == Axiom::AXp; }

bool uses_closure(Axiom a, const CheckOptions& options) {
  if (a == Axiom::CGp) return true;
  return options.closure_for_geometric &&
         (a == Axiom::S1 || a == Axiom::S2 || a == Axiom::MO);
}

bool subset(const ElementSet& a, const ElementSet& b) { return a.is_subset_of(b); }

// Evaluation context for one table. Candidate enumeration only skips tuples
// whose premise is false, so the first failing body in enumeration order is
// the first counterexample in canonical quantifier order.
class Checker {
 public:
  Checker(const TransitTable& table, const CheckOptions& options)
      : t_(table), n_(table.size()), options_(options) {
    near_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (t_.entry_size(a, b) == 2 || t_.entry_size(b, a) == 2) near_[a].push_back(b);
      }
    }
  }

  bool body(Axiom ax, const Tuple& v) {
    const auto& t = t_;
    switch (ax) {
      case Axiom::T1: {
        auto [x, y] = std::pair{v[0], v[1]};
        return t.contains(x, y, x) && t.contains(x, y, y);
      }
      case Axiom::T2:
        return t.entry(v[0], v[1]) == t.entry(v[1], v[0]);
      case Axiom::T3:
        return t.entry_size(v[0], v[0]) == 1 && t.contains(v[0], v[0], v[0]);
      case Axiom::GW4: {
        auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
        return !t.contains(x, y, z) || t.entry_size(x, z) <= t.entry_size(x, y);
      }
      case Axiom::GW3: {
        auto [x, y, u, w] = std::tuple{v[0], v[1], v[2], v[3]};
        return !(t.contains(x, y, u) && t.contains(x, y, w)) ||
               t.entry_size(u, w) <= t.entry_size(x, y);
      }
      case Axiom::B1: {
        auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
        return !(t.contains(x, y, z) && z != y) || !t.contains(x, z, y);
      }
      case Axiom::B2: {
        auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
        return !t.contains(x, y, z) || subset(t.entry(x, z), t.entry(x, y));
      }
      case Axiom::B3: {
        auto [x, y, z, w] = std::tuple{v[0], v[1], v[2], v[3]};
        return !(t.contains(x, y, z) && t.contains(x, z, w)) || t.contains(w, y, z);
      }
      case Axiom::M: {
        auto [x, y, u, w] = std::tuple{v[0], v[1], v[2], v[3]};
        return !(t.contains(x, y, u) && t.contains(x, y, w)) ||
               subset(t.entry(u, w), t.entry(x, y));
      }
      case Axiom::MM: {
        auto [u, w, x, y] = std::tuple{v[0], v[1], v[2], v[3]};
        ElementSet meet = t.entry(u, w) & t.entry(x, y);
        return meet.none() || entry_sets().count(meet) > 0;
      }
      case Axiom::MG: {
        auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
        if (!t.contains(x, y, z)) return true;
        const auto& d = distances();
        if (d(x, y) == kUnreachable) return false;
        return d(x, z) != kUnreachable && d(z, y) != kUnreachable &&
               d(x, z) + d(z, y) == d(x, y);
      }
      case Axiom::CG: {
        auto [a, x, y, z] = std::tuple{v[0], v[1], v[2], v[3]};
        if (!subset(t.entry(a, x), t.entry(a, y))) return true;
        bool between = subset(t.entry(a, x), t.entry(a, z)) && subset(t.entry(a, z), t.entry(a, y));
        return between == t.contains(x, y, z);
      }
      case Axiom::CGp: {
        auto [a, x, y, z] = std::tuple{v[0], v[1], v[2], v[3]};
        if (!t.contains(a, y, x)) return true;
        bool between = t.contains(a, z, x) && t.contains(a, y, z);
        return between == t.contains(x, y, z);
      }
      case Axiom::Pa: {
        auto [p, a, b, a1, b1] = std::tuple{v[0], v[1], v[2], v[3], v[4]};
        return !(t.contains(p, a, a1) && t.contains(p, b, b1)) ||
               t.entry(a1, b).intersects(t.entry(b1, a));
      }
      case Axiom::C4: {
        auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
        if (!t.contains(x, y, z)) return true;
        ElementSet meet = t.entry(x, z) & t.entry(z, y);
        return meet.count() == 1 && meet.test(z);
      }
      case Axiom::MO: {
        auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
        return (t.entry(x, y) & t.entry(y, z) & t.entry(z, x)).any();
      }
      case Axiom::S1: {
        auto [x, y, z, w] = std::tuple{v[0], v[1], v[2], v[3]};
        bool premise = t.entry_size(x, y) == 2 && t.entry_size(z, w) == 2 && t.contains(y, w, x) &&
                       t.contains(x, z, y) && t.contains(x, z, w);
        return !premise || t.contains(y, w, z);
      }
      case Axiom::S2: {
        auto [x, y, z, w] = std::tuple{v[0], v[1], v[2], v[3]};
        bool premise = t.entry_size(x, y) == 2 && t.entry_size(z, w) == 2 && t.contains(x, z, y) &&
                       !t.contains(x, z, w) && !t.contains(y, w, z);
        return !premise || t.contains(x, w, y);
      }
      case Axiom::A1: {
        auto [x, u, w] = std::tuple{v[0], v[1], v[2]};
        bool premise = t.entry_size(x, u) == 2 && t.entry_size(x, w) == 2 && u != w &&
                       t.entry_size(u, w) != 2;
        if (!premise) return true;
        std::size_t count = 0;
        for (std::size_t y = 0; y < n_; ++y) {
          if (y != x && t.entry_size(y, u) == 2 && t.entry_size(y, w) == 2) ++count;
        }
        return count == 1;
      }
      case Axiom::A2:
      case Axiom::A2p: {
        auto [delta, order] = ax == Axiom::A2 ? hypercube_target() : hamming_target();
        return order && *order == n_ && degrees()[v[0]] == delta;
      }
      case Axiom::A3: {
        auto [x, y, u, w] = std::tuple{v[0], v[1], v[2], v[3]};
        bool premise = t.entry_size(x, u) == 2 && t.entry_size(x, w) == 2 &&
                       t.entry_size(y, u) == 2 && t.entry_size(y, w) == 2 &&
                       t.entry_size(x, y) == 2;
        return !premise || !(t.entry_size(u, w) > 2);
      }
      case Axiom::A4: {
        auto [x, y, u, w, q, z] = std::tuple{v[0], v[1], v[2], v[3], v[4], v[5]};
        // Variables in statement order x, y, u, v, w, z; `w` holds v and `q` holds w.
        auto two = [&](std::size_t a, std::size_t b) { return t.entry_size(a, b) == 2; };
        auto big = [&](std::size_t a, std::size_t b) { return t.entry_size(a, b) > 2; };
        bool all = two(x, u) && two(x, w) && two(y, u) && two(y, w) && two(w, q) && two(y, z) &&
                   two(q, z) && two(x, q) && big(u, w) && big(u, q) && big(u, z) && big(x, y) &&
                   big(x, z) && big(w, z) && big(y, q);
        return !all;
      }
      case Axiom::AX:
      case Axiom::AXp: {
        auto [a, b, c, d, e, f] = std::tuple{v[0], v[1], v[2], v[3], v[4], v[5]};
        bool edges = t.entry_size(a, b) == 2 && t.entry_size(c, d) == 2 && t.entry_size(e, f) == 2;
        if (!edges) return true;
        if (ax == Axiom::AX) return !(par(a, b, c, d) && par(c, d, e, f)) || par(a, b, e, f);
        bool premise = t.contains(a, d, b) && t.contains(a, d, c) && t.contains(b, c, a) &&
                       t.contains(b, c, d) && t.contains(c, f, d) && t.contains(c, f, e) &&
                       t.contains(d, e, c) && t.contains(d, e, f);
        return !premise || (t.contains(a, f, b) && t.contains(a, f, e) && t.contains(b, e, a) &&
                            t.contains(b, e, f));
      }
      case Axiom::H3: {
        auto [x, y, u, w] = std::tuple{v[0], v[1], v[2], v[3]};
        bool premise = u != w && x != y && t.entry_size(x, y) > 4 &&
                       subset(t.entry(u, w), t.entry(x, y));
        if (!premise) return true;
        const auto& r = t.entry(u, w);
        bool trivial = r.count() == 2 && r.test(u) && r.test(w);
        bool same = (u == x && w == y) || (u == y && w == x);
        return trivial || same;
      }
    }
    return true;
  }

  // Returns the first violating tuple, if any.
  std::optional<Tuple> search(Axiom ax) {
    std::optional<Tuple> found;
    auto visit = [&](const Tuple& v) {
      if (body(ax, v)) return false;
      found = v;
      return true;
    };
    enumerate(ax, visit);
    return found;
  }

 private:
  template <class Visit>
  void enumerate(Axiom ax, Visit&& visit) {
    const auto& t = t_;
    const std::size_t n = n_;
    auto members = [&](std::size_t x, std::size_t y) { return t.members(x, y); };
    switch (ax) {
      case Axiom::T3:
      case Axiom::A2:
      case Axiom::A2p:
        for (std::size_t x = 0; x < n; ++x) {
          if (visit(Tuple{x})) return;
        }
        return;
      case Axiom::T1:
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (visit(Tuple{x, y})) return;
          }
        }
        return;
      case Axiom::T2:
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x + 1; y < n; ++y) {
            if (visit(Tuple{x, y})) return;
          }
        }
        return;
      case Axiom::GW4:
      case Axiom::B1:
      case Axiom::B2:
      case Axiom::C4:
      case Axiom::MG:
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            for (auto z : members(x, y)) {
              if (visit(Tuple{x, y, z})) return;
            }
          }
        }
        return;
      case Axiom::MO:
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
              if (visit(Tuple{x, y, z})) return;
            }
          }
        }
        return;
      case Axiom::GW3:
      case Axiom::M:
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            auto r = members(x, y);
            for (auto u : r) {
              for (auto w : r) {
                if (visit(Tuple{x, y, u, w})) return;
              }
            }
          }
        }
        return;
      case Axiom::B3:
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            for (auto z : members(x, y)) {
              for (auto w : members(x, z)) {
                if (visit(Tuple{x, y, z, w})) return;
              }
            }
          }
        }
        return;
      case Axiom::MM:
      case Axiom::CG:
      case Axiom::CGp:
      case Axiom::H3:
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (ax == Axiom::H3 && (a == b || t.entry_size(a, b) <= 4)) continue;
            for (std::size_t c = 0; c < n; ++c) {
              for (std::size_t d = 0; d < n; ++d) {
                if (visit(Tuple{a, b, c, d})) return;
              }
            }
          }
        }
        return;
      case Axiom::Pa:
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t a = 0; a < n; ++a) {
            auto ra = members(p, a);
            for (std::size_t b = 0; b < n; ++b) {
              auto rb = members(p, b);
              for (auto a1 : ra) {
                for (auto b1 : rb) {
                  if (visit(Tuple{p, a, b, a1, b1})) return;
                }
              }
            }
          }
        }
        return;
      case Axiom::S1:
      case Axiom::S2:
        for (std::size_t x = 0; x < n; ++x) {
          for (auto y : near_[x]) {
            for (std::size_t z = 0; z < n; ++z) {
              for (auto w : near_[z]) {
                if (visit(Tuple{x, y, z, w})) return;
              }
            }
          }
        }
        return;
      case Axiom::A1:
        for (std::size_t x = 0; x < n; ++x) {
          for (auto u : near_[x]) {
            for (auto w : near_[x]) {
              if (visit(Tuple{x, u, w})) return;
            }
          }
        }
        return;
      case Axiom::A3:
        for (std::size_t x = 0; x < n; ++x) {
          for (auto y : near_[x]) {
            for (auto u : near_[x]) {
              for (auto w : near_[x]) {
                if (visit(Tuple{x, y, u, w})) return;
              }
            }
          }
        }
        return;
      case Axiom::A4:
        // Statement order x, y, u, v, w, z: y ~ u, v ~ x, w ~ x, z ~ w.
        for (std::size_t x = 0; x < n; ++x) {
          for (auto u : near_[x]) {
            for (auto y : near_[u]) {
              for (auto v : near_[x]) {
                for (auto w : near_[x]) {
                  for (auto z : near_[w]) {
                    if (visit(Tuple{x, y, u, v, w, z})) return;
                  }
                }
              }
            }
          }
        }
        return;
      case Axiom::AX:
      case Axiom::AXp:
        for (std::size_t a = 0; a < n; ++a) {
          for (auto b : near_[a]) {
            for (std::size_t c = 0; c < n; ++c) {
              for (auto d : near_[c]) {
                if (!par(a, b, c, d)) continue;
                for (std::size_t e = 0; e < n; ++e) {
                  for (auto f : near_[e]) {
                    if (!par(c, d, e, f)) continue;
                    if (visit(Tuple{a, b, c, d, e, f})) return;
                  }
                }
              }
            }
          }
        }
        return;
    }
  }

  // Oriented-edge relation uv || xy.
  bool par(std::size_t u, std::size_t v, std::size_t x, std::size_t y) const {
    return t_.contains(u, y, v) && t_.contains(u, y, x) && t_.contains(v, x, u) &&
           t_.contains(v, x, y);
  }

  const std::set<ElementSet>& entry_sets() {
    if (!entry_sets_) {
      entry_sets_ = std::make_unique<std::set<ElementSet>>();
      for (std::size_t p = 0; p < n_; ++p) {
        for (std::size_t q = 0; q < n_; ++q) entry_sets_->insert(t_.entry(p, q));
      }
    }
    return *entry_sets_;
  }

  const DistanceMatrix& distances() {
    if (!distances_) distances_ = std::make_unique<DistanceMatrix>(underlying_graph(t_));
    return *distances_;
  }

  const std::vector<std::size_t>& degrees() {
    if (degrees_.empty()) {
      auto g = underlying_graph(t_);
      for (Vertex v = 0; v < g.vertex_count(); ++v) degrees_.push_back(g.degree(v));
    }
    return degrees_;
  }

  // (delta, |X|) demanded by A2; |X| is nullopt when it overflows.
  std::pair<std::size_t, std::optional<std::uint64_t>> hypercube_target() {
    std::size_t delta = options_.params.n ? *options_.params.n
                                          : (degrees().empty() ? 0 : degrees()[0]);
    if (delta >= 64) return {delta, std::nullopt};
    return {delta, std::uint64_t{1} << delta};
  }

  std::pair<std::size_t, std::optional<std::uint64_t>> hamming_target() {
    const auto& sizes = *options_.params.sizes;
    std::size_t delta = 0;
    std::uint64_t order = 1;
    for (auto a : sizes) {
      delta += a - 1;
      if (__builtin_mul_overflow(order, std::uint64_t{a}, &order)) return {delta, std::nullopt};
    }
    return {delta, order};
  }

  const TransitTable& t_;
  std::size_t n_;
  const CheckOptions& options_;
  std::vector<std::vector<std::size_t>> near_;
  std::unique_ptr<std::set<ElementSet>> entry_sets_;
  std::unique_ptr<DistanceMatrix> distances_;
  std::vector<std::size_t> degrees_;
};

CheckOptions resolved(const TransitTable& table, Axiom axiom, const CheckOptions& options) {
  CheckOptions out = options;
  if (axiom == Axiom::A2p && !out.params.sizes) {
    if (out.params.n && table.has_words() && table.words()[0].spec().sizes().size() > 0) {
      const auto& sizes = table.words()[0].spec().sizes();
      bool uniform = std::all_of(sizes.begin(), sizes.end(), [&](auto a) { return a == sizes[0]; });
      if (!uniform) throw PreconditionError("A2' needs alphabet sizes");
      out.params.sizes = std::vector<std::uint32_t>(*out.params.n, sizes[0]);
    } else if (table.has_words()) {
      out.params.sizes = table.words()[0].spec().sizes();
    } else {
      throw PreconditionError("A2' needs alphabet sizes");
    }
  }
  return out;
}

AxiomReport run(const TransitTable& table, const TransitTable* closure, Axiom axiom,
                const CheckOptions& options) {
  AxiomReport report;
  report.axiom = axiom;
  report.universe = table.size();
  if (six_variable(axiom)) {
    require_within(std::string(axiom_id(axiom)) + " carrier", table.size(),
                   options.limits.max_six_variable_carrier);
  }
  auto opts = resolved(table, axiom, options);
  const TransitTable* target = &table;
  if (uses_closure(axiom, options)) {
    report.evaluated = Evaluated::closure;
    target = closure;
    report.note = *closure == table ? "table equals its closure"
                                    : "evaluated on the internally computed closure";
  }
  Checker checker(*target, opts);
  if (auto v = checker.search(axiom)) {
    report.holds = false;
    report.witness.assign(v->begin(), v->begin() + entry_of(axiom).arity);
  }
  return report;
}

const AxiomReport* find(const std::vector<AxiomReport>& reports, Axiom a) {
  for (const auto& r : reports) {
    if (r.axiom == a && !r.skipped) return &r;
  }
  return nullptr;
}

}  // namespace

const std::vector<Axiom>& axiom_catalog() {
  static const std::vector<Axiom> all = [] {
    std::vector<Axiom> v;
    for (const auto& e : kCatalog) v.push_back(e.axiom);
    return v;
  }();
  return all;
}

std::string_view axiom_id(Axiom a) { return entry_of(a).id; }

Axiom parse_axiom(std::string_view id) {
  std::string list;
  for (const auto& e : kCatalog) {
    if (e.id == id) return e.axiom;
    if (!list.empty()) list += ", ";
    list += e.id;
  }
  throw PreconditionError("unknown axiom '" + std::string(id) + "'; catalog: " + list);
}

AxiomReport check_axiom(const TransitTable& table, Axiom axiom, const CheckOptions& options) {
  std::unique_ptr<TransitTable> closure;
  if (uses_closure(axiom, options)) closure = std::make_unique<TransitTable>(closure_table(table));
  return run(table, closure.get(), axiom, options);
}

bool axiom_holds_at(const TransitTable& table, Axiom axiom, const std::vector<std::size_t>& witness,
                    const CheckOptions& options) {
  if (witness.size() != entry_of(axiom).arity) {
    throw PreconditionError("witness for " + std::string(axiom_id(axiom)) + " needs " +
                            std::to_string(entry_of(axiom).arity) + " elements");
  }
  for (auto w : witness) {
    if (w >= table.size()) throw PreconditionError("witness element out of range");
  }
  Tuple v{};
  std::copy(witness.begin(), witness.end(), v.begin());
  auto opts = resolved(table, axiom, options);
  if (uses_closure(axiom, options)) {
    auto closure = closure_table(table);
    return Checker(closure, opts).body(axiom, v);
  }
  return Checker(table, opts).body(axiom, v);
}

std::vector<AxiomReport> check_all(const TransitTable& table, const CheckOptions& options) {
  auto closure = closure_table(table);
  std::vector<AxiomReport> reports;
  for (auto axiom : axiom_catalog()) {
    AxiomReport skipped;
    skipped.axiom = axiom;
    skipped.universe = table.size();
    skipped.skipped = true;
    if (six_variable(axiom) && table.size() > options.limits.max_six_variable_carrier) {
      skipped.note = "carrier exceeds the six-variable bound " +
                     std::to_string(options.limits.max_six_variable_carrier);
      reports.push_back(skipped);
      continue;
    }
    if (axiom == Axiom::A2p && !options.params.sizes && !table.has_words()) {
      skipped.note = "no alphabet sizes given";
      reports.push_back(skipped);
      continue;
    }
    reports.push_back(run(table, &closure, axiom, options));
  }
  check_implications(table, reports);
  return reports;
}

void check_implications(const TransitTable& table, const std::vector<AxiomReport>& reports) {
  auto holds = [&](Axiom a) -> std::optional<bool> {
    if (auto r = find(reports, a); r && r->evaluated == Evaluated::table) return r->holds;
    return std::nullopt;
  };
  auto fail = [](std::string_view from, std::string_view to) {
    throw InternalError("implication " + std::string(from) + " => " + std::string(to) +
                        " violated");
  };
  auto implies = [&](Axiom a, Axiom b) {
    auto ha = holds(a);
    auto hb = holds(b);
    if (ha && hb && *ha && !*hb) fail(axiom_id(a), axiom_id(b));
  };
  implies(Axiom::M, Axiom::GW3);
  bool transit = holds(Axiom::T1).value_or(false) && holds(Axiom::T2).value_or(false) &&
                 holds(Axiom::T3).value_or(false);
  if (transit) {
    implies(Axiom::M, Axiom::B2);
    implies(Axiom::Pa, Axiom::B3);
    implies(Axiom::C4, Axiom::B1);
    implies(Axiom::CG, Axiom::B2);
  }
  if (holds(Axiom::CG).value_or(false) && transit && !is_connected(underlying_graph(table))) {
    fail("CG", "connected underlying graph");
  }
}

std::optional<std::size_t> transit_degree(const TransitTable& table) {
  auto g = underlying_graph(table);
  if (g.vertex_count() == 0) return 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) return std::nullopt;
  }
  return g.degree(0);
}

std::optional<std::vector<std::size_t>> find_non_unique_median(const TransitTable& table) {
  const auto n = table.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        auto meet = table.entry(x, y) & table.entry(y, z) & table.entry(z, x);
        if (meet.count() != 1) return std::vector<std::size_t>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

namespace {

RecognitionResult recognize(const TransitTable& table, const std::vector<Axiom>& axioms,
                            const CheckOptions& options) {
  RecognitionResult result;
  if (!is_connected(underlying_graph(table))) {
    auto closure = closure_table(table);
    if (!check_axiom(closure, Axiom::Pa, options).holds) {
      throw PreconditionError("connectivity precondition unmet");
    }
    result.via_pasch_closure = true;
  }
  result.recognized = true;
  for (auto a : axioms) {
    result.reports.push_back(check_axiom(table, a, options));
    result.recognized = result.recognized && result.reports.back().holds;
  }
  return result;
}

}  // namespace

RecognitionResult recognize_hypercube(const TransitTable& table, unsigned n, const Limits& limits) {
  CheckOptions options;
  options.limits = limits;
  options.params.n = n;
  return recognize(table, {Axiom::A1, Axiom::A2}, options);
}

RecognitionResult recognize_hamming(const TransitTable& table, std::vector<std::uint32_t> sizes,
                                    const Limits& limits) {
  CheckOptions options;
  options.limits = limits;
  options.params.sizes = std::move(sizes);
  return recognize(table, {Axiom::A1, Axiom::A2p, Axiom::A3, Axiom::A4}, options);
}

}  // namespace xover
