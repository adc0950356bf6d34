#include "xover/transit_table.hpp"

#include <string>

#include "xover/crossover.hpp"
#include "xover/error.hpp"

namespace xover {

namespace {

std::vector<std::string> word_names(const std::vector<Word>& words) {
  std::vector<std::string> names;
  names.reserve(words.size());
  for (const auto& w : words) names.push_back(w.to_string());
  return names;
}

std::vector<Word> whole_space(const AlphabetSpec& spec, const Limits& limits) {
  require_within("transit table carrier " + spec.to_string(), spec.total_size(),
                 limits.max_table_carrier);
  std::vector<Word> words;
  words.reserve(spec.total_size());
  for (std::uint64_t i = 0; i < spec.total_size(); ++i) words.push_back(spec.word_at(i));
  return words;
}

ElementSet to_bits(const WordSet& s, std::size_t carrier) {
  ElementSet bits(carrier);
  for (auto i : s.indices()) bits.set(i);
  return bits;
}

template <class Members>
TransitTable word_table(const AlphabetSpec& spec, const Limits& limits, Members&& members) {
  TransitTable table(whole_space(spec, limits), limits);
  const auto n = table.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      table.set_symmetric(x, y, to_bits(members(table.word(x), table.word(y)), n));
    }
  }
  return table;
}

}  // namespace

TransitTable::TransitTable(std::vector<std::string> names, const Limits& limits)
    : names_(std::move(names)) {
  require_within("transit table carrier", names_.size(), limits.max_table_carrier);
  entries_.assign(names_.size() * names_.size(), ElementSet(names_.size()));
  sizes_.assign(names_.size() * names_.size(), 0);
}

TransitTable::TransitTable(std::vector<Word> words, const Limits& limits)
    : TransitTable(word_names(words), limits) {
  for (std::size_t i = 1; i < words.size(); ++i) require_compatible(words[0], words[i]);
  words_ = std::move(words);
}

void TransitTable::set_entry(std::size_t x, std::size_t y, ElementSet members) {
  if (x >= size() || y >= size()) throw PreconditionError("transit table index out of range");
  if (members.size() != size()) throw PreconditionError("entry size does not match carrier");
  sizes_[x * size() + y] = static_cast<std::uint32_t>(members.count());
  entries_[x * size() + y] = std::move(members);
}

void TransitTable::set_symmetric(std::size_t x, std::size_t y, const ElementSet& members) {
  set_entry(x, y, members);
  if (x != y) set_entry(y, x, members);
}

void TransitTable::set_symmetric(std::size_t x, std::size_t y,
                                 const std::vector<std::size_t>& members) {
  ElementSet bits(size());
  for (auto m : members) {
    if (m >= size()) throw PreconditionError("transit table element out of range");
    bits.set(m);
  }
  set_symmetric(x, y, bits);
}

std::vector<std::size_t> TransitTable::members(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  const auto& e = entry(x, y);
  for (auto i = e.find_first(); i != e.npos; i = e.find_next(i)) out.push_back(i);
  return out;
}

TransitTable table_from_rset(unsigned k, const AlphabetSpec& spec, const Limits& limits) {
  return word_table(spec, limits,
                    [k](const Word& x, const Word& y) { return rset(k, x, y).members; });
}

TransitTable table_from_closure(unsigned k, const AlphabetSpec& spec, const Limits& limits) {
  return word_table(spec, limits, [k, &limits](const Word& x, const Word& y) {
    return closure(k, x, y, limits);
  });
}

TransitTable table_from_interval(const SimpleGraph& g, const Limits& limits) {
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    names.push_back(g.has_labels() ? g.label(v).to_string() : std::to_string(v));
  }
  TransitTable table = g.has_labels() ? TransitTable(g.labels(), limits)
                                      : TransitTable(std::move(names), limits);
  const DistanceMatrix d(g);
  if (!d.connected()) throw PreconditionError("interval function needs a connected graph");
  const auto n = table.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      ElementSet bits(n);
      for (std::size_t z = 0; z < n; ++z) {
        if (d(x, z) + d(z, y) == d(x, y)) bits.set(z);
      }
      table.set_symmetric(x, y, bits);
    }
  }
  return table;
}

TransitTable closure_table(const TransitTable& table) {
  TransitTable out = table;
  const auto n = table.size();
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ElementSet s = table.empty_set();
      members.clear();
      auto add = [&](std::size_t z) {
        if (!s.test_set(z)) members.push_back(z);
      };
      add(x);
      add(y);
      // Ordered pairs: the table need not be symmetric.
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          for (auto [u, v] : {std::pair{members[i], members[j]}, std::pair{members[j], members[i]}}) {
            const auto& e = table.entry(u, v);
            for (auto z = e.find_first(); z != e.npos; z = e.find_next(z)) add(z);
          }
        }
      }
      out.set_entry(x, y, std::move(s));
    }
  }
  return out;
}

SimpleGraph underlying_graph(const TransitTable& table) {
  SimpleGraph g = table.has_words() ? SimpleGraph(table.words()) : SimpleGraph(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    for (std::size_t y = x + 1; y < table.size(); ++y) {
      if (table.adjacent(x, y)) g.add_edge(x, y);
    }
  }
  return g;
}

}  // namespace xover
