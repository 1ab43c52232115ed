#include "nutgraph/construction.hpp"

#include <charconv>
#include <sstream>

#include "nutgraph/number_theory.hpp"
#include "nutgraph/simd/kernels.hpp"

namespace nutgraph {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::string t = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw SpecError("bad " + std::string(what) + ": '" + t + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw SpecError("factorization overflows");
  return r;
}

}  // namespace

std::uint64_t BlockFactorization::order() const {
  std::uint64_t z = z0;
  for (const auto& f : prime_factors) z = checked_mul(z, f.p);
  for (auto c : complete_factors) z = checked_mul(z, c);
  return z;
}

std::uint64_t BlockFactorization::valence() const {
  std::uint64_t v = 1;
  for (const auto& f : prime_factors) v = checked_mul(v, f.d);
  for (auto c : complete_factors) v = checked_mul(v, c - 1);
  return v;
}

void BlockFactorization::validate() const {
  if (z0 < 1) throw SpecError("loop factor must be at least 1");
  for (const auto& f : prime_factors) {
    if (f.p < 3 || !is_prime_u64(f.p)) throw SpecError(std::to_string(f.p) + " is not an odd prime");
    if (f.d == 0 || f.d % 2 != 0) throw SpecError("circulant valence " + std::to_string(f.d) + " is not even");
    if ((f.p - 1) % f.d != 0) {
      throw SpecError(std::to_string(f.d) + " does not divide " + std::to_string(f.p) + "-1");
    }
  }
  for (auto c : complete_factors) {
    if (c < 2) throw SpecError("complete factor must be at least 2");
  }
}

BlockFactorization parse_factorization(std::string_view text) {
  auto parts = split(text, '|');
  if (parts.size() != 3) throw SpecError("factorization needs the form z0|p^(d),...|z',...: '" + std::string(text) + "'");
  BlockFactorization f;
  f.z0 = parse_count(parts[0], "loop factor");
  if (!trim(parts[1]).empty()) {
    for (const auto& item : split(parts[1], ',')) {
      std::string s = trim(item);
      auto caret = s.find("^(");
      if (caret == std::string::npos || s.back() != ')') throw SpecError("bad circulant factor '" + s + "'");
      PrimeCirculantFactor pf;
      pf.p = parse_count(std::string_view(s).substr(0, caret), "prime");
      pf.d = parse_count(std::string_view(s).substr(caret + 2, s.size() - caret - 3), "circulant valence");
      f.prime_factors.push_back(pf);
    }
  }
  if (!trim(parts[2]).empty()) {
    for (const auto& item : split(parts[2], ',')) f.complete_factors.push_back(parse_count(item, "complete factor"));
  }
  f.validate();
  return f;
}

BlockFactorization parse_factorization(std::string_view text, std::uint64_t z) {
  BlockFactorization f = parse_factorization(text);
  if (f.order() != z) {
    throw SpecError("factorization '" + std::string(text) + "' has product " + std::to_string(f.order()) +
                    ", expected " + std::to_string(z));
  }
  return f;
}

std::string format(const BlockFactorization& f) {
  std::string out = std::to_string(f.z0) + "|";
  for (std::size_t i = 0; i < f.prime_factors.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(f.prime_factors[i].p) + "^(" + std::to_string(f.prime_factors[i].d) + ")";
  }
  out += '|';
  for (std::size_t i = 0; i < f.complete_factors.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(f.complete_factors[i]);
  }
  return out;
}

MultiGraph build_block(const BlockFactorization& f) {
  f.validate();
  MultiGraph g = loops(static_cast<std::size_t>(f.z0));
  for (const auto& pf : f.prime_factors) g = kronecker(g, subgroup_circulant(pf.p, pf.d));
  for (auto c : f.complete_factors) g = kronecker(g, complete(static_cast<std::size_t>(c)));
  return g;
}

std::string to_string(const ParameterTuple& t) {
  std::ostringstream os;
  os << '<' << t.n1 << ',' << t.k1 << ',' << t.d1 << ',' << t.n2 << ',' << t.k2 << ',' << t.d2 << '>';
  return os.str();
}

bool valence_condition(const ParameterTuple& t) { return t.k1 * t.k2 == t.d1 * t.d2; }

Bipartition Bipartition::prefix(std::size_t order, std::size_t n1) {
  if (n1 > order) throw std::invalid_argument("partition larger than the graph");
  Bipartition b;
  b.in_v.assign(order, false);
  for (std::size_t i = 0; i < n1; ++i) b.in_v[i] = true;
  return b;
}

std::size_t Bipartition::size_v() const {
  std::size_t c = 0;
  for (bool x : in_v) c += x ? 1 : 0;
  return c;
}

ParameterTuple extract_tuple(const MultiGraph& g, const Bipartition& partition) {
  if (partition.in_v.size() != g.order()) throw std::invalid_argument("partition does not cover the graph");
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> mask(words, 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (partition.in_v[x]) mask[x / 64] |= std::uint64_t{1} << (x % 64);
  }
  const auto& kernels = simd::active();
  std::optional<std::size_t> k1, d1, k2, d2;
  auto settle = [](std::optional<std::size_t>& slot, std::size_t value) {
    if (slot && *slot != value) throw NotBiRegular();
    slot = value;
  };
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t to_v = kernels.and_popcount(g.row_bits(x).data(), mask.data(), words);
    const std::size_t to_u = g.valence(x) - to_v;
    if (partition.in_v[x]) {
      settle(k1, to_v);
      settle(d1, to_u);
    } else {
      settle(k2, to_u);
      settle(d2, to_v);
    }
  }
  ParameterTuple t;
  t.n1 = partition.size_v();
  t.n2 = partition.size_u();
  t.k1 = k1.value_or(0);
  t.d1 = d1.value_or(0);
  t.k2 = k2.value_or(0);
  t.d2 = d2.value_or(0);
  if (t.n1 * t.d1 != t.n2 * t.d2) throw NotBiRegular();
  return t;
}

MultiGraph MergeSpec::delta2() const {
  switch (delta2_mode) {
    case Delta2Mode::diagonal:
      return loops(n());
    case Delta2Mode::same_as_delta1:
      return lambda1;
    case Delta2Mode::explicit_graph:
      break;
  }
  return delta2_graph;
}

MergeSpec effective_spec(const MergeSpec& spec, bool* adjusted) {
  if (adjusted != nullptr) *adjusted = false;
  if (spec.n() < 1 || spec.m() < 1 || spec.t() < 1) throw SpecError("empty block in merge spec");
  if (spec.delta2_mode == Delta2Mode::explicit_graph && spec.delta2_graph.order() != spec.n()) {
    throw SpecError("delta2 graph must have the order of lambda1");
  }
  MergeSpec out = spec;
  if (spec.lambda1.has_loops() && spec.lambda4.has_loops()) {
    if (spec.lambda1.loops_only() && spec.lambda4.loops_only()) throw SpecError("Δ1 and Δ4 both diagonal");
    throw SpecError("lambda1 and lambda4 both carry loops");
  }
  const MultiGraph d2 = spec.delta2();
  if (d2.has_loops() && spec.lambda5.has_loops()) {
    if (d2.loops_only() && spec.lambda5.loops_only() && spec.t() % 2 == 0) {
      out.lambda5 = kronecker(loops(spec.t() / 2), complete(2));
      if (adjusted != nullptr) *adjusted = true;
    } else if (d2.loops_only() && spec.lambda5.loops_only()) {
      throw SpecError("Δ2 and Δ5 both diagonal");
    } else {
      throw SpecError("delta2 and lambda5 both carry loops");
    }
  }
  if (spec.delta3_arcs) {
    for (auto [i, j] : *spec.delta3_arcs) {
      if (i >= spec.n() || j >= spec.n()) throw SpecError("delta3 arc out of range");
    }
  }
  return out;
}

MergedGraph merge(const MergeSpec& spec) {
  MergedGraph result;
  result.effective = effective_spec(spec, &result.adjusted);
  const MergeSpec& s = result.effective;
  const std::size_t n = s.n(), m = s.m(), t = s.t();
  const std::size_t nv = n * m;
  MultiGraph g(n * (m + t));
  const MultiGraph gv = kronecker(s.lambda1, s.lambda4);
  const MultiGraph gu = kronecker(s.delta2(), s.lambda5);
  for (auto [x, y] : gv.edges()) g.add_edge(x, y);
  for (auto [x, y] : gu.edges()) g.add_edge(nv + x, nv + y);
  auto cross = [&](std::size_t i, std::size_t i2) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t j2 = 0; j2 < t; ++j2) g.add_edge(i * m + j, nv + i2 * t + j2);
    }
  };
  if (s.delta3_arcs) {
    for (auto [i, i2] : *s.delta3_arcs) cross(i, i2);
  } else {
    for (std::size_t i = 0; i < n; ++i) cross(i, i);
  }
  if (g.has_loops()) throw SpecError("merged graph has loops");
  std::vector<std::string> labels;
  labels.reserve(g.order());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) labels.push_back("v" + std::to_string(i) + "^" + std::to_string(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < t; ++j) labels.push_back("u" + std::to_string(i) + "^" + std::to_string(j));
  }
  g.set_labels(std::move(labels));
  result.partition = Bipartition::prefix(g.order(), nv);
  try {
    result.tuple = extract_tuple(g, result.partition);
  } catch (const NotBiRegular&) {
    result.bi_regular = false;
  }
  result.graph = std::move(g);
  return result;
}

}  // namespace nutgraph
