#include "nutgraph/nut_verify.hpp"

#include <sstream>
#include <stdexcept>

namespace nutgraph {
namespace {

NutCertificate from_nullity(const MultiGraph& g, NullityResult r) {
  NutCertificate c;
  c.order = g.order();
  c.connected = is_connected(g);
  c.nullity = r.nullity;
  c.method = r.method;
  if (r.nullity == 1) {
    RationalVector x = std::move(r.basis.front());
    normalize_leading_one(x);
    c.min_abs_entry = abs(x.front());
    for (const auto& e : x) {
      BigRational a = abs(e);
      if (a < c.min_abs_entry) c.min_abs_entry = a;
    }
    c.kernel = std::move(x);
  }
  c.is_nut = c.connected && c.nullity == 1 && c.min_abs_entry > 0;
  return c;
}

void require_simple(const MultiGraph& g) {
  if (g.has_loops()) throw std::invalid_argument("nut graphs are simple; graph has loops");
  if (g.order() == 0) throw std::invalid_argument("empty graph");
}

}  // namespace

NutCertificate is_nut(const MultiGraph& g) {
  require_simple(g);
  return from_nullity(g, nullspace_rational(g.adjacency_matrix()));
}

NutCertificate is_nut(const MultiGraph& g, const Bipartition& partition, const ParameterTuple& tuple) {
  require_simple(g);
  const IntMatrix a = g.adjacency_matrix();
  if (tuple.d1 > 0) {
    const RationalVector candidate = canonical_kernel(tuple, partition);
    try {
      return from_nullity(g, certify_nullity_one(a, candidate));
    } catch (const CandidateNotInKernel&) {
    }
  }
  return from_nullity(g, nullspace_rational(a));
}

RationalVector canonical_kernel(const ParameterTuple& t, const Bipartition& partition) {
  if (t.d1 == 0) throw std::invalid_argument("canonical kernel needs d1 >= 1");
  if (partition.size_v() != t.n1 || partition.size_u() != t.n2) {
    throw std::invalid_argument("partition sizes disagree with the tuple");
  }
  BigRational u_value(-static_cast<long>(t.k1), static_cast<unsigned long>(t.d1));
  u_value.canonicalize();
  RationalVector x;
  x.reserve(partition.in_v.size());
  for (bool in_v : partition.in_v) x.push_back(in_v ? BigRational(1) : u_value);
  return x;
}

RationalVector canonical_kernel(const ParameterTuple& t) {
  return canonical_kernel(t, Bipartition::prefix(t.n1 + t.n2, t.n1));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nut:
      return "nut";
    case Verdict::not_nut:
      return "not_nut";
    case Verdict::inapplicable:
      return "inapplicable";
  }
  return "?";
}

TheoremKPrediction theorem_k_predict(const MergeSpec& raw) {
  TheoremKPrediction p;
  MergeSpec spec;
  try {
    spec = effective_spec(raw);
  } catch (const SpecError& e) {
    p.reasons.push_back(std::string("invalid spec: ") + e.what());
    return p;
  }
  if (!spec.delta3_diagonal()) p.reasons.push_back("Δ3 not diagonal");
  if (spec.order() % 2 == 0) p.reasons.push_back("order even");
  const MultiGraph d2 = spec.delta2();
  if (!is_nonsingular(spec.lambda1)) p.reasons.push_back("Λ1 singular");
  if (spec.delta2_mode == Delta2Mode::explicit_graph && !is_nonsingular(d2)) p.reasons.push_back("Λ2 singular");
  const bool regular = stats(spec.lambda1).regular && stats(d2).regular && stats(spec.lambda4).regular &&
                       stats(spec.lambda5).regular;
  if (!regular) p.reasons.push_back("irregular block");
  if (!p.reasons.empty()) return p;

  const std::size_t k1 = spec.lambda1.valence(0) * spec.lambda4.valence(0);
  const std::size_t k2 = d2.valence(0) * spec.lambda5.valence(0);
  const std::size_t d1 = spec.t();
  const std::size_t d2v = spec.m();
  if (!is_nonsingular(spec.lambda4)) p.reasons.push_back("Λ4 singular");
  if (!is_nonsingular(spec.lambda5)) p.reasons.push_back("Λ5 singular");
  if (!is_connected(union_graph(spec.lambda1, d2))) p.reasons.push_back("Δ1 ∪ Δ2 disconnected");
  if (k1 * k2 != d1 * d2v) p.reasons.push_back("valence condition fails");
  p.verdict = p.reasons.empty() ? Verdict::nut : Verdict::not_nut;
  return p;
}

SymmetryCertificate certify_2_3(const ParameterTuple& tuple, bool constructed_by_merge) {
  SymmetryCertificate c;
  c.deg_v = tuple.k1 + tuple.d1;
  c.deg_u = tuple.k2 + tuple.d2;
  c.constructed_orbits = constructed_by_merge;
  if (!constructed_by_merge) {
    c.reason = "inconclusive: not a merge product";
  } else if (c.deg_v == c.deg_u) {
    c.reason = "inconclusive: graph regular";
  } else {
    c.certified_2_3 = true;
    c.reason = "degree classes differ";
  }
  return c;
}

SpecCheck check_merge_spec(const MergeSpec& spec) {
  SpecCheck c;
  c.merged = merge(spec);
  c.prediction = theorem_k_predict(spec);
  if (c.merged.bi_regular) {
    c.nut = is_nut(c.merged.graph, c.merged.partition, c.merged.tuple);
  } else {
    c.nut = is_nut(c.merged.graph);
  }
  c.symmetry = certify_2_3(c.merged.tuple, c.merged.bi_regular);
  c.pass = c.prediction.verdict == Verdict::nut && c.nut.is_nut && c.symmetry.certified_2_3;
  return c;
}

std::string format_rational(const BigRational& q) {
  BigRational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_text(const NutCertificate& c) {
  std::ostringstream os;
  os << "schema nutgraph-certificate 1\n"
     << "order " << c.order << '\n'
     << "connected " << (c.connected ? "true" : "false") << '\n'
     << "nullity " << c.nullity << '\n'
     << "kernel";
  if (c.kernel) {
    for (const auto& x : *c.kernel) os << ' ' << format_rational(x);
  } else {
    os << " none";
  }
  os << '\n'
     << "min_abs_entry " << format_rational(c.min_abs_entry) << '\n'
     << "is_nut " << (c.is_nut ? "true" : "false") << '\n'
     << "method " << to_string(c.method) << '\n';
  return os.str();
}

std::string to_text(const SymmetryCertificate& c) {
  std::ostringstream os;
  os << "schema nutgraph-symmetry 1\n"
     << "deg_V " << c.deg_v << '\n'
     << "deg_U " << c.deg_u << '\n'
     << "constructed_orbits " << (c.constructed_orbits ? "(2,3)" : "unknown") << '\n'
     << "certified_2_3 " << (c.certified_2_3 ? "true" : "false") << '\n'
     << "reason " << c.reason << '\n';
  return os.str();
}

}  // namespace nutgraph
