#include "nutgraph/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "nutgraph/sieve.hpp"

namespace nutgraph {
namespace {

// How a valence v of V(z) was reached: v = contrib · (valence of z / factor),
// or the bare loop block when kind == 'L'.
struct Step {
  std::uint64_t factor = 0;
  std::uint64_t contrib = 0;
  char kind = 'L';  // L loops, K complete factor, C prime circulant factor
};

struct ValenceEntry {
  std::vector<std::uint64_t> values;
  std::vector<Step> steps;  // parallel to values
};

struct CompactSplit {
  std::uint64_t m, t, v_m, v_t, kappa;
};

using SplitKey = std::tuple<std::uint64_t, std::uint64_t, std::vector<std::uint64_t>>;

void require_odd_composite(std::uint64_t order) {
  if (order < 9 || order % 2 == 0 || is_prime(order)) {
    throw std::invalid_argument("order must be an odd non-prime >= 9");
  }
}

}  // namespace

struct CoverageEngine::Impl {
  mutable std::shared_mutex valence_mutex;
  std::unordered_map<std::uint64_t, std::unique_ptr<ValenceEntry>> valence;
  mutable std::shared_mutex split_mutex;
  std::map<SplitKey, std::optional<CompactSplit>> splits;

  const ValenceEntry& entry(std::uint64_t z) {
    {
      std::shared_lock lock(valence_mutex);
      auto it = valence.find(z);
      if (it != valence.end()) return *it->second;
    }
    auto fresh = compute(z);
    std::unique_lock lock(valence_mutex);
    auto [it, inserted] = valence.emplace(z, std::move(fresh));
    return *it->second;
  }

  std::unique_ptr<ValenceEntry> compute(std::uint64_t z) {
    std::unordered_map<std::uint64_t, Step> found;
    found.emplace(1, Step{});
    for (std::uint64_t f : divisors(z)) {
      if (f < 2) continue;
      std::vector<Step> contribs{Step{f, f - 1, 'K'}};
      if (f % 2 == 1 && is_prime(f)) {
        for (std::uint64_t d = 2; d < f - 1; d += 2) {
          if ((f - 1) % d == 0) contribs.push_back(Step{f, d, 'C'});
        }
      }
      const ValenceEntry& sub = entry(z / f);
      for (std::uint64_t v : sub.values) {
        for (const Step& c : contribs) found.emplace(c.contrib * v, c);
      }
    }
    auto out = std::make_unique<ValenceEntry>();
    for (const auto& [v, step] : found) out->values.push_back(v);
    std::sort(out->values.begin(), out->values.end());
    for (std::uint64_t v : out->values) out->steps.push_back(found.at(v));
    return out;
  }

  std::optional<Step> step_of(std::uint64_t z, std::uint64_t v) {
    const ValenceEntry& e = entry(z);
    auto it = std::lower_bound(e.values.begin(), e.values.end(), v);
    if (it == e.values.end() || *it != v) return std::nullopt;
    return e.steps[static_cast<std::size_t>(it - e.values.begin())];
  }
};

CoverageEngine::CoverageEngine() : impl_(std::make_unique<Impl>()) {}
CoverageEngine::~CoverageEngine() = default;

const std::vector<std::uint64_t>& CoverageEngine::valences(std::uint64_t z) {
  if (z == 0) throw std::invalid_argument("valence set of 0");
  return impl_->entry(z).values;
}

bool CoverageEngine::has_valence(std::uint64_t z, std::uint64_t v) {
  const auto& values = valences(z);
  return std::binary_search(values.begin(), values.end(), v);
}

BlockFactorization CoverageEngine::valence_witness(std::uint64_t z, std::uint64_t v) {
  if (z == 0) throw std::invalid_argument("valence set of 0");
  BlockFactorization f;
  while (true) {
    auto step = impl_->step_of(z, v);
    if (!step) throw std::invalid_argument("valence " + std::to_string(v) + " not achievable");
    if (step->kind == 'L') {
      f.z0 = z;
      break;
    }
    if (step->kind == 'K') {
      f.complete_factors.push_back(step->factor);
    } else {
      f.prime_factors.push_back({step->factor, step->contrib});
    }
    z /= step->factor;
    v /= step->contrib;
  }
  std::sort(f.prime_factors.begin(), f.prime_factors.end(),
            [](const auto& x, const auto& y) { return std::tie(x.p, x.d) < std::tie(y.p, y.d); });
  std::sort(f.complete_factors.begin(), f.complete_factors.end());
  return f;
}

ValenceSet CoverageEngine::valence_set(std::uint64_t z) {
  ValenceSet out;
  out.z = z;
  for (std::uint64_t v : valences(z)) out.entries.emplace(v, valence_witness(z, v));
  return out;
}

bool SplitWitness::valid() const {
  if (m % 2 != 1 || t % 2 != 0 || t < 2 || a == 0 || kappa == 0 || kappa % a != 0) return false;
  if (kappa * v_m * v_t != m * t) return false;
  if (t + a * v_m == m + (kappa / a) * v_t) return false;
  return m_factorization.order() == m && t_factorization.order() == t && m_factorization.valence() == v_m &&
         t_factorization.valence() == v_t;
}

std::optional<SplitWitness> CoverageEngine::find_split(std::uint64_t s, std::uint64_t a,
                                                       const std::vector<std::uint64_t>& kappas) {
  if (s < 3 || s % 2 == 0) throw std::invalid_argument("find_split: s must be odd and at least 3");
  if (a == 0) throw std::invalid_argument("find_split: a must be positive");
  SplitKey key{s, a, kappas};
  std::optional<std::optional<CompactSplit>> cached;
  {
    std::shared_lock lock(impl_->split_mutex);
    auto it = impl_->splits.find(key);
    if (it != impl_->splits.end()) cached = it->second;
  }
  if (!cached) {
    std::optional<CompactSplit> found;
    for (std::uint64_t m = 1; m < s && !found; m += 2) {
      const std::uint64_t t = s - m;
      const std::uint64_t mt = m * t;
      for (std::uint64_t kappa : kappas) {
        if (found) break;
        for (std::uint64_t vm : valences(m)) {
          if (mt % (kappa * vm) != 0) continue;
          const std::uint64_t vt = mt / (kappa * vm);
          if (!has_valence(t, vt)) continue;
          if (t + a * vm == m + (kappa / a) * vt) continue;
          found = CompactSplit{m, t, vm, vt, kappa};
          break;
        }
      }
    }
    std::unique_lock lock(impl_->split_mutex);
    impl_->splits.emplace(key, found);
    cached = found;
  }
  if (!*cached) return std::nullopt;
  const CompactSplit& c = **cached;
  SplitWitness w;
  w.m = c.m;
  w.t = c.t;
  w.v_m = c.v_m;
  w.v_t = c.v_t;
  w.kappa = c.kappa;
  w.a = a;
  w.m_factorization = valence_witness(c.m, c.v_m);
  w.t_factorization = valence_witness(c.t, c.v_t);
  return w;
}

std::string to_string(Corollary c) {
  switch (c) {
    case Corollary::three_n:
      return "3n";
    case Corollary::tetra:
      return "tetra";
    case Corollary::novi:
      return "novi";
  }
  return "?";
}

std::optional<CoverWitness> CoverageEngine::covers_3n(std::uint64_t order) {
  require_odd_composite(order);
  for (std::uint64_t n : divisors(order)) {
    if (n < 3 || order / n < 3) continue;
    if (auto w = find_split(order / n, 2, {2, 4})) return CoverWitness{Corollary::three_n, order, n, *w};
  }
  return std::nullopt;
}

std::optional<CoverWitness> CoverageEngine::covers_tetra(std::uint64_t order) {
  require_odd_composite(order);
  for (std::uint64_t n : divisors(order)) {
    if (n < 5 || order / n < 3) continue;
    if (n % 4 != 1 && is_prime(n)) continue;
    if (auto w = find_split(order / n, 4, {4, 16})) return CoverWitness{Corollary::tetra, order, n, *w};
  }
  return std::nullopt;
}

std::optional<CoverWitness> CoverageEngine::covers_novi(std::uint64_t order) {
  require_odd_composite(order);
  for (std::uint64_t n : divisors(order)) {
    if (n < 3 || order / n < 3 || !is_prime(n)) continue;
    for (std::uint64_t a = 2; a < n; a += 2) {
      if ((n - 1) % a != 0) continue;
      if (auto w = find_split(order / n, a, {a, a * a})) return CoverWitness{Corollary::novi, order, n, *w};
    }
  }
  return std::nullopt;
}

std::optional<CoverWitness> CoverageEngine::cover(std::uint64_t order) {
  if (auto w = covers_3n(order)) return w;
  if (auto w = covers_tetra(order)) return w;
  return covers_novi(order);
}

const std::vector<std::uint64_t>& default_checkpoints() {
  static const std::vector<std::uint64_t> bounds{1000,   2500,   5000,   10000,  20000,  30000,  40000,
                                                 50000,  100000, 200000, 300000, 400000, 500000, 600000,
                                                 700000, 800000, 900000, 1000000};
  return bounds;
}

CoverageReport CoverageEngine::report(std::uint64_t bound, std::vector<std::uint64_t> checkpoints, unsigned jobs) {
  if (bound < 9) throw std::invalid_argument("report bound must be at least 9");
  if (bound > 0xffffffffULL) throw std::invalid_argument("report bound too large");
  CoverageReport rep;
  rep.bound = bound;
  std::erase_if(checkpoints, [&](std::uint64_t c) { return c > bound; });
  checkpoints.push_back(bound);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

  const Sieve sieve(static_cast<std::uint32_t>(bound));
  std::vector<std::uint64_t> xs;
  for (std::uint64_t k = 9; k <= bound; k += 2) {
    if (!sieve.is_prime(static_cast<std::uint32_t>(k))) xs.push_back(k);
  }
  std::vector<std::optional<CoverWitness>> results(xs.size());
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < xs.size(); i = next++) results[i] = cover(xs[i]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = xs.size();
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  CheckpointRow running;
  std::size_t next_checkpoint = 0;
  auto flush_until = [&](std::uint64_t limit) {
    while (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] < limit) {
      running.bound = checkpoints[next_checkpoint++];
      rep.rows.push_back(running);
    }
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    flush_until(xs[i]);
    const auto& w = results[i];
    ++running.x;
    if (!w || w->corollary != Corollary::three_n) ++running.x1;
    if (!w || w->corollary == Corollary::novi) ++running.x2;
    if (!w) {
      ++running.x3;
      rep.remaining.push_back(xs[i]);
    }
    rep.orders.emplace_back(xs[i], w);
  }
  flush_until(bound + 1);
  return rep;
}

SpecText witness_to_spec_text(const SplitWitness& w, std::uint64_t n) {
  const std::uint64_t a = w.a;
  SpecText text;
  if (a == 2 && n >= 3) {
    text.lambda1 = "cycle " + std::to_string(n);
  } else if (n >= 3 && a == n - 1) {
    text.lambda1 = "complete " + std::to_string(n);
  } else if (a == 4 && n >= 9 && !is_prime(n)) {
    std::uint64_t n1 = 3;
    while (n % n1 != 0) n1 += 2;
    if (n1 == n || n % 2 == 0) throw SpecError("no admissible Λ1 of order " + std::to_string(n));
    text.lambda1 = "kron cycle " + std::to_string(n1) + " cycle " + std::to_string(n / n1);
  } else if (n >= 3 && is_prime(n) && a % 2 == 0 && (n - 1) % a == 0) {
    text.lambda1 = "subgroup_circulant " + std::to_string(n) + " " + std::to_string(a);
  } else {
    throw SpecError("no admissible Λ1 of order " + std::to_string(n) + " and valence " + std::to_string(a));
  }
  if (w.kappa == a) {
    text.delta2 = "diag";
  } else if (w.kappa == a * a) {
    text.delta2 = "same";
  } else {
    throw SpecError("κ must be a or a²");
  }
  text.delta3 = "diag";
  text.lambda4 = format(w.m_factorization);
  text.lambda5 = format(w.t_factorization);
  return text;
}

MergeSpec witness_to_spec(const SplitWitness& w, std::uint64_t n) { return realize(witness_to_spec_text(w, n)); }

// Cache layout, one record per line:
//   nutgraph-cache <version>
//   V <z> <v>:<factor>:<contrib>:<L|K|C> ...
//   S <s> <a> <k1,k2,...> none
//   S <s> <a> <k1,k2,...> <m> <t> <kappa> <v_m> <v_t>
// Readers skip record types they do not know.
void CoverageEngine::save_cache(std::ostream& out) {
  out << "nutgraph-cache 1\n";
  {
    std::shared_lock lock(impl_->valence_mutex);
    std::vector<std::uint64_t> keys;
    for (const auto& [z, e] : impl_->valence) keys.push_back(z);
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t z : keys) {
      const ValenceEntry& e = *impl_->valence.at(z);
      out << "V " << z;
      for (std::size_t i = 0; i < e.values.size(); ++i) {
        out << ' ' << e.values[i] << ':' << e.steps[i].factor << ':' << e.steps[i].contrib << ':' << e.steps[i].kind;
      }
      out << '\n';
    }
  }
  std::shared_lock lock(impl_->split_mutex);
  for (const auto& [key, value] : impl_->splits) {
    const auto& [s, a, kappas] = key;
    out << "S " << s << ' ' << a << ' ';
    for (std::size_t i = 0; i < kappas.size(); ++i) out << (i ? "," : "") << kappas[i];
    if (value) {
      out << ' ' << value->m << ' ' << value->t << ' ' << value->kappa << ' ' << value->v_m << ' ' << value->v_t << '\n';
    } else {
      out << " none\n";
    }
  }
}

void CoverageEngine::load_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty cache file");
  {
    std::istringstream header(line);
    std::string magic;
    int version = 0;
    if (!(header >> magic >> version) || magic != "nutgraph-cache" || version < 1) {
      throw std::invalid_argument("not a nutgraph cache file");
    }
  }
  std::size_t line_no = 1;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("cache line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "V") {
      std::uint64_t z = 0;
      if (!(fields >> z) || z == 0) throw bad("bad V record");
      auto entry = std::make_unique<ValenceEntry>();
      std::string tok;
      while (fields >> tok) {
        Step step;
        std::uint64_t v = 0;
        char c1 = 0, c2 = 0, c3 = 0;
        std::istringstream item(tok);
        if (!(item >> v >> c1 >> step.factor >> c2 >> step.contrib >> c3 >> step.kind) || c1 != ':' || c2 != ':' ||
            c3 != ':') {
          throw bad("bad valence item '" + tok + "'");
        }
        const bool ok = step.kind == 'L' ? v == 1
                                         : (step.kind == 'K' || step.kind == 'C') && step.factor >= 2 &&
                                               z % step.factor == 0 && step.contrib > 0 && v % step.contrib == 0;
        if (!ok) throw bad("inconsistent valence item '" + tok + "'");
        if (!entry->values.empty() && entry->values.back() >= v) throw bad("valences not ascending");
        entry->values.push_back(v);
        entry->steps.push_back(step);
      }
      if (entry->values.empty() || entry->values.front() != 1) throw bad("valence set without 1");
      std::unique_lock lock(impl_->valence_mutex);
      impl_->valence.emplace(z, std::move(entry));
    } else if (tag == "S") {
      std::uint64_t s = 0, a = 0;
      std::string kappa_list, rest;
      if (!(fields >> s >> a >> kappa_list >> rest)) throw bad("bad S record");
      std::vector<std::uint64_t> kappas;
      std::istringstream ks(kappa_list);
      std::string k;
      while (std::getline(ks, k, ',')) kappas.push_back(std::stoull(k));
      std::optional<CompactSplit> value;
      if (rest != "none") {
        CompactSplit c{};
        c.m = std::stoull(rest);
        if (!(fields >> c.t >> c.kappa >> c.v_m >> c.v_t)) throw bad("bad S record");
        if (c.m + c.t != s || c.kappa * c.v_m * c.v_t != c.m * c.t) throw bad("inconsistent split");
        value = c;
      }
      std::unique_lock lock(impl_->split_mutex);
      impl_->splits.emplace(SplitKey{s, a, kappas}, value);
    }
  }
}

std::size_t CoverageEngine::cached_valence_sets() const {
  std::shared_lock lock(impl_->valence_mutex);
  return impl_->valence.size();
}

std::size_t CoverageEngine::cached_splits() const {
  std::shared_lock lock(impl_->split_mutex);
  return impl_->splits.size();
}

}  // namespace nutgraph
