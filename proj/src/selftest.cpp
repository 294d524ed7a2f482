#include "qcrystal/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "qcrystal/axioms.hpp"
#include "qcrystal/graph.hpp"
#include "qcrystal/operators.hpp"
#include "qcrystal/rectification.hpp"
#include "qcrystal/schur.hpp"

namespace qcrystal {

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(std::string s) { failures.push_back(std::move(s)); }
};

struct Job {
  std::size_t check;
  std::string label;
  std::function<void(Outcome&)> run;
};

std::string tag(const std::string& shape, int n) {
  return "(" + shape + ") n=" + std::to_string(n);
}

std::vector<Partition> all_partitions(int max_size) {
  std::vector<Partition> out;
  for (int k = 1; k <= max_size; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

std::vector<StrictPartition> all_strict(int max_size) {
  std::vector<StrictPartition> out;
  for (int k = 1; k <= max_size; ++k)
    for (auto& p : strict_partitions_of(k)) out.push_back(std::move(p));
  return out;
}

const ShiftedTableau& shifted_at(const ColoredDigraph& g, std::size_t v) {
  return std::get<ShiftedTableau>(g.vertex(v).tableau);
}

void young_regular(const Partition& shape, int n, Outcome& out) {
  const auto g = young_crystal(shape, n);
  out.cases += g.vertex_count();
  const auto report = check_regular(g);
  for (const auto& v : report.violations) out.fail(tag(shape.to_string(), n) + ": " + v.id());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& t = std::get<YoungTableau>(g.vertex(v).tableau);
    for (int i = 1; i < n; ++i) {
      if (auto f = f_young(t, i)) {
        auto back = e_young(*f, i);
        if (!back || *back != t)
          out.fail(tag(shape.to_string(), n) + ": e_young(f_young(T)) != T for " + t.id());
      }
      if (auto e = e_young(t, i)) {
        auto back = f_young(*e, i);
        if (!back || *back != t)
          out.fail(tag(shape.to_string(), n) + ": f_young(e_young(T)) != T for " + t.id());
      }
    }
  }
}

void shifted_injective(const StrictPartition& shape, int n, Outcome& out) {
  const auto ts = enumerate_ssht(shape, n);
  const auto g = shifted_crystal(shape, n, false);
  for (int i = 1; i < n; ++i) {
    std::map<std::string, std::string> preimage;
    for (const auto& t : ts) {
      ++out.cases;
      auto f = f_shifted(t, i);
      if (!f) continue;
      auto [it, fresh] = preimage.emplace(f->id(), t.id());
      if (!fresh)
        out.fail(tag(shape.to_string(), n) + ": f_" + std::to_string(i) + " sends " + t.id() +
                 " and " + it->second + " to " + f->id());
      auto back = e_shifted(g, *f, i);
      if (!back || *back != t)
        out.fail(tag(shape.to_string(), n) + ": e(f(T)) != T for " + t.id());
    }
    for (const auto& t : ts) {
      auto e = e_shifted(g, t, i);
      if (!e) continue;
      auto back = f_shifted(*e, i);
      if (!back || *back != t)
        out.fail(tag(shape.to_string(), n) + ": f(e(T)) != T for " + t.id());
    }
  }
}

void shifted_regular(const StrictPartition& shape, int n, Outcome& out) {
  const auto g = shifted_crystal(shape, n, false);
  out.cases += g.vertex_count();
  for (const auto& v : check_regular(g).violations)
    out.fail(tag(shape.to_string(), n) + ": " + v.id());
}

void queer_regular(const StrictPartition& shape, int n, Outcome& out) {
  const auto g = shifted_crystal(shape, n, true);
  out.cases += g.vertex_count();
  if (g.vertex_count() == 0) return;
  for (const auto& v : check_queer_regular(g).violations)
    out.fail(tag(shape.to_string(), n) + ": " + v.id());
  const auto comps = components(g);
  std::vector<int> colors;
  for (int c = 0; c < g.degree(); ++c) colors.push_back(c);
  const auto srcs = sources(g, colors);
  if (comps.size() != 1)
    out.fail(tag(shape.to_string(), n) + ": " + std::to_string(comps.size()) + " components");
  if (srcs.size() != 1) {
    std::string ids;
    for (std::size_t v : srcs) ids += " " + g.vertex(v).id;
    out.notes.push_back(tag(shape.to_string(), n) + ": " + std::to_string(srcs.size()) +
                        " sources:" + ids);
  }
}

void p_schur(const StrictPartition& shape, int n, Outcome& out) {
  ++out.cases;
  try {
    expand_p_in_schur(shape, n);
  } catch (const VerificationFailure& e) {
    out.fail(e.what());
  }
}

void product(const StrictPartition& a, const StrictPartition& b, Outcome& out) {
  ++out.cases;
  const int n = a.size() + b.size();
  try {
    const auto f = expand_product_in_p(a, b, n);
    SymPolynomial sum(n);
    for (const auto& [eps, c] : f) {
      if (c <= 0)
        out.fail("coefficient of P_(" + eps.to_string() + ") in P_(" + a.to_string() + ") P_(" +
                 b.to_string() + ") is " + c.str());
      sum += schur_p(eps, n) * c;
    }
    if (sum != schur_p(a, n) * schur_p(b, n))
      out.fail("P-combination does not reconstruct P_(" + a.to_string() + ") P_(" +
               b.to_string() + ")");
  } catch (const VerificationFailure& e) {
    out.fail(e.what());
  }
}

void symmetric_roundtrip(const StrictPartition& shape, int n, Outcome& out) {
  const Partition sym = symmetric_shape(shape);
  for (const auto& t : enumerate_ssht(shape, n)) {
    ++out.cases;
    const auto s = to_symmetric(t);
    if (s.filling().shape() != sym) out.fail("symmetric shape differs for " + t.id());
    if (from_symmetric(s) != t) out.fail("round trip differs for " + t.id());
    std::vector<int> counts(n, 0);
    for (const auto& [c, v] : s.filling().entries()) ++counts[v - 1];
    if (counts != weight(t, n).counts) out.fail("weight changed for " + t.id());
  }
}

void rect_bijection(const StrictPartition& shape, int n, Outcome& out) {
  const auto g = shifted_crystal(shape, n, false);
  for (const auto& comp : components(g)) {
    const auto induced = g.induced(comp);
    const auto hw = highest_weights(induced);
    if (hw.size() != 1) {
      out.fail(tag(shape.to_string(), n) + ": component with " + std::to_string(hw.size()) +
               " highest weights");
      continue;
    }
    const auto lambda = induced.vertex(hw.front()).weight->as_partition();
    if (!lambda) {
      out.fail(tag(shape.to_string(), n) + ": highest weight is not a partition");
      continue;
    }
    std::set<std::string> seen, image, expected;
    for (std::size_t v : comp) {
      ++out.cases;
      const auto& t = shifted_at(g, v);
      const auto y = rect(t);
      if (weight(y, n) != weight(t, n)) out.fail("rect changes the weight of " + t.id());
      if (!seen.insert(y.id()).second) out.fail("rect is not injective at " + t.id());
      image.insert(y.id());
    }
    for (const auto& y : enumerate_ssyt(*lambda, n)) expected.insert(y.id());
    if (image != expected)
      out.fail(tag(shape.to_string(), n) + ": rect image of the component of weight (" +
               lambda->to_string() + ") is not SSYT of that shape");
  }
}

void rect_commutes(const StrictPartition& shape, int n, Outcome& out) {
  for (const auto& t : enumerate_ssht(shape, n)) {
    const auto r = rect(t);
    for (int i = 1; i < n; ++i) {
      ++out.cases;
      const auto lhs = f_shifted(t, i);
      const auto rhs = f_young(r, i);
      if (lhs.has_value() != rhs.has_value() || (lhs && rect(*lhs) != *rhs))
        out.fail(tag(shape.to_string(), n) + ": rect does not commute with f_" +
                 std::to_string(i) + " at " + t.id());
    }
  }
}

struct CheckInfo {
  const char* name;
  const char* description;
};

constexpr CheckInfo kChecks[] = {
    {"young-regular", "SSYT crystals satisfy A1-A6; e_i and f_i are mutually inverse"},
    {"shifted-injective", "f_i on shifted tableaux is injective and inverse to e_i"},
    {"shifted-regular", "shifted crystals satisfy A1-A6"},
    {"queer-regular", "queer crystals satisfy B0-B6 and are connected"},
    {"p-schur", "P_gamma is the sum of s_lambda over highest weights"},
    {"product-positivity", "P_gamma P_delta expands positively in P"},
    {"symmetric-roundtrip", "symmetric tableau reflection is a weight-preserving bijection"},
    {"rect-bijection", "rect maps each component bijectively onto SSYT of its highest weight"},
    {"rect-commutes", "rect intertwines f_i on shifted and Young tableaux"},
};

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("QCRYSTAL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  const auto partitions = all_partitions(options.max_size);
  const auto stricts = all_strict(options.max_size);
  std::vector<Job> jobs;
  auto per_shape = [&](std::size_t check, auto fn, const auto& shapes) {
    for (const auto& s : shapes)
      for (int n = 1; n <= options.max_n; ++n)
        jobs.push_back({check, tag(s.to_string(), n), [fn, s, n](Outcome& o) { fn(s, n, o); }});
  };
  per_shape(0, young_regular, partitions);
  per_shape(1, shifted_injective, stricts);
  per_shape(2, shifted_regular, stricts);
  for (const auto& s : stricts)
    for (int n = 2; n <= options.max_n; ++n)
      jobs.push_back({3, tag(s.to_string(), n), [s, n](Outcome& o) { queer_regular(s, n, o); }});
  per_shape(4, p_schur, stricts);
  for (const auto& a : stricts)
    for (const auto& b : stricts)
      if (a.size() + b.size() <= options.max_size)
        jobs.push_back({5, "(" + a.to_string() + ") x (" + b.to_string() + ")",
                        [a, b](Outcome& o) { product(a, b, o); }});
  per_shape(6, symmetric_roundtrip, stricts);
  per_shape(7, rect_bijection, stricts);
  per_shape(8, rect_commutes, stricts);

  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        jobs[k].run(outcomes[k]);
      } catch (const std::exception& e) {
        outcomes[k].fail(jobs[k].label + ": " + e.what());
      }
    }
  };
  const unsigned threads = std::max(
      1u, std::min<unsigned>(options.threads ? options.threads : default_thread_count(),
                             static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CheckResult> results;
  for (const auto& c : kChecks) results.push_back({c.name, c.description, 0, {}, {}});
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    auto& r = results[jobs[k].check];
    r.cases += outcomes[k].cases;
    for (auto& f : outcomes[k].failures) r.failures.push_back(std::move(f));
    for (auto& f : outcomes[k].notes) r.notes.push_back(std::move(f));
  }
  return results;
}

}  // namespace qcrystal
