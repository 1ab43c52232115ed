#include <ostream>

#include <json.hpp>

#include "nutgraph/coverage.hpp"

namespace nutgraph {

void write_report_csv(std::ostream& out, const CoverageReport& report) {
  out << "bound,X,X1,X2,X3\n";
  for (const auto& r : report.rows) out << r.bound << ',' << r.x << ',' << r.x1 << ',' << r.x2 << ',' << r.x3 << '\n';
}

void write_report_json(std::ostream& out, const CoverageReport& report) {
  using nlohmann::json;
  json doc;
  doc["schema"] = "nutgraph-report/1";
  doc["bound"] = report.bound;
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"bound", r.bound}, {"X", r.x}, {"X1", r.x1}, {"X2", r.x2}, {"X3", r.x3}});
  }
  doc["rows"] = rows;
  doc["remaining"] = report.remaining;
  json orders = json::array();
  for (const auto& [order, w] : report.orders) {
    if (!w) {
      orders.push_back({{"order", order}, {"covered", false}});
      continue;
    }
    orders.push_back({{"order", order},
                      {"covered", true},
                      {"corollary", to_string(w->corollary)},
                      {"n", w->n},
                      {"a", w->split.a},
                      {"kappa", w->split.kappa},
                      {"m", w->split.m},
                      {"t", w->split.t},
                      {"v_m", w->split.v_m},
                      {"v_t", w->split.v_t},
                      {"m_block", format(w->split.m_factorization)},
                      {"t_block", format(w->split.t_factorization)}});
  }
  doc["orders"] = orders;
  out << doc.dump(1) << '\n';
}

}  // namespace nutgraph
