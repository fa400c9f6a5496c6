#include "reebspec/criterion.hpp"

#include <algorithm>

namespace reebspec {

namespace {

UGap u_gap_from_table(const std::vector<ExactScalar>& table) {
  UGap g;
  g.value = table[1] - table[0];
  g.k = 0;
  for (std::size_t k = 1; k + 1 < table.size(); ++k) {
    ExactScalar gap = table[k + 1] - table[k];
    if (gap < g.value) {
      g.value = gap;
      g.k = k;
    }
  }
  return g;
}

GapReport gap_from_tables(const std::vector<ExactScalar>& table,
                          const std::vector<ExactScalar>& weights, std::uint64_t K) {
  GapReport report;
  report.horizon = K;
  report.unnormalized = u_gap_from_table(table);
  // Running infimum of (c_k - c_{k-j}) / w_j kept as a positive-denominator
  // fraction so the scan compares by cross-multiplication instead of
  // dividing at every pair.
  ExactScalar best_num;
  ExactScalar best_den(1);
  bool have_best = false;
  for (std::uint64_t k = 1; k <= K; ++k) {
    for (std::uint64_t j = 1; j <= k; ++j) {
      ExactScalar num = table[k] - table[k - j];
      const ExactScalar& den = weights[j - 1];
      if (!have_best || num * best_den < best_num * den) {
        best_num = num;
        best_den = den;
        have_best = true;
        report.witness_k = k;
        report.witness_j = j;
      }
    }
    ExactScalar running = best_num / best_den;
    if (report.records.empty() || running < report.records.back().value) {
      report.records.push_back(GapRecord{k, running, report.witness_k, report.witness_j});
    }
  }
  report.normalized_inf = best_num / best_den;
  return report;
}

void require_two_axes(const EllipsoidParams& params, const char* what) {
  if (params.n() != 2) {
    throw std::invalid_argument(std::string(what) + " needs exactly 2 axes, got " +
                                std::to_string(params.n()));
  }
}

WeylReport weyl_from_table(const std::vector<ExactScalar>& table,
                           const EllipsoidParams& params,
                           const std::vector<std::uint64_t>& checkpoints) {
  WeylReport report;
  report.limit_constant = ExactScalar(2) * params.axis(0) * params.axis(1);
  for (std::uint64_t k : checkpoints) {
    WeylCheckpoint pt;
    pt.k = k;
    pt.capacity = table[k];
    pt.deviation =
        (pt.capacity * pt.capacity / ExactScalar(static_cast<long long>(k)) -
         report.limit_constant)
            .abs();
    report.checkpoints.push_back(std::move(pt));
  }
  report.max_deviation = report.checkpoints[0].deviation;
  report.deviation_decreasing = true;
  for (std::size_t i = 1; i < report.checkpoints.size(); ++i) {
    const ExactScalar& dev = report.checkpoints[i].deviation;
    if (dev > report.max_deviation) report.max_deviation = dev;
    if (dev >= report.checkpoints[i - 1].deviation) report.deviation_decreasing = false;
  }
  return report;
}

}  // namespace

UGap u_gap(const SelectorFamily& f, const EllipsoidParams& params, std::uint64_t K) {
  if (K < 1) throw std::invalid_argument("gap horizon must be >= 1");
  return u_gap_from_table(capacity_table(f, params, K));
}

GapReport normalized_gap(const SelectorFamily& f, const EllipsoidParams& params,
                         std::uint64_t K) {
  if (K < 1) throw std::invalid_argument("gap horizon must be >= 1");
  return gap_from_tables(capacity_table(f, params, K), shift_weights(f, params.n(), K), K);
}

WeylReport weyl_check(const SelectorFamily& f, const EllipsoidParams& params,
                      const std::vector<std::uint64_t>& checkpoints) {
  require_two_axes(params, "weyl check");
  if (checkpoints.empty()) throw std::invalid_argument("weyl check needs checkpoints");
  std::uint64_t K = 0;
  for (std::uint64_t k : checkpoints) {
    if (k < 1) throw std::invalid_argument("weyl checkpoints must be >= 1");
    K = std::max(K, k);
  }
  return weyl_from_table(capacity_table(f, params, K), params, checkpoints);
}

DirichletReport dirichlet_near_collisions(const EllipsoidParams& params, std::uint64_t max_q) {
  require_two_axes(params, "dirichlet witnesses");
  if (max_q < 1) throw std::invalid_argument("max_q must be >= 1");
  DirichletReport report;
  report.ratio = params.axis(1) / params.axis(0);
  report.max_q = max_q;

  const Int q_limit(max_q);
  ExactScalar x = report.ratio;
  Int p_prev = 1, q_prev = 0;  // convergent index -1
  Int p_prev2 = 0, q_prev2 = 1;  // convergent index -2
  for (int iter = 0; iter < 512; ++iter) {
    Int a = x.floor();
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    if (q > q_limit) break;
    DirichletWitness w;
    w.p = p;
    w.q = q;
    w.residual = (ExactScalar(Rational(q)) * params.axis(1) -
                  ExactScalar(Rational(p)) * params.axis(0))
                     .abs();
    w.bound = params.axis(0) / ExactScalar(Rational(q));
    w.action_low = params.axis(0) * ExactScalar(Rational(p));
    w.action_high = params.axis(1) * ExactScalar(Rational(q));
    if (w.residual.sign() == 0) report.exact_collision = true;
    report.witnesses.push_back(std::move(w));
    ExactScalar frac = x - ExactScalar(Rational(a));
    if (frac.sign() == 0) break;  // rational ratio, expansion terminated
    x = ExactScalar(1) / frac;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  if (report.witnesses.empty()) {
    throw std::logic_error("continued fraction produced no convergent with q <= max_q");
  }
  const DirichletWitness& last = report.witnesses.back();
  report.dirichlet_bound_met =
      last.residual < params.axis(0) / ExactScalar(Rational(Int(max_q)));
  return report;
}

EvidenceReport closing_evidence(const SelectorFamily& f, const EllipsoidParams& params,
                                std::uint64_t horizon, std::uint64_t max_q,
                                unsigned threads) {
  if (horizon < 1) throw std::invalid_argument("evidence horizon must be >= 1");
  std::vector<ExactScalar> table = capacity_table(f, params, horizon, threads);
  std::vector<ExactScalar> weights = shift_weights(f, params.n(), horizon);
  EvidenceReport report{params, f, gap_from_tables(table, weights, horizon)};
  report.has_two_axes = params.n() == 2;
  if (report.has_two_axes) {
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t k : {horizon / 100, horizon / 10, horizon}) {
      if (k >= 1 && (checkpoints.empty() || k > checkpoints.back())) checkpoints.push_back(k);
    }
    report.weyl = weyl_from_table(table, params, checkpoints);
    report.dirichlet = dirichlet_near_collisions(params, max_q);
  }
  return report;
}

Json gap_report_to_json(const GapReport& report) {
  Json j;
  j["horizon"] = report.horizon;
  Json ug;
  ug["value"] = scalar_to_json_with_decimal(report.unnormalized.value);
  ug["k"] = report.unnormalized.k;
  j["u_gap"] = std::move(ug);
  j["normalized_inf"] = scalar_to_json_with_decimal(report.normalized_inf);
  Json wit;
  wit["k"] = report.witness_k;
  wit["j"] = report.witness_j;
  j["witness"] = std::move(wit);
  Json records = Json::array();
  for (const GapRecord& r : report.records) {
    Json e;
    e["horizon"] = r.horizon;
    e["value"] = scalar_to_json_with_decimal(r.value);
    e["k"] = r.k;
    e["j"] = r.j;
    records.push_back(std::move(e));
  }
  j["records"] = std::move(records);
  return j;
}

Json weyl_report_to_json(const WeylReport& report) {
  Json j;
  j["limit_constant"] = scalar_to_json_with_decimal(report.limit_constant);
  Json pts = Json::array();
  for (const WeylCheckpoint& pt : report.checkpoints) {
    Json e;
    e["k"] = pt.k;
    e["capacity"] = scalar_to_json_with_decimal(pt.capacity);
    e["deviation"] = scalar_to_json_with_decimal(pt.deviation);
    pts.push_back(std::move(e));
  }
  j["checkpoints"] = std::move(pts);
  j["max_deviation"] = scalar_to_json_with_decimal(report.max_deviation);
  j["deviation_decreasing"] = report.deviation_decreasing;
  return j;
}

Json dirichlet_report_to_json(const DirichletReport& report) {
  Json j;
  j["ratio"] = scalar_to_json_with_decimal(report.ratio);
  j["max_q"] = report.max_q;
  Json ws = Json::array();
  for (const DirichletWitness& w : report.witnesses) {
    Json e;
    e["p"] = int_to_json(w.p);
    e["q"] = int_to_json(w.q);
    e["residual"] = scalar_to_json_with_decimal(w.residual);
    e["bound"] = scalar_to_json_with_decimal(w.bound);
    e["action_low"] = scalar_to_json_with_decimal(w.action_low);
    e["action_high"] = scalar_to_json_with_decimal(w.action_high);
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  j["exact_collision"] = report.exact_collision;
  j["dirichlet_bound_met"] = report.dirichlet_bound_met;
  return j;
}

Json evidence_to_json(const EvidenceReport& report) {
  Json j;
  Json axes = Json::array();
  for (const ExactScalar& a : report.params.axes()) {
    axes.push_back(scalar_to_json_short(a));
  }
  j["axes"] = std::move(axes);
  j["selector"] = selector_name(report.family.kind);
  j["gap"] = gap_report_to_json(report.gap);
  if (report.has_two_axes) {
    j["weyl"] = weyl_report_to_json(report.weyl);
    j["dirichlet"] = dirichlet_report_to_json(report.dirichlet);
  } else {
    j["weyl"] = nullptr;
    j["dirichlet"] = nullptr;
  }
  j["interpretation"] =
      "Finite-horizon evidence only: the records are the strictly decreasing "
      "running infima of the normalized capacity gap, with Weyl growth and "
      "near-collision diagnostics. A gap infimum of zero over all horizons is "
      "the hypothesis of the strong-closing criterion; these tables witness "
      "the trend at the reported horizon and prove no limit statement.";
  return j;
}

}  // namespace reebspec
