// Copyright 2026 The Lemotif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lemotif/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>
#include <nlohmann/json.hpp>

#include "lemotif/error.hpp"
#include "lemotif/rng.hpp"

namespace lemotif {

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) noexcept {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  return *this;
}

Metric f1(const ConfusionCounts& c) noexcept {
  if (c.tp + c.fp == 0 || c.tp + c.fn == 0) return {0.0, true};
  if (c.tp == 0) return {0.0, true};
  const double p = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  const double r = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  return {2.0 * p * r / (p + r), false};
}

Metric normalized_accuracy(const ConfusionCounts& c) noexcept {
  if (c.tp + c.fn == 0 || c.tn + c.fp == 0) return {0.0, true};
  const double tpr = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  const double tnr = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
  return {(tpr + tnr) / 2.0, false};
}

std::vector<LabeledSample> labeled_samples(std::span<const Entry> entries) {
  std::vector<LabeledSample> out;
  for (const auto& e : entries) {
    for (const auto& s : e.sub_entries) {
      if (!s.has_labels()) continue;
      LabeledSample sample{s.text, {}};
      if (s.topics) {
        for (Topic t : *s.topics) sample.truth[label_id(t)] = true;
      }
      if (s.emotions) {
        for (Emotion em : *s.emotions) sample.truth[label_id(em)] = true;
      }
      out.push_back(std::move(sample));
    }
  }
  if (out.empty()) throw Error(Errc::empty_dataset, "dataset has no labelled sub-entries");
  return out;
}

LabelMask predict(const LabelProbs& probs, double threshold) noexcept {
  LabelMask out{};
  for (LabelId id = 0; id < kLabelCount; ++id) out[id] = probs[id] > threshold;
  return out;
}

std::array<ConfusionCounts, kLabelCount> per_label_counts(const LabelMask& predicted,
                                                          const LabelMask& truth) noexcept {
  std::array<ConfusionCounts, kLabelCount> out{};
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    if (predicted[i] && truth[i]) ++out[i].tp;
    else if (predicted[i]) ++out[i].fp;
    else if (truth[i]) ++out[i].fn;
    else ++out[i].tn;
  }
  return out;
}

ThresholdMetrics summarize(double threshold, const std::array<ConfusionCounts, kLabelCount>& labels,
                           Averaging averaging) {
  ThresholdMetrics out;
  out.threshold = threshold;
  for (const auto& c : labels) out.counts += c;
  if (averaging == Averaging::micro) {
    out.f1 = f1(out.counts);
    out.normalized_accuracy = normalized_accuracy(out.counts);
    return out;
  }
  auto macro = [&](Metric (*fn)(const ConfusionCounts&) noexcept) {
    double sum = 0.0;
    std::size_t defined = 0;
    for (const auto& c : labels) {
      const Metric m = fn(c);
      if (m.undefined) continue;
      sum += m.value;
      ++defined;
    }
    return Metric{defined ? sum / static_cast<double>(defined) : 0.0, defined < labels.size()};
  };
  out.f1 = macro(&f1);
  out.normalized_accuracy = macro(&normalized_accuracy);
  return out;
}

std::vector<std::vector<std::size_t>> cv_splits(std::size_t n, const CvOptions& options) {
  if (n == 0) throw Error(Errc::empty_dataset, "dataset is empty");
  if (options.k_splits < 1) {
    throw Error(Errc::invalid_argument, "k_splits must be at least 1", "k_splits");
  }
  if (!(options.split_frac > 0.0 && options.split_frac < 1.0)) {
    throw Error(Errc::invalid_argument, "split_frac must lie in (0, 1)", "split_frac");
  }
  const auto held = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(options.split_frac * static_cast<double>(n))), 1, n);
  std::vector<std::vector<std::size_t>> splits;
  for (int s = 0; s < options.k_splits; ++s) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(s)));
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(idx[i], idx[static_cast<std::size_t>(rng.below(i + 1))]);
    }
    idx.resize(held);
    splits.push_back(std::move(idx));
  }
  return splits;
}

std::vector<ThresholdMetrics> cross_validate(std::span<const LabeledSample> samples,
                                             const Classifier& backend, const CvOptions& options) {
  if (samples.empty()) throw Error(Errc::empty_dataset, "dataset is empty");
  if (options.thresholds.empty()) {
    throw Error(Errc::invalid_argument, "at least one threshold is required", "thresholds");
  }
  const auto splits = cv_splits(samples.size(), options);

  std::vector<LabelProbs> scores;
  scores.reserve(samples.size());
  for (const auto& s : samples) scores.push_back(backend.score(s.text));

  std::vector<ThresholdMetrics> out;
  for (double t : options.thresholds) {
    std::array<ConfusionCounts, kLabelCount> labels{};
    for (const auto& split : splits) {
      for (std::size_t i : split) {
        const auto counts = per_label_counts(predict(scores[i], t), samples[i].truth);
        for (std::size_t l = 0; l < kLabelCount; ++l) labels[l] += counts[l];
      }
    }
    out.push_back(summarize(t, labels, options.averaging));
  }
  return out;
}

namespace {

std::string threshold_key(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

nlohmann::json flags_json(const ThresholdMetrics& m) {
  nlohmann::json flags = nlohmann::json::array();
  if (m.f1.undefined) flags.push_back("f1_undefined");
  if (m.normalized_accuracy.undefined) flags.push_back("norm_acc_undefined");
  return flags;
}

}  // namespace

nlohmann::json metrics_json(std::span<const ThresholdMetrics> metrics) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& m : metrics) {
    out[threshold_key(m.threshold)] = {
        {"f1", m.f1.value},
        {"norm_acc", m.normalized_accuracy.value},
        {"flags", flags_json(m)},
        {"counts", {{"tp", m.counts.tp}, {"fp", m.counts.fp}, {"tn", m.counts.tn}, {"fn", m.counts.fn}}}};
  }
  return out;
}

std::string metrics_csv(std::span<const ThresholdMetrics> metrics) {
  std::ostringstream os;
  os.precision(17);
  os << "threshold,f1,norm_acc,f1_undefined,norm_acc_undefined,tp,fp,tn,fn\n";
  for (const auto& m : metrics) {
    os << m.threshold << ',' << m.f1.value << ',' << m.normalized_accuracy.value << ','
       << m.f1.undefined << ',' << m.normalized_accuracy.undefined << ',' << m.counts.tp << ','
       << m.counts.fp << ',' << m.counts.tn << ',' << m.counts.fn << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

PreferenceMatrix::PreferenceMatrix(int n) : n_(n) {
  if (n < 2) throw Error(Errc::invalid_argument, "a preference matrix needs at least 2 items", "n");
  winners_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2, -1);
}

std::size_t PreferenceMatrix::slot(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error(Errc::invalid_argument,
                "bad item pair (" + std::to_string(a) + ", " + std::to_string(b) + ")", "pair");
  }
  const auto lo = static_cast<std::size_t>(std::min(a, b));
  const auto hi = static_cast<std::size_t>(std::max(a, b));
  const auto n = static_cast<std::size_t>(n_);
  return lo * (2 * n - lo - 1) / 2 + (hi - lo - 1);
}

void PreferenceMatrix::set(int a, int b, int winner) {
  const std::size_t s = slot(a, b);
  if (winner != a && winner != b) {
    throw Error(Errc::invalid_argument, "winner must be one of the pair", "winner");
  }
  winners_[s] = winner;
}

std::optional<int> PreferenceMatrix::winner(int a, int b) const {
  const int w = winners_[slot(a, b)];
  if (w < 0) return std::nullopt;
  return w;
}

bool PreferenceMatrix::prefers(int a, int b) const {
  const auto w = winner(a, b);
  if (!w) {
    throw Error(Errc::incomplete_matrix,
                "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") has no choice");
  }
  return *w == a;
}

bool PreferenceMatrix::complete() const noexcept {
  return std::none_of(winners_.begin(), winners_.end(), [](int w) { return w < 0; });
}

std::vector<int> PreferenceMatrix::win_counts() const {
  std::vector<int> wins(static_cast<std::size_t>(n_), 0);
  for (int w : winners_) {
    if (w >= 0) ++wins[static_cast<std::size_t>(w)];
  }
  return wins;
}

PreferenceMatrix PreferenceMatrix::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(Errc::parse_error, "n: expected an integer", "n");
  }
  PreferenceMatrix m(doc["n"].get<int>());
  const auto& choices = doc.value("choices", nlohmann::json::array());
  if (!choices.is_array()) throw Error(Errc::parse_error, "choices: expected an array", "choices");
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto& c = choices[i];
    const std::string path = "choices[" + std::to_string(i) + "]";
    if (!c.is_array() || c.size() != 3 ||
        !std::all_of(c.begin(), c.end(), [](const auto& v) { return v.is_number_integer(); })) {
      throw Error(Errc::parse_error, path + ": expected [a, b, winner]", path);
    }
    m.set(c[0].get<int>(), c[1].get<int>(), c[2].get<int>());
  }
  return m;
}

nlohmann::json PreferenceMatrix::to_json() const {
  nlohmann::json choices = nlohmann::json::array();
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (auto w = winner(a, b)) choices.push_back({a, b, *w});
    }
  }
  return {{"n", n_}, {"choices", choices}};
}

ConsistencyResult consistency_check(const PreferenceMatrix& m) {
  if (!m.complete()) throw Error(Errc::incomplete_matrix, "preference matrix has unset pairs");
  ConsistencyResult out;
  const int n = m.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const bool ab = m.prefers(a, b);
        const bool bc = m.prefers(b, c);
        const bool ca = m.prefers(c, a);
        if (ab && bc && ca) out.violations.push_back({a, b, c});
        else if (!ab && !bc && !ca) out.violations.push_back({a, c, b});
      }
    }
  }
  out.consistent = out.violations.empty();
  return out;
}

TallyResult preference_tally(std::span<const PreferenceMatrix> matrices, const Factor& factor) {
  if (matrices.size() < 2) {
    throw Error(Errc::invalid_argument, "preference tally needs at least 2 matrices", "matrices");
  }
  TallyResult out;
  out.name = factor.name;
  for (const auto& m : matrices) {
    for (const auto& p : factor.pairs) {
      const auto w = m.winner(p.with, p.without);
      if (!w) continue;
      ++out.total;
      if (*w == p.with) ++out.wins;
    }
  }
  if (out.total == 0) {
    throw Error(Errc::no_relevant_pairs, "no answered pairs for factor '" + factor.name + "'",
                factor.name);
  }
  const double n = static_cast<double>(out.total);
  out.rate = static_cast<double>(out.wins) / n;
  const double half_width = 1.959963984540054 * std::sqrt(out.rate * (1.0 - out.rate) / n);
  out.ci_low = std::max(0.0, out.rate - half_width);
  out.ci_high = std::min(1.0, out.rate + half_width);

  if (out.total < 2) {
    out.t_statistic = std::numeric_limits<double>::quiet_NaN();
    out.p_value = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  // Sample variance of 0/1 observations.
  const double var = (static_cast<double>(out.wins) * (1.0 - out.rate) * (1.0 - out.rate) +
                      static_cast<double>(out.total - out.wins) * out.rate * out.rate) /
                     (n - 1.0);
  const double diff = out.rate - 0.5;
  if (var == 0.0) {
    out.t_statistic = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    out.p_value = diff == 0.0 ? 1.0 : 0.0;
    return out;
  }
  out.t_statistic = diff / std::sqrt(var / n);
  const boost::math::students_t dist(n - 1.0);
  out.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.t_statistic)));
  out.p_value = std::min(1.0, out.p_value);
  return out;
}

}  // namespace lemotif
