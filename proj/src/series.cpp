// SPDX-License-Identifier: Apache-2.0
#include "series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace slicespace {

namespace {

void trim(std::vector<Quaternion>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

PowerSeries PowerSeries::monomial(std::size_t n, const Quaternion& a) {
  std::vector<Quaternion> c(n + 1);
  c[n] = a;
  return PowerSeries(std::move(c));
}

Quaternion PowerSeries::eval(const Quaternion& q) const {
  if (coeffs_.empty()) return {};
  Quaternion acc = coeffs_.back();
  for (std::size_t n = coeffs_.size() - 1; n-- > 0;) acc = q * acc + coeffs_[n];
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (coeffs_.size() <= 1) return PowerSeries();
  std::vector<Quaternion> c(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) c[n - 1] = coeffs_[n] * static_cast<double>(n);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::derivative(int order) const {
  PowerSeries d = *this;
  for (int k = 0; k < order; ++k) d = d.derivative();
  return d;
}

PowerSeries PowerSeries::dilate(double r) const {
  std::vector<Quaternion> c = coeffs_;
  double rn = 1.0;
  for (auto& a : c) {
    a = a * rn;
    rn *= r;
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  std::vector<Quaternion> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = at(n) + o.at(n);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  std::vector<Quaternion> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = at(n) - o.at(n);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::right_scaled(const Quaternion& lambda) const {
  std::vector<Quaternion> c = coeffs_;
  for (auto& a : c) a = a * lambda;
  return PowerSeries(std::move(c));
}

double PowerSeries::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& a : coeffs_) m = std::max(m, a.norm());
  return m;
}

PowerSeries star(const PowerSeries& f, const PowerSeries& g) {
  if (f.is_zero() || g.is_zero()) return PowerSeries();
  std::vector<Quaternion> c(f.size() + g.size() - 1);
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t l = 0; l < g.size(); ++l) c[k + l] += f.coeffs()[k] * g.coeffs()[l];
  return PowerSeries(std::move(c));
}

Complex SplitSeries::eval_alpha(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t n = alpha.size(); n-- > 0;) acc = acc * z + alpha[n];
  return acc;
}

Complex SplitSeries::eval_beta(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t n = beta.size(); n-- > 0;) acc = acc * z + beta[n];
  return acc;
}

Quaternion SplitSeries::eval(Complex z) const {
  return embed(i, eval_alpha(z)) + embed(i, eval_beta(z)) * j.q();
}

SplitSeries split(const PowerSeries& f, const Axis& i) {
  SplitSeries s;
  s.i = i;
  s.j = orthogonal_unit(i);
  s.alpha.resize(f.size());
  s.beta.resize(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const SplitParts parts = split_quaternion(f.coeffs()[n], s.i, s.j);
    s.alpha[n] = parts.alpha;
    s.beta[n] = parts.beta;
  }
  return s;
}

PowerSeries merge(const SplitSeries& s) {
  std::vector<Quaternion> c(std::max(s.alpha.size(), s.beta.size()));
  for (std::size_t n = 0; n < c.size(); ++n) {
    const Complex a = n < s.alpha.size() ? s.alpha[n] : Complex{};
    const Complex b = n < s.beta.size() ? s.beta[n] : Complex{};
    c[n] = merge_parts(a, b, s.i, s.j);
  }
  return PowerSeries(std::move(c));
}

Quaternion represent(const Quaternion& f_minus, const Quaternion& f_plus, const Axis& target,
                     const Axis& source) {
  const Quaternion ij = target.q() * source.q();
  const Quaternion wm = (Quaternion::one() + ij) * 0.5;
  const Quaternion wp = (Quaternion::one() - ij) * 0.5;
  return wm * f_minus + wp * f_plus;
}

PowerSeries series_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("series JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw std::runtime_error("series JSON: expected an object with a \"coeffs\" array");
  std::vector<Quaternion> coeffs;
  for (const auto& item : doc["coeffs"]) {
    if (!item.is_array() || item.size() != 4)
      throw std::runtime_error("series JSON: each coefficient must be [w, x, y, z]");
    Quaternion q;
    double* comp[4] = {&q.w, &q.x, &q.y, &q.z};
    for (int k = 0; k < 4; ++k) {
      if (!item[k].is_number())
        throw std::runtime_error("series JSON: coefficient entries must be numbers");
      *comp[k] = item[k].get<double>();
    }
    if (!q.is_finite()) throw std::runtime_error("series JSON: coefficients must be finite");
    coeffs.push_back(q);
  }
  return PowerSeries(std::move(coeffs));
}

std::string series_to_json(const PowerSeries& f) {
  nlohmann::ordered_json doc;
  auto& arr = doc["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& a : f.coeffs()) arr.push_back({a.w, a.x, a.y, a.z});
  return doc.dump();
}

}  // namespace slicespace
