#include "detsum/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace detsum {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one();
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement x) { return x.is_zero(); });
}

FieldElement determinant(const FieldContext& ctx, Matrix m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  return determinant_in_place(ctx, m.data(), m.rows());
}

FieldElement determinant_in_place(const FieldContext& ctx, std::span<FieldElement> e,
                                  std::size_t n) {
  constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();
  thread_local std::vector<std::uint32_t> pivot_logs;
  pivot_logs.resize(n);

  const bool tables = ctx.has_tables();
  const auto order = static_cast<std::uint32_t>(ctx.group_order());
  FieldElement det = FieldElement::one();

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && e[p * n + c].is_zero()) ++p;
    if (p == n) return FieldElement::zero();
    // Row swaps carry sign +1 in characteristic two.
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(e[p * n + j], e[c * n + j]);
    }
    const FieldElement pivot = e[c * n + c];
    det = ctx.mul(det, pivot);
    if (c + 1 == n) break;

    if (tables) {
      const std::uint32_t inv_log = order - ctx.log(pivot);
      for (std::size_t j = c + 1; j < n; ++j) {
        const FieldElement x = e[c * n + j];
        pivot_logs[j] = x.is_zero() ? kNoLog : ctx.log(x);
      }
      for (std::size_t r = c + 1; r < n; ++r) {
        const FieldElement lead = e[r * n + c];
        if (lead.is_zero()) continue;
        std::uint32_t factor = ctx.log(lead) + inv_log;
        if (factor >= order) factor -= order;
        FieldElement* row = &e[r * n];
        for (std::size_t j = c + 1; j < n; ++j) {
          if (pivot_logs[j] != kNoLog) row[j] += ctx.exp(factor + pivot_logs[j]);
        }
      }
    } else {
      const FieldElement pivot_inv = ctx.inv(pivot);
      for (std::size_t r = c + 1; r < n; ++r) {
        const FieldElement lead = e[r * n + c];
        if (lead.is_zero()) continue;
        const FieldElement factor = ctx.mul(lead, pivot_inv);
        for (std::size_t j = c + 1; j < n; ++j) e[r * n + j] += ctx.mul(factor, e[c * n + j]);
      }
    }
  }
  return det;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix dimension mismatch");
  Matrix out = a;
  auto d = out.data();
  auto s = b.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += s[i];
  return out;
}

Matrix mat_scale(const FieldContext& ctx, const Matrix& a, FieldElement s) {
  Matrix out = a;
  for (auto& x : out.data()) x = ctx.mul(x, s);
  return out;
}

Matrix mat_mul(const FieldContext& ctx, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimension mismatch in product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const FieldElement x = a(i, t);
      if (x.is_zero()) continue;
      auto src = b.row(t);
      auto dst = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] += ctx.mul(x, src[j]);
    }
  }
  return out;
}

Matrix mat_pow(const FieldContext& ctx, const Matrix& a, int l) {
  if (!a.is_square()) throw InvalidInput("power of a non-square matrix");
  if (l < 0) throw InvalidInput("negative matrix power");
  Matrix out = Matrix::identity(a.rows());
  for (int i = 0; i < l; ++i) out = mat_mul(ctx, out, a);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

namespace {

void check_table(const EvaluationTable& table) {
  if (table.points.size() != table.values.size())
    throw InvalidInput("evaluation table has mismatched point and value counts");
  std::vector<FieldElement> sorted = table.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("duplicate interpolation point");
}

// Coefficients of prod_i (x + points[i]).
std::vector<FieldElement> master_poly(const FieldContext& ctx, std::span<const FieldElement> points) {
  std::vector<FieldElement> m{FieldElement::one()};
  for (FieldElement p : points) {
    m.push_back(FieldElement::zero());
    for (std::size_t j = m.size() - 1; j > 0; --j) m[j] = m[j - 1] + ctx.mul(p, m[j]);
    m[0] = ctx.mul(p, m[0]);
  }
  return m;
}

// Divides master by (x + point); exact because point is a root.
void divide_linear(const FieldContext& ctx, std::span<const FieldElement> master, FieldElement point,
                   std::vector<FieldElement>& quotient) {
  const std::size_t n = master.size() - 1;
  quotient.assign(n, FieldElement::zero());
  quotient[n - 1] = master[n];
  for (std::size_t j = n - 1; j > 0; --j) quotient[j - 1] = master[j] + ctx.mul(point, quotient[j]);
}

}  // namespace

std::vector<FieldElement> interpolate(const FieldContext& ctx, const EvaluationTable& table) {
  check_table(table);
  const std::size_t n = table.points.size();
  std::vector<FieldElement> coeffs(n);
  if (n == 0) return coeffs;
  const auto master = master_poly(ctx, table.points);
  std::vector<FieldElement> q;
  for (std::size_t i = 0; i < n; ++i) {
    if (table.values[i].is_zero()) continue;
    divide_linear(ctx, master, table.points[i], q);
    const FieldElement weight =
        ctx.mul(table.values[i], ctx.inv(eval_poly(ctx, q, table.points[i])));
    for (std::size_t t = 0; t < n; ++t) coeffs[t] += ctx.mul(weight, q[t]);
  }
  return coeffs;
}

FieldElement lagrange_coefficient(const FieldContext& ctx, const EvaluationTable& table, int degree) {
  check_table(table);
  if (degree < 0) throw InvalidInput("negative coefficient index");
  const std::size_t n = table.points.size();
  if (static_cast<std::size_t>(degree) >= n) return FieldElement::zero();
  const auto master = master_poly(ctx, table.points);
  std::vector<FieldElement> q;
  FieldElement out;
  for (std::size_t i = 0; i < n; ++i) {
    if (table.values[i].is_zero()) continue;
    divide_linear(ctx, master, table.points[i], q);
    const FieldElement weight =
        ctx.mul(table.values[i], ctx.inv(eval_poly(ctx, q, table.points[i])));
    out += ctx.mul(weight, q[static_cast<std::size_t>(degree)]);
  }
  return out;
}

FieldElement eval_poly(const FieldContext& ctx, std::span<const FieldElement> coeffs, FieldElement x) {
  FieldElement acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = ctx.mul(acc, x) + *it;
  return acc;
}

}  // namespace detsum
