#include "orderlex/smith.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace orderlex {

namespace {

class SmithReducer {
 public:
  SmithReducer(PolynomialMatrix m, std::optional<PolynomialMatrix> companion)
      : m_(std::move(m)), companion_(std::move(companion)) {
    if (companion_ && companion_->rows() != m_.cols())
      throw std::invalid_argument("smith_normal_form: companion rows must match matrix columns");
  }

  std::vector<LaurentPolynomial> run() {
    const std::size_t steps = std::min(m_.rows(), m_.cols());
    std::vector<LaurentPolynomial> diagonal(steps);
    for (std::size_t k = 0; k < steps; ++k) {
      if (!reduce_at(k)) break;
      diagonal[k] = m_(k, k);
    }
    return diagonal;
  }

  PolynomialMatrix take_companion() { return std::move(*companion_); }

 private:
  // Pivot: nonzero entry of smallest span, ties by smallest (row, col).
  bool select_pivot(std::size_t k) {
    int best = std::numeric_limits<int>::max();
    std::size_t br = 0, bc = 0;
    for (std::size_t r = k; r < m_.rows(); ++r)
      for (std::size_t c = k; c < m_.cols(); ++c) {
        const auto& e = m_(r, c);
        if (!e.is_zero() && e.span() < best) {
          best = e.span();
          br = r;
          bc = c;
        }
      }
    if (best == std::numeric_limits<int>::max()) return false;
    m_.swap_rows(k, br);
    swap_cols(k, bc);
    return true;
  }

  bool reduce_at(std::size_t k) {
    for (;;) {
      if (!select_pivot(k)) return false;
      bool clean = true;
      const LaurentPolynomial pivot = m_(k, k);
      for (std::size_t r = k + 1; r < m_.rows(); ++r) {
        if (m_(r, k).is_zero()) continue;
        auto [q, rem] = divide(m_(r, k), pivot);
        add_row_multiple(r, k, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = k + 1; c < m_.cols(); ++c) {
        if (m_(k, c).is_zero()) continue;
        auto [q, rem] = divide(m_(k, c), pivot);
        add_col_multiple(c, k, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      // Row and column are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t r = k + 1; r < m_.rows() && divisible; ++r)
        for (std::size_t c = k + 1; c < m_.cols(); ++c)
          if (!m_(r, c).is_zero() && !divide(m_(r, c), pivot).remainder.is_zero()) {
            add_row_multiple(k, r, LaurentPolynomial(1));
            divisible = false;
            break;
          }
      if (!divisible) continue;
      normalize_pivot(k);
      return true;
    }
  }

  void normalize_pivot(std::size_t k) {
    const LaurentPolynomial& p = m_(k, k);
    LaurentPolynomial canon = canonicalize(p);
    // canon = unit * p with unit = c * t^s; apply the unit to row k.
    Rational c = canon.leading_coefficient() / p.leading_coefficient();
    int shift = canon.low_degree() - p.low_degree();
    for (std::size_t col = k; col < m_.cols(); ++col) {
      if (m_(k, col).is_zero()) continue;
      m_(k, col) = (m_(k, col) * c).shifted(shift);
    }
  }

  // row_target += factor * row_source
  void add_row_multiple(std::size_t target, std::size_t source, const LaurentPolynomial& factor) {
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (m_(source, c).is_zero()) continue;
      m_(target, c) += factor * m_(source, c);
    }
  }

  // col_target += factor * col_source; mirrored as companion row_source -= factor * row_target.
  void add_col_multiple(std::size_t target, std::size_t source, const LaurentPolynomial& factor) {
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (m_(r, source).is_zero()) continue;
      m_(r, target) += m_(r, source) * factor;
    }
    if (companion_) {
      auto& comp = *companion_;
      for (std::size_t c = 0; c < comp.cols(); ++c) {
        if (comp(target, c).is_zero()) continue;
        comp(source, c) -= factor * comp(target, c);
      }
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    m_.swap_cols(a, b);
    if (companion_) companion_->swap_rows(a, b);
  }

  PolynomialMatrix m_;
  std::optional<PolynomialMatrix> companion_;
};

}  // namespace

std::vector<LaurentPolynomial> smith_normal_form(PolynomialMatrix m) {
  return SmithReducer(std::move(m), std::nullopt).run();
}

SmithReduction smith_normal_form_with_companion(PolynomialMatrix m, PolynomialMatrix companion) {
  SmithReducer reducer(std::move(m), std::move(companion));
  auto diagonal = reducer.run();
  return {std::move(diagonal), reducer.take_companion()};
}

LaurentPolynomial ModuleStructure::order() const {
  if (free_rank > 0) return {};
  LaurentPolynomial product(1);
  for (const auto& p : invariant_factors) product *= p;
  return canonicalize(product);
}

namespace {

ModuleStructure from_diagonal(const std::vector<LaurentPolynomial>& diagonal, std::size_t generators) {
  ModuleStructure out;
  std::size_t nonzero = 0;
  for (const auto& d : diagonal) {
    if (d.is_zero()) continue;
    ++nonzero;
    if (!d.is_unit()) out.invariant_factors.push_back(d);
  }
  out.free_rank = generators - nonzero;
  return out;
}

}  // namespace

ModuleStructure cokernel(const PolynomialMatrix& relations) {
  return from_diagonal(smith_normal_form(relations), relations.rows());
}

ModuleStructure homology(const PolynomialMatrix& incoming, const PolynomialMatrix& outgoing) {
  if (outgoing.cols() != incoming.rows())
    throw std::invalid_argument("homology: incompatible chain maps");
  const PolynomialMatrix composite = outgoing * incoming;
  for (std::size_t r = 0; r < composite.rows(); ++r)
    for (std::size_t c = 0; c < composite.cols(); ++c)
      if (!composite(r, c).is_zero()) throw std::logic_error("homology: boundary maps do not compose to zero");

  // Column operations on `outgoing` re-express C1 in a basis whose trailing
  // vectors span ker(outgoing); the companion tracks `incoming` in that basis.
  auto [diagonal, moved] = smith_normal_form_with_companion(outgoing, incoming);
  std::size_t rank = 0;
  for (const auto& d : diagonal)
    if (!d.is_zero()) ++rank;
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < moved.cols(); ++c)
      if (!moved(r, c).is_zero()) throw std::logic_error("homology: image escapes the kernel");

  const std::size_t kernel_rank = moved.rows() - rank;
  PolynomialMatrix relations(kernel_rank, moved.cols());
  for (std::size_t r = 0; r < kernel_rank; ++r)
    for (std::size_t c = 0; c < moved.cols(); ++c) relations(r, c) = moved(rank + r, c);
  if (kernel_rank == 0) return {};
  if (relations.cols() == 0) return ModuleStructure{{}, kernel_rank};
  return cokernel(relations);
}

}  // namespace orderlex
