#include "cdc/matrix.hpp"

#include <algorithm>

#include "cdc/combinatorics.hpp"
#include "cdc/errors.hpp"

namespace cdc {

MatrixFq::MatrixFq(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw ParameterError("negative matrix shape");
}

MatrixFq MatrixFq::identity(FieldPtr field, int n) {
  MatrixFq m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::stacked(const MatrixFq& below) const {
  if (cols_ != below.cols_) throw ParameterError("column mismatch in stack");
  MatrixFq m(field_, rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), m.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(), m.a_.begin() + a_.size());
  return m;
}

MatrixFq MatrixFq::concat(const MatrixFq& right) const {
  if (rows_ != right.rows_) throw ParameterError("row mismatch in concat");
  MatrixFq m(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) m.set(i, cols_ + j, right.at(i, j));
  }
  return m;
}

MatrixFq MatrixFq::transposed() const {
  MatrixFq m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

MatrixFq MatrixFq::mul(const MatrixFq& rhs) const {
  if (cols_ != rhs.rows_) throw ParameterError("shape mismatch in mul");
  const Field& F = *field_;
  MatrixFq m(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      Elem x = at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        m.set(i, j, F.add(m.at(i, j), F.mul(x, rhs.at(l, j))));
    }
  return m;
}

MatrixFq MatrixFq::add(const MatrixFq& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ParameterError("shape mismatch in add");
  MatrixFq m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] = field_->add(a_[i], rhs.a_[i]);
  return m;
}

MatrixFq MatrixFq::sub(const MatrixFq& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ParameterError("shape mismatch in sub");
  MatrixFq m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] = field_->sub(a_[i], rhs.a_[i]);
  return m;
}

MatrixFq MatrixFq::scaled(Elem c) const {
  MatrixFq m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->mul(a_[i], c);
  return m;
}

std::pair<MatrixFq, int> MatrixFq::rref() const {
  MatrixFq m = *this;
  const Field& F = *field_;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) {
        Elem t = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    Elem s = F.inv(m.at(r, c));
    if (s != 1)
      for (int j = c; j < cols_; ++j) m.set(r, j, F.mul(s, m.at(r, j)));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Elem f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols_; ++j)
        m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
    }
    ++r;
  }
  return {std::move(m), r};
}

int MatrixFq::rank() const { return rref().second; }

std::vector<int> MatrixFq::pivot_columns() const {
  std::vector<int> piv;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) {
        piv.push_back(j);
        break;
      }
  }
  return piv;
}

bool MatrixFq::is_rref() const {
  int last_pivot = -1;
  bool seen_zero_row = false;
  for (int i = 0; i < rows_; ++i) {
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || piv <= last_pivot || at(i, piv) != 1) return false;
    for (int r = 0; r < rows_; ++r)
      if (r != i && at(r, piv) != 0) return false;
    last_pivot = piv;
  }
  return true;
}

bool MatrixFq::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

Subspace Subspace::from_rref(MatrixFq rep) {
  if (!rep.is_rref()) throw ParameterError("representative not in rref");
  if (static_cast<int>(rep.pivot_columns().size()) != rep.rows())
    throw ParameterError("representative not full rank");
  return Subspace(std::move(rep));
}

Subspace Subspace::span(const MatrixFq& m) {
  auto [r, rank] = m.rref();
  MatrixFq rep(m.field(), rank, m.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < m.cols(); ++j) rep.set(i, j, r.at(i, j));
  return Subspace(std::move(rep));
}

std::vector<bool> Subspace::pivot_vector() const {
  std::vector<bool> bits(ambient(), false);
  for (int j : rep_.pivot_columns()) bits[j] = true;
  return bits;
}

Subspace Subspace::orthogonal_complement() const {
  const int v = ambient(), k = dim();
  const Field& F = *rep_.field();
  auto pivots = rep_.pivot_columns();
  std::vector<bool> is_pivot(v, false);
  for (int p : pivots) is_pivot[p] = true;
  MatrixFq basis(rep_.field(), v - k, v);
  int row = 0;
  for (int f = 0; f < v; ++f) {
    if (is_pivot[f]) continue;
    basis.set(row, f, 1);
    for (int i = 0; i < k; ++i)
      basis.set(row, pivots[i], F.neg(rep_.at(i, f)));
    ++row;
  }
  return span(basis);
}

namespace {

void check_same_space(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient())
    throw ParameterError("ambient dimension mismatch");
  if (!(*u.rep().field() == *w.rep().field()))
    throw ParameterError("field mismatch");
}

}  // namespace

int intersection_dim(const Subspace& u, const Subspace& w) {
  check_same_space(u, w);
  int sum_rank = u.rep().stacked(w.rep()).rank();
  return u.dim() + w.dim() - sum_rank;
}

int subspace_distance(const Subspace& u, const Subspace& w) {
  check_same_space(u, w);
  int sum_rank = u.rep().stacked(w.rep()).rank();
  return 2 * sum_rank - u.dim() - w.dim();
}

int hamming_distance(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.size() != b.size()) throw ParameterError("length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

GrassmannianEnumerator::GrassmannianEnumerator(FieldPtr field, int v, int k,
                                               std::uint64_t budget)
    : field_(std::move(field)), v_(v), k_(k) {
  if (k < 0 || v < 0 || k > v) {
    done_ = true;
    return;
  }
  if (q_binomial(v, k, field_->q()) > Int(static_cast<unsigned long>(budget)))
    throw BudgetError("Grassmannian too large to enumerate");
  pivots_.resize(k);
  for (int i = 0; i < k; ++i) pivots_[i] = i;
  load_free_positions();
}

void GrassmannianEnumerator::load_free_positions() {
  free_pos_.clear();
  std::vector<bool> is_pivot(v_, false);
  for (int p : pivots_) is_pivot[p] = true;
  for (int i = 0; i < k_; ++i)
    for (int j = pivots_[i] + 1; j < v_; ++j)
      if (!is_pivot[j]) free_pos_.emplace_back(i, j);
  free_val_.assign(free_pos_.size(), 0);
}

bool GrassmannianEnumerator::next(MatrixFq& out) {
  if (done_) return false;
  if (!fresh_) {
    // advance free entries, last position fastest
    const Elem qmax = field_->q() - 1;
    bool advanced = false;
    for (std::size_t i = free_val_.size(); i-- > 0;) {
      if (free_val_[i] < qmax) {
        ++free_val_[i];
        advanced = true;
        break;
      }
      free_val_[i] = 0;
    }
    if (!advanced) {
      // next pivot combination in lexicographic order
      int j = k_ - 1;
      while (j >= 0 && pivots_[j] == v_ - k_ + j) --j;
      if (j < 0) {
        done_ = true;
        return false;
      }
      ++pivots_[j];
      for (int l = j + 1; l < k_; ++l) pivots_[l] = pivots_[l - 1] + 1;
      load_free_positions();
    }
  }
  fresh_ = false;
  out = MatrixFq(field_, k_, v_);
  for (int i = 0; i < k_; ++i) out.set(i, pivots_[i], 1);
  for (std::size_t t = 0; t < free_pos_.size(); ++t)
    out.set(free_pos_[t].first, free_pos_[t].second, free_val_[t]);
  return true;
}

}  // namespace cdc
