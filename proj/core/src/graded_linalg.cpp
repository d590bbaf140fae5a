#include "mfstab/graded_linalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace mfstab {

GradedFreeModule GradedFreeModule::twisted(int t) const {
  GradedFreeModule m = *this;
  for (int& a : m.twists) a += t;
  return m;
}

std::vector<std::pair<int, Monomial>> GradedFreeModule::piece_basis(int d) const {
  std::vector<std::pair<int, Monomial>> basis;
  for (int c = 0; c < rank(); ++c)
    for (const Monomial& m : ring_piece_basis(ring, twists[c] + d)) basis.emplace_back(c, m);
  return basis;
}

int GradedFreeModule::piece_dim(int d) const {
  int n = 0;
  for (int c = 0; c < rank(); ++c) n += ring_piece_dim(ring, twists[c] + d);
  return n;
}

GradedMatrix::GradedMatrix(GradedFreeModule src, GradedFreeModule tgt, FieldSpec field)
    : field_(field), src_(std::move(src)), tgt_(std::move(tgt)) {
  if (!(src_.ring == tgt_.ring)) throw std::invalid_argument("GradedMatrix: src/tgt ring mismatch");
  e_.assign(static_cast<size_t>(rows()) * cols(), GradedPoly::zero(src_.ring, field_));
}

GradedMatrix GradedMatrix::from_strings(RingSpec ring, FieldSpec field, std::vector<int> src_twists,
                                        std::vector<int> tgt_twists,
                                        const std::vector<std::vector<std::string>>& entries) {
  GradedMatrix m(GradedFreeModule{ring, std::move(src_twists)},
                 GradedFreeModule{ring, std::move(tgt_twists)}, field);
  if (static_cast<int>(entries.size()) != m.rows())
    throw std::invalid_argument("entry rows do not match tgt rank");
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(entries[r].size()) != m.cols())
      throw std::invalid_argument("entry cols do not match src rank");
    for (int c = 0; c < m.cols(); ++c)
      m.set(r, c, GradedPoly::parse(entries[r][c], ring, field));
  }
  return m;
}

void GradedMatrix::set(int r, int c, GradedPoly p) {
  if (!(p.ring() == src_.ring)) p = p.in_ring(src_.ring);
  e_[static_cast<size_t>(r) * cols() + c] = std::move(p);
}

bool GradedMatrix::is_homogeneous() const {
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      const GradedPoly& p = at(r, c);
      if (p.is_zero()) continue;
      auto deg = p.homogeneous_degree();
      if (!deg || *deg != tgt_.twists[r] - src_.twists[c]) return false;
    }
  return true;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& g) const {
  if (!(g.tgt_ == src_)) throw std::invalid_argument("compose: middle modules differ");
  GradedMatrix r(g.src_, tgt_, field_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      GradedPoly acc = GradedPoly::zero(ring(), field_);
      for (int k = 0; k < cols(); ++k) acc += at(i, k) * g.at(k, j);
      r.set(i, j, std::move(acc));
    }
  return r;
}

GradedMatrix GradedMatrix::twisted(int t) const {
  GradedMatrix m = *this;
  m.src_ = src_.twisted(t);
  m.tgt_ = tgt_.twisted(t);
  return m;
}

GradedMatrix GradedMatrix::in_ring(RingSpec ring) const {
  GradedMatrix m(GradedFreeModule{ring, src_.twists}, GradedFreeModule{ring, tgt_.twists}, field_);
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) m.set(r, c, at(r, c).in_ring(ring));
  return m;
}

GradedMatrix GradedMatrix::identity(const GradedFreeModule& m, FieldSpec field) {
  GradedMatrix id(m, m, field);
  for (int i = 0; i < m.rank(); ++i)
    id.set(i, i, GradedPoly::constant(m.ring, field.one()));
  return id;
}

GradedMatrix GradedMatrix::scalar_poly(const GradedFreeModule& src, const GradedPoly& p) {
  auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("scalar_poly needs a homogeneous polynomial");
  GradedMatrix m(src, src.twisted(*deg), p.field());
  for (int i = 0; i < src.rank(); ++i) m.set(i, i, p);
  return m;
}

GradedMatrix GradedMatrix::block_diag(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("block_diag: ring mismatch");
  GradedFreeModule src{a.ring(), a.src_.twists}, tgt{a.ring(), a.tgt_.twists};
  src.twists.insert(src.twists.end(), b.src_.twists.begin(), b.src_.twists.end());
  tgt.twists.insert(tgt.twists.end(), b.tgt_.twists.begin(), b.tgt_.twists.end());
  GradedMatrix m(src, tgt, a.field_);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.set(r, c, a.at(r, c));
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.set(a.rows() + r, a.cols() + c, b.at(r, c));
  return m;
}

std::vector<GradedPoly> GradedMatrix::apply(const std::vector<GradedPoly>& v) const {
  if (static_cast<int>(v.size()) != cols()) throw std::invalid_argument("apply: size mismatch");
  std::vector<GradedPoly> out(rows(), GradedPoly::zero(ring(), field_));
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) out[r] += at(r, c) * v[c];
  return out;
}

KMatrix GradedMatrix::piece_map(int d) const {
  if (!is_homogeneous())
    throw std::invalid_argument("piece_map of a non-homogeneous matrix");
  auto src_basis = src_.piece_basis(d);
  auto tgt_basis = tgt_.piece_basis(d);
  std::map<std::pair<int, Monomial>, int> tgt_index;
  for (size_t i = 0; i < tgt_basis.size(); ++i) tgt_index[tgt_basis[i]] = static_cast<int>(i);

  KMatrix k(static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()), field_);
  for (size_t j = 0; j < src_basis.size(); ++j) {
    const auto& [c, mon] = src_basis[j];
    for (int r = 0; r < rows(); ++r) {
      GradedPoly image = at(r, c) * GradedPoly::term(ring(), mon, field_.one());
      for (const auto& [m, coeff] : image.terms()) {
        auto it = tgt_index.find({r, m});
        if (it == tgt_index.end())
          throw std::logic_error("piece_map: image monomial outside the target piece");
        k.at(it->second, static_cast<int>(j)) += coeff;
      }
    }
  }
  return k;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.e_ == b.e_;
}

std::string GradedMatrix::to_text() const {
  std::string out;
  for (int r = 0; r < rows(); ++r) {
    if (r) out += "; ";
    for (int c = 0; c < cols(); ++c) {
      if (c) out += ", ";
      out += at(r, c).str();
    }
  }
  return out;
}

GradedMatrix GradedMatrix::from_text(RingSpec ring, FieldSpec field, std::vector<int> src_twists,
                                     std::vector<int> tgt_twists, const std::string& text) {
  std::vector<std::vector<std::string>> entries;
  std::stringstream rows_in(text);
  std::string row;
  while (std::getline(rows_in, row, ';')) {
    std::vector<std::string> cells;
    std::stringstream cells_in(row);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    entries.push_back(std::move(cells));
  }
  return from_strings(ring, field, std::move(src_twists), std::move(tgt_twists), entries);
}

std::string GradedMatrix::to_json_text() const {
  nlohmann::ordered_json j;
  j["ring"] = ring().name();
  j["src"] = src_.twists;
  j["tgt"] = tgt_.twists;
  auto rows_json = nlohmann::ordered_json::array();
  for (int r = 0; r < rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < cols(); ++c) row.push_back(at(r, c).str());
    rows_json.push_back(row);
  }
  j["entries"] = rows_json;
  return j.dump();
}

GradedMatrix GradedMatrix::from_json_text(RingSpec ring, FieldSpec field,
                                          const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  std::vector<std::vector<std::string>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<std::string> cells;
    for (const auto& cell : row) cells.push_back(cell.get<std::string>());
    entries.push_back(std::move(cells));
  }
  if (j.contains("ring")) ring = RingSpec::parse(j.at("ring").get<std::string>());
  return from_strings(ring, field, j.at("src").get<std::vector<int>>(),
                      j.at("tgt").get<std::vector<int>>(), entries);
}

ModulePresentation::ModulePresentation(GradedMatrix pres) : pres_(std::move(pres)) {
  if (!pres_.is_homogeneous())
    throw std::invalid_argument("module presentation must be a homogeneous matrix");
}

const ModulePresentation::Piece& ModulePresentation::piece(int d) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
  }
  Piece p{pres_.tgt().piece_basis(d), image_pieces(pres_, d), {}, 0};
  std::vector<bool> is_pivot(p.ambient.size(), false);
  for (int col : p.image.pivots()) is_pivot[col] = true;
  for (size_t i = 0; i < p.ambient.size(); ++i)
    if (!is_pivot[i]) p.quotient_cols.push_back(static_cast<int>(i));
  p.dim = static_cast<int>(p.quotient_cols.size());

  std::unique_lock lock(mutex_);
  return cache_.emplace(d, std::move(p)).first->second;  // idempotent fill
}

int ModulePresentation::piece_dim(int d) const { return piece(d).dim; }

std::vector<Scalar> ModulePresentation::reduce_ambient(int d, std::vector<Scalar> coords) const {
  return piece(d).image.reduce(std::move(coords));
}

std::vector<Scalar> ModulePresentation::ambient_to_quotient(int d,
                                                            const std::vector<Scalar>& coords) const {
  const Piece& p = piece(d);
  auto reduced = p.image.reduce(coords);
  std::vector<Scalar> q;
  q.reserve(p.quotient_cols.size());
  for (int col : p.quotient_cols) q.push_back(reduced[col]);
  return q;
}

std::vector<Scalar> ModulePresentation::quotient_to_ambient(int d,
                                                            const std::vector<Scalar>& q) const {
  const Piece& p = piece(d);
  if (q.size() != p.quotient_cols.size())
    throw std::invalid_argument("quotient coordinate size mismatch");
  std::vector<Scalar> coords(p.ambient.size(), field().zero());
  for (size_t i = 0; i < q.size(); ++i) coords[p.quotient_cols[i]] = q[i];
  return coords;
}

KMatrix ModulePresentation::mult_map(const GradedPoly& g, int d) const {
  auto deg = g.homogeneous_degree();
  if (!deg) throw std::invalid_argument("mult_map needs a homogeneous multiplier");
  const Piece& from = piece(d);
  const Piece& to = piece(d + *deg);
  std::map<std::pair<int, Monomial>, int> to_index;
  for (size_t i = 0; i < to.ambient.size(); ++i) to_index[to.ambient[i]] = static_cast<int>(i);

  KMatrix k(to.dim, from.dim, field());
  for (int j = 0; j < from.dim; ++j) {
    const auto& [summand, mon] = from.ambient[from.quotient_cols[j]];
    GradedPoly image = g * GradedPoly::term(ring(), mon, field().one());
    std::vector<Scalar> coords(to.ambient.size(), field().zero());
    for (const auto& [m, coeff] : image.terms()) coords[to_index.at({summand, m})] += coeff;
    auto q = ambient_to_quotient(d + *deg, coords);
    for (int r = 0; r < to.dim; ++r) k.at(r, j) = q[r];
  }
  return k;
}

std::vector<Scalar> ModulePresentation::vector_to_ambient(const GradedVector& v) const {
  const Piece& p = piece(v.degree);
  if (static_cast<int>(v.coords.size()) != pres_.tgt().rank())
    throw std::invalid_argument("vector has wrong number of coordinates");
  std::map<std::pair<int, Monomial>, int> index;
  for (size_t i = 0; i < p.ambient.size(); ++i) index[p.ambient[i]] = static_cast<int>(i);
  std::vector<Scalar> coords(p.ambient.size(), field().zero());
  for (int c = 0; c < pres_.tgt().rank(); ++c)
    for (const auto& [m, coeff] : v.coords[c].terms()) {
      auto it = index.find({c, m});
      if (it == index.end())
        throw std::invalid_argument("vector coordinate has wrong degree");
      coords[it->second] += coeff;
    }
  return coords;
}

GradedVector ModulePresentation::vector_from_quotient(int d, const std::vector<Scalar>& q) const {
  const Piece& p = piece(d);
  auto coords = quotient_to_ambient(d, q);
  GradedVector v{d, std::vector<GradedPoly>(pres_.tgt().rank(),
                                            GradedPoly::zero(ring(), field()))};
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    const auto& [summand, mon] = p.ambient[i];
    v.coords[summand] += GradedPoly::term(ring(), mon, coords[i]);
  }
  return v;
}

std::vector<GradedVector> ModulePresentation::piece_vectors(int d) const {
  const Piece& p = piece(d);
  std::vector<GradedVector> out;
  for (int i = 0; i < p.dim; ++i) {
    std::vector<Scalar> q(p.dim, field().zero());
    q[i] = field().one();
    out.push_back(vector_from_quotient(d, q));
  }
  return out;
}

bool ModulePresentation::equal_in_module(const GradedVector& a, const GradedVector& b) const {
  if (a.degree != b.degree) return false;
  auto qa = ambient_to_quotient(a.degree, vector_to_ambient(a));
  auto qb = ambient_to_quotient(b.degree, vector_to_ambient(b));
  return qa == qb;
}

std::vector<FreeHomBasisElement> hom_space_basis(const GradedFreeModule& P,
                                                 const ModulePresentation& N) {
  std::vector<FreeHomBasisElement> basis;
  for (int r = 0; r < P.rank(); ++r)
    for (GradedVector& v : N.piece_vectors(-P.twists[r]))
      basis.push_back({r, std::move(v)});
  return basis;
}

KMatrix kernel_pieces(const GradedMatrix& m, int d) { return kernel_basis(m.piece_map(d)); }

Subspace image_pieces(const GradedMatrix& m, int d) {
  return Subspace::from_columns(m.piece_map(d));
}

}  // namespace mfstab
