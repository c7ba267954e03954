#include "firstfall/groebner.hpp"

#include <algorithm>
#include <unordered_map>

#include "firstfall/linalg.hpp"

namespace firstfall {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  const int ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  for (std::size_t k = a.exps.size(); k-- > 0;)
    if (a.exps[k] != b.exps[k]) return a.exps[k] < b.exps[k];
  return false;
}

long long GBTrace::quotient_dim(const RingSpec& standard_ring, int d) const {
  long long count = 0;
  for (const auto& m : monomial_basis(standard_ring, MultiDegree{d})) {
    const bool in_lead = std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!in_lead) ++count;
  }
  return count;
}

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t k = 0; k < out.exps.size(); ++k) out.exps[k] = std::max(a.exps[k], b.exps[k]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.exps.size(); ++k)
    if (a.exps[k] && b.exps[k]) return false;
  return true;
}

SystemInstance standard_view(const SystemInstance& sys) {
  SystemInstance out = sys.ring.s() == 1 ? sys : sys.collapsed();
  for (const auto& w : out.ring.weights())
    if (w[0] != 1) throw Error(ErrorKind::InvalidArgument, "the Groebner engine needs standard degree 1 variables");
  return out;
}

}  // namespace

GBTrace reduced_gb_bounded(const SystemInstance& sys_in, int max_degree, std::size_t cell_cap) {
  const SystemInstance sys = standard_view(sys_in);
  const auto degs = sys.degrees();
  const FieldSpec& f = sys.ring.field();
  const int n = sys.ring.n();

  GBTrace trace;
  trace.max_degree = max_degree;
  if (sys.polys.empty()) {
    trace.complete = true;
    trace.degree_reached = 0;
    trace.d_slv = DegreeAnswer::found(0, max_degree);
    return trace;
  }
  int min_deg = degs.front()[0], max_gen = degs.front()[0];
  for (const auto& d : degs) {
    min_deg = std::min(min_deg, d[0]);
    max_gen = std::max(max_gen, d[0]);
  }
  if (max_degree < max_gen)
    throw Error(ErrorKind::InvalidArgument, "max_degree is below the largest generator degree");

  std::vector<Poly> prev_space;  // basis of I_{d-1}
  int last_new = -1;
  for (int d = min_deg; d <= max_degree; ++d) {
    std::vector<Monomial> cols = monomial_basis(sys.ring, MultiDegree{d});
    std::sort(cols.begin(), cols.end(), grevlex_greater);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], static_cast<std::uint32_t>(c));

    const std::size_t expected_rows = prev_space.size() * static_cast<std::size_t>(n) + sys.size();
    if (expected_rows * cols.size() > cell_cap)
      throw Error(ErrorKind::BoundTooLarge, "degree " + std::to_string(d) + " step exceeds the size guard");

    SparseMatrix mat;
    mat.ncols = cols.size();
    auto push = [&](const Poly& p, const Monomial* shift) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
      for (const auto& [mono, c] : p.terms())
        entries.emplace_back(col_of.at(shift ? mono * *shift : mono), c.value);
      std::sort(entries.begin(), entries.end());
      SparseRow row;
      for (auto [col, v] : entries) {
        row.cols.push_back(col);
        row.vals.push_back(v);
      }
      mat.rows.push_back(std::move(row));
    };
    for (const auto& g : prev_space)
      for (int k = 0; k < n; ++k) {
        const Monomial xk = Monomial::var(n, k);
        push(g, &xk);
      }
    for (std::size_t i = 0; i < sys.size(); ++i)
      if (degs[i][0] == d) push(sys.polys[i], nullptr);

    std::vector<Poly> space;
    int fresh = 0;
    for (const auto& row : reduced_echelon(mat, f)) {
      Poly p;
      for (std::size_t k = 0; k < row.nnz(); ++k) p.add_term(cols[row.cols[k]], FieldElem{row.vals[k]}, f);
      const Monomial& lm = cols[row.cols.front()];
      const bool covered =
          std::any_of(trace.leading.begin(), trace.leading.end(), [&](const Monomial& l) { return l.divides(lm); });
      if (!covered) {
        trace.basis.push_back(p);
        trace.leading.push_back(lm);
        ++fresh;
      }
      space.push_back(std::move(p));
    }
    if (fresh > 0) {
      trace.new_leading_by_degree[d] = fresh;
      last_new = d;
    }
    prev_space = std::move(space);

    // Buchberger certificate: a d-truncated basis whose S-pairs all live in
    // degree <= d, with every generator consumed, is a full Groebner basis.
    // Pairs with coprime leading monomials reduce to zero and are skipped.
    if (d >= max_gen) {
      bool pairs_covered = true;
      for (std::size_t i = 0; i < trace.leading.size() && pairs_covered; ++i)
        for (std::size_t j = i + 1; j < trace.leading.size() && pairs_covered; ++j)
          pairs_covered = coprime(trace.leading[i], trace.leading[j]) ||
                          lcm(trace.leading[i], trace.leading[j]).total() <= d;
      if (pairs_covered) {
        trace.complete = true;
        trace.degree_reached = d;
        break;
      }
    }
  }
  trace.d_slv = trace.complete ? DegreeAnswer::found(last_new, max_degree) : DegreeAnswer::not_found(max_degree);
  return trace;
}

DegreeAnswer solving_degree(const SystemInstance& sys, int max_degree) {
  return reduced_gb_bounded(sys, max_degree).d_slv;
}

nlohmann::json to_json(const GBTrace& trace) {
  nlohmann::json j;
  j["max_degree"] = trace.max_degree;
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [d, c] : trace.new_leading_by_degree) counts.push_back({d, c});
  j["new_leading_by_degree"] = counts;
  j["d_slv"] = trace.d_slv.str();
  j["complete"] = trace.complete;
  j["degree_reached"] = trace.degree_reached;
  nlohmann::json leads = nlohmann::json::array();
  for (const auto& m : trace.leading) leads.push_back(m.exps);
  j["leading_monomials"] = leads;
  return j;
}

}  // namespace firstfall
