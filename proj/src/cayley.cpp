#include "bicay/cayley.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace bicay {

namespace {

uint64_t low_bits(unsigned n) {
  return n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
}

}  // namespace

ConnectionSet make_connection_set(const Group& g, const ConjugacyPartition& part,
                                  std::vector<unsigned> members) {
  std::sort(members.begin(), members.end());
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] == members[i + 1])
      throw StructureViolation("duplicate connection-set member");
  uint64_t mask = 0;
  for (unsigned x : members) {
    if (x >= g.order()) throw StructureViolation("member index out of range");
    if (x == 0) throw ContainsIdentity("connection sets exclude the identity");
    mask |= uint64_t(1) << x;
  }
  for (unsigned x : members)
    if (!((mask >> g.inv(x)) & 1))
      throw NotInverseClosed("member " + std::to_string(x) +
                             " lacks its inverse");

  ConnectionSet s;
  s.group = &g;
  s.members = std::move(members);
  for (unsigned x : s.members) s.order_partition[element_order(g, x)].push_back(x);
  s.class_profile.assign(part.classes.size(), 0);
  for (unsigned x : s.members) ++s.class_profile[part.class_of[x]];
  return s;
}

ConnectionSet make_connection_set(const Group& g, std::vector<unsigned> members) {
  return make_connection_set(g, conjugacy_classes(g), std::move(members));
}

CayleyGraph build_cayley(const Group& g, const ConnectionSet& s) {
  CayleyGraph graph;
  graph.group = &g;
  graph.set = s;
  graph.adj.assign(g.order(), 0);
  uint64_t mask = 0;
  for (unsigned x : s.members) mask |= uint64_t(1) << x;
  for (unsigned x = 0; x < g.order(); ++x)
    for (unsigned y = 0; y < g.order(); ++y)
      if ((mask >> g.op(g.inv(x), y)) & 1) graph.adj[x] |= uint64_t(1) << y;
  return graph;
}

bool graph_connected(const CayleyGraph& graph) {
  const unsigned n = graph.order();
  if (n == 0) return true;
  uint64_t seen = 1;
  uint64_t frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (unsigned x = 0; x < n; ++x)
      if ((frontier >> x) & 1) next |= graph.adj[x];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_bits(n);
}

std::vector<mpz_class> char_poly_exact(const std::vector<uint64_t>& adj,
                                       unsigned n) {
  auto bit = [&](unsigned i, unsigned j) -> bool { return (adj[i] >> j) & 1; };

  // Division-free Samuelson-Berkowitz iteration over leading principal
  // submatrices; coefficients kept in descending order during the build.
  std::vector<mpz_class> c{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<mpz_class> v(r + 1);
    v[0] = 1;
    v[1] = bit(r - 1, r - 1) ? -1 : 0;
    if (r >= 2) {
      std::vector<mpz_class> w(r - 1);
      for (unsigned j = 0; j + 1 < r; ++j) w[j] = bit(j, r - 1) ? 1 : 0;
      for (unsigned k = 2; k <= r; ++k) {
        mpz_class dot = 0;
        for (unsigned j = 0; j + 1 < r; ++j)
          if (bit(r - 1, j)) dot += w[j];
        v[k] = -dot;
        if (k == r) break;
        std::vector<mpz_class> next(r - 1, mpz_class(0));
        for (unsigned i = 0; i + 1 < r; ++i)
          for (unsigned j = 0; j + 1 < r; ++j)
            if (bit(i, j)) next[i] += w[j];
        w = std::move(next);
      }
    }
    // Lower-triangular Toeplitz product: convolution truncated to r+1 terms.
    std::vector<mpz_class> out(r + 1, mpz_class(0));
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (size_t j = 0; j < c.size() && i + j <= r; ++j)
        out[i + j] += v[i] * c[j];
    }
    c = std::move(out);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<mpz_class> char_poly_exact(const CayleyGraph& graph) {
  return char_poly_exact(graph.adj, graph.order());
}

std::vector<std::pair<double, unsigned>> eigenvalues_float(
    const std::vector<uint64_t>& adj, unsigned n) {
  constexpr double kTol = 1e-8;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if ((adj[i] >> j) & 1) a(i, j) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw Inconsistent("eigensolver failed to converge");
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending

  std::vector<std::pair<double, unsigned>> clusters;
  std::vector<double> last_of_cluster;
  for (unsigned i = 0; i < n; ++i) {
    double x = ev(i);
    if (!clusters.empty() && x - last_of_cluster.back() <= kTol) {
      auto& [mean, count] = clusters.back();
      mean = (mean * count + x) / (count + 1);
      ++count;
      last_of_cluster.back() = x;
    } else {
      if (!clusters.empty() && x - last_of_cluster.back() < 10 * kTol)
        throw ClusterAmbiguity("eigenvalue gap inside the guard band");
      clusters.push_back({x, 1});
      last_of_cluster.push_back(x);
    }
  }
  std::reverse(clusters.begin(), clusters.end());
  return clusters;
}

std::vector<std::pair<double, unsigned>> eigenvalues_float(
    const CayleyGraph& graph) {
  return eigenvalues_float(graph.adj, graph.order());
}

namespace {

// Exact linear-character eigenvalue: the sum of the row over the set.
Cyclotomic linear_eigenvalue(const CayleyGraph& graph,
                             const CharacterTable& table, unsigned row) {
  Cyclotomic acc = Cyclotomic::from_integer(0, table.conductor);
  for (unsigned s : graph.set.members)
    acc += table.rows[row][table.partition.class_of[s]];
  return acc;
}

}  // namespace

BabaiPowerSum babai_power_sum_check(const CayleyGraph& graph,
                                    const CharacterTable& table, unsigned row,
                                    unsigned t) {
  if (t != 1 && t != 2) throw Error("power-sum check supports t = 1 or 2");
  if (row >= table.h) throw Error("character row out of range");
  const Group& g = *graph.group;
  const unsigned e = table.conductor;

  BabaiPowerSum result;
  result.left = Cyclotomic::from_integer(0, e);

  // Right side: chi summed over t-fold products of set members.
  Cyclotomic right = Cyclotomic::from_integer(0, e);
  if (t == 1) {
    right = linear_eigenvalue(graph, table, row);
  } else {
    for (unsigned s1 : graph.set.members)
      for (unsigned s2 : graph.set.members)
        right += table.rows[row][table.partition.class_of[g.op(s1, s2)]];
  }
  result.right = right;
  result.right_approx = right.real_approx();

  if (table.degrees[row] == 1) {
    Cyclotomic lambda = linear_eigenvalue(graph, table, row);
    mpq_class q;
    bool placed = false;
    if (lambda.is_rational(&q) && q.get_den() == 1) {
      std::vector<mpz_class> p = char_poly_exact(graph);
      if (root_multiplicity(p, q.get_num()) >= 1) {
        result.left = (t == 1) ? lambda : lambda * lambda;
        result.left_approx = result.left.real_approx();
        result.exact = true;
        placed = true;
      }
    }
    if (!placed) {
      // Float extraction: nearest spectral cluster to the predicted value.
      double target = lambda.real_approx();
      double best = 0, gap = 1e300;
      for (auto [value, mult] : eigenvalues_float(graph))
        if (std::abs(value - target) < gap) {
          gap = std::abs(value - target);
          best = value;
        }
      result.left_approx = (t == 1) ? best : best * best;
      result.exact = false;
    }
    return result;
  }

  unsigned nonlinear_rows = 0;
  for (unsigned d : table.degrees) nonlinear_rows += d > 1;
  if (nonlinear_rows != 1)
    throw Error("nonlinear extraction needs a unique nonlinear character");

  // Power sums of the full spectrum are traces: 0 for t=1, n*|S| for t=2.
  long trace = (t == 1) ? 0
                        : static_cast<long>(g.order()) *
                              static_cast<long>(graph.set.members.size());
  Cyclotomic left = Cyclotomic::from_integer(trace, e);
  for (unsigned j : linear_characters(table)) {
    Cyclotomic lambda = linear_eigenvalue(graph, table, j);
    left -= (t == 1) ? lambda : lambda * lambda;
  }
  // The nonlinear block holds n copies of each of its eigenvalues.
  left *= Cyclotomic::from_rational(mpq_class(1, table.degrees[row]), e);
  result.left = left;
  result.left_approx = left.real_approx();
  result.exact = true;
  return result;
}

namespace {

std::vector<size_t> sorted_class_sizes(const ConjugacyPartition& part) {
  std::vector<size_t> sizes;
  for (const auto& c : part.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

unsigned order_count(const ConnectionSet& s, unsigned k) {
  auto it = s.order_partition.find(k);
  return it == s.order_partition.end()
             ? 0u
             : static_cast<unsigned>(it->second.size());
}

// Root multiplicity with in-place removal.
unsigned strip_root(std::vector<mpz_class>& p, long root) {
  unsigned count = 0;
  while (poly_divide_linear(p, mpz_class(root))) ++count;
  return count;
}

void require(bool cond, const char* what) {
  if (!cond) throw StructureViolation(what);
}

// Shared head of both classifiers: generating check, top eigenvalue
// uniqueness, and removal of the degree-|S| root.
std::vector<mpz_class> reduced_char_poly(const ConnectionSet& s) {
  const Group& g = *s.group;
  require(subgroup_generated(g, s.members).size() == g.order(),
          "connection set does not generate the group");
  CayleyGraph graph = build_cayley(g, s);
  require(graph_connected(graph), "generating set yet disconnected graph");
  std::vector<mpz_class> p = char_poly_exact(graph);
  unsigned top = strip_root(p, static_cast<long>(s.members.size()));
  require(top == 1, "degree is not a simple eigenvalue");
  return p;
}

}  // namespace

F20Classification classify_f20_spectrum(const ConnectionSet& s) {
  const Group& g = *s.group;
  require(g.order() == 20, "expected a group of order 20");
  require(sorted_class_sizes(conjugacy_classes(g)) ==
              std::vector<size_t>{1, 4, 5, 5, 5},
          "class structure is not the order-20 Frobenius group");

  long s2 = order_count(s, 2), s4 = order_count(s, 4), s5 = order_count(s, 5);
  F20Classification out;
  out.mu2 = s2 - s4 + s5;
  out.mu3 = s5 - s2;

  std::vector<mpz_class> p = reduced_char_poly(s);
  if (out.mu2 != out.mu3) {
    out.type = 1;
    out.mult2 = strip_root(p, out.mu2);
    out.mult3 = strip_root(p, out.mu3);
    require(out.mult2 % 4 == 1, "first multiplicity not 1 mod 4");
    require(out.mult3 % 4 == 2, "second multiplicity not 2 mod 4");
  } else {
    out.type = 2;
    out.mult2 = out.mult3 = strip_root(p, out.mu2);
    require(out.mult2 % 4 == 3, "merged multiplicity not 3 mod 4");
  }
  require(p.size() == 1 || poly_nth_root(p, 4).has_value(),
          "residual spectrum not in blocks of four");
  return out;
}

F42Classification classify_f42_spectrum(const ConnectionSet& s) {
  const Group& g = *s.group;
  require(g.order() == 42, "expected a group of order 42");
  require(sorted_class_sizes(conjugacy_classes(g)) ==
              std::vector<size_t>{1, 6, 7, 7, 7, 7, 7},
          "class structure is not the order-42 Frobenius group");

  long s2 = order_count(s, 2), s3 = order_count(s, 3);
  long s6 = order_count(s, 6), s7 = order_count(s, 7);
  require(s3 % 2 == 0 && s6 % 2 == 0, "odd count of paired-order elements");

  F42Classification out;
  out.mu2 = -s2 + s3 - s6 + s7;
  out.mu3 = s2 - (s3 + s6) / 2 + s7;
  out.mu5 = -s2 + (s6 - s3) / 2 + s7;

  std::vector<mpz_class> p = reduced_char_poly(s);
  const bool eq23 = out.mu2 == out.mu3;
  const bool eq25 = out.mu2 == out.mu5;
  const bool eq35 = out.mu3 == out.mu5;

  if (!eq23 && !eq25 && !eq35) {
    out.type = 1;
    out.mult2 = strip_root(p, out.mu2);
    out.mult3 = strip_root(p, out.mu3);
    out.mult5 = strip_root(p, out.mu5);
    require(out.mult2 % 6 == 1, "mu2 multiplicity not 1 mod 6");
    require(out.mult3 % 6 == 2, "mu3 multiplicity not 2 mod 6");
    require(out.mult5 % 6 == 2, "mu5 multiplicity not 2 mod 6");
  } else if (eq35 && !eq23) {
    out.type = 2;
    out.mult2 = strip_root(p, out.mu2);
    out.mult3 = out.mult5 = strip_root(p, out.mu3);
    require(out.mult2 % 6 == 1, "mu2 multiplicity not 1 mod 6");
    require(out.mult3 % 6 == 4, "merged multiplicity not 4 mod 6");
  } else if (eq23 && !eq25) {
    out.type = 3;
    out.mult2 = out.mult3 = strip_root(p, out.mu2);
    out.mult5 = strip_root(p, out.mu5);
    require(out.mult2 % 6 == 3, "merged multiplicity not 3 mod 6");
    require(out.mult5 % 6 == 2, "mu5 multiplicity not 2 mod 6");
  } else if (eq25 && !eq23) {
    out.type = 4;
    out.mult2 = out.mult5 = strip_root(p, out.mu2);
    out.mult3 = strip_root(p, out.mu3);
    require(out.mult2 % 6 == 3, "merged multiplicity not 3 mod 6");
    require(out.mult3 % 6 == 2, "mu3 multiplicity not 2 mod 6");
  } else {
    out.type = 5;
    out.mult2 = out.mult3 = out.mult5 = strip_root(p, out.mu2);
    require(out.mult2 % 6 == 5, "merged multiplicity not 5 mod 6");
  }
  require(p.size() == 1 || poly_nth_root(p, 6).has_value(),
          "residual spectrum not in blocks of six");
  return out;
}

SpectrumReport spectrum_report(const CayleyGraph& graph,
                               const CharacterTable& table) {
  SpectrumReport report;
  report.char_poly = char_poly_exact(graph);
  report.eigs = eigenvalues_float(graph);
  for (unsigned j : linear_characters(table))
    report.babai_m1.push_back(linear_eigenvalue(graph, table, j));

  const Group& g = *graph.group;
  bool generating = subgroup_generated(g, graph.set.members).size() == g.order();
  if (generating && g.order() == 20 &&
      sorted_class_sizes(table.partition) == std::vector<size_t>{1, 4, 5, 5, 5}) {
    F20Classification c = classify_f20_spectrum(graph.set);
    report.structure_tag = "f20-type" + std::to_string(c.type) + "(mu2=" +
                           std::to_string(c.mu2) + "x" + std::to_string(c.mult2) +
                           ",mu3=" + std::to_string(c.mu3) + "x" +
                           std::to_string(c.mult3) + ")";
  } else if (generating && g.order() == 42 &&
             sorted_class_sizes(table.partition) ==
                 std::vector<size_t>{1, 6, 7, 7, 7, 7, 7}) {
    F42Classification c = classify_f42_spectrum(graph.set);
    report.structure_tag = "f42-type" + std::to_string(c.type) + "(mu2=" +
                           std::to_string(c.mu2) + "x" + std::to_string(c.mult2) +
                           ",mu3=" + std::to_string(c.mu3) + "x" +
                           std::to_string(c.mult3) + ",mu5=" +
                           std::to_string(c.mu5) + "x" + std::to_string(c.mult5) +
                           ")";
  }
  return report;
}

}  // namespace bicay
