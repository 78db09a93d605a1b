#pragma once

// Agreement checks between a concrete graph and the parameters computed from
// its intersection array: distance layer sizes, the full p-table, the
// adjacency spectrum and the antipodal p^D_{D2} closed form.

#include "drg/derived.hpp"
#include "drg/graph.hpp"
#include "drg/spectra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace drg {

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CrossCheckReport {
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
};

inline constexpr double kSpectrumTolerance = 1e-9;
inline constexpr int kFullPTableMaxVertices = 130;

/// Eigenvalues of the adjacency matrix, descending.
inline std::vector<double> adjacency_spectrum(const Graph& g) {
  const int n = g.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[static_cast<std::size_t>(v)]) a(v, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// The multiset {theta_i with multiplicity m_i} against numeric adjacency
/// eigenvalues. Each theta must be matched by exactly m_i values within
/// tolerance plus its isolating interval width.
inline CheckLine compare_spectrum(const Spectrum& s, const std::vector<double>& adj) {
  CheckLine line{"spectrum", true, {}};
  std::ostringstream msg;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < s.thetas.size(); ++i) {
    const auto& m = s.mults[i];
    if (!m.exact || !is_integer(*m.exact) || *m.exact < 0) {
      line.ok = false;
      msg << "theta_" << i << ": multiplicity not an exact integer; ";
      continue;
    }
    const auto mult = static_cast<std::size_t>(num(*m.exact));
    const double centre = s.thetas[i].approx();
    const double tol = kSpectrumTolerance + to_double(s.thetas[i].width());
    for (std::size_t r = 0; r < mult; ++r, ++pos) {
      if (pos >= adj.size() || std::fabs(adj[pos] - centre) > tol) {
        line.ok = false;
        msg << "theta_" << i << " ~ " << centre << " x" << mult << " not matched at position " << pos << "; ";
        break;
      }
    }
    if (!line.ok) break;
    msg << centre << "^" << mult << " ";
  }
  if (line.ok && pos != adj.size()) {
    line.ok = false;
    msg << "multiplicities sum to " << pos << ", graph has " << adj.size() << " vertices";
  }
  line.detail = msg.str();
  return line;
}

/// Runs every check for a graph against the array BFS extracted from it.
inline CrossCheckReport cross_check(const Graph& g, const DrgCertificate& cert) {
  CrossCheckReport rep;
  const auto& arr = cert.array;
  const auto d = derive(arr);
  const int D = arr.diameter();

  {
    CheckLine l{"layer sizes k_i", true, {}};
    std::ostringstream msg;
    for (int i = 0; i <= D; ++i) {
      const auto& ki = d.kdist[static_cast<std::size_t>(i)];
      const auto counted = cert.layer_sizes[static_cast<std::size_t>(i)];
      msg << (i ? "," : "") << counted;
      if (ki != counted) {
        l.ok = false;
        msg << " (derived " << to_string(ki) << ")";
      }
    }
    l.detail = msg.str();
    rep.lines.push_back(l);
  }
  rep.lines.push_back({"vertex count n", d.n == g.n(), "n=" + std::to_string(g.n()) + ", derived " + to_string(d.n)});
  rep.lines.push_back({"bipartite flag", d.bipartite == cert.bipartite, cert.bipartite ? "bipartite" : "not bipartite"});
  rep.lines.push_back({"antipodal2 flag", d.antipodal2 == cert.antipodal2, cert.antipodal2 ? "k_D=1" : "k_D>1"});

  if (g.n() <= kFullPTableMaxVertices) {
    const PTable counted = count_p_table(g, /*all_pairs=*/true);
    CheckLine l{"p-table (all triples)", counted == d.p, {}};
    if (!l.ok) {
      for (int i = 0; i <= D && l.detail.empty(); ++i)
        for (int j = 0; j <= D && l.detail.empty(); ++j)
          for (int h = 0; h <= D; ++h) {
            const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j), H = static_cast<std::size_t>(h);
            if (counted[I][J][H] != d.p[I][J][H]) {
              l.detail = "p^" + std::to_string(i) + "_" + std::to_string(j) + std::to_string(h) + ": counted " +
                         to_string(counted[I][J][H]) + ", derived " + to_string(d.p[I][J][H]);
              break;
            }
          }
    } else {
      l.detail = std::to_string((D + 1) * (D + 1) * (D + 1)) + " entries";
    }
    rep.lines.push_back(l);

    if (D >= 2 && arr.a(D) == 0) {
      const Rational closed = p_closed_form_DD2(arr);
      const Rational& direct = counted[static_cast<std::size_t>(D)][static_cast<std::size_t>(D)][2];
      rep.lines.push_back({"p^D_{D2} closed form", closed == direct,
                           "closed " + to_string(closed) + ", counted " + to_string(direct)});
    }
  }

  rep.lines.push_back(compare_spectrum(full_spectrum(arr), adjacency_spectrum(g)));
  return rep;
}

}  // namespace drg
