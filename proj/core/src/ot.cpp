#include "specgw/ot.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>

namespace specgw {

namespace {

struct Arc {
    int i;  // source row
    int j;  // sink column
    double flow;
};

// Transportation simplex on the dense bipartite problem. The basis is a
// spanning tree on m+n nodes (sources 0..m-1, sinks m..m+n-1); duals are
// recomputed from the tree each pivot, which is cheap at the sizes used
// here and avoids incremental-update bookkeeping errors.
class TransportSimplex {
  public:
    TransportSimplex(const Eigen::MatrixXd& cost, Eigen::VectorXd supply,
                     Eigen::VectorXd demand)
        : cost_(cost),
          m_(static_cast<int>(supply.size())),
          n_(static_cast<int>(demand.size())) {
        northwest_corner(std::move(supply), std::move(demand));
        tol_ = 1e-12 * std::max(1e-300, cost_.cwiseAbs().maxCoeff());
    }

    Eigen::MatrixXd solve() {
        const long max_pivots = 4000L * (m_ + n_) + 100000L;
        long degenerate_streak = 0;
        const long bland_after = 100L * (m_ + n_);
        for (long pivot = 0; pivot < max_pivots; ++pivot) {
            compute_duals();
            auto [ei, ej] = find_entering(degenerate_streak >= bland_after);
            if (ei < 0) return extract();
            double delta = pivot_on(ei, ej);
            degenerate_streak = delta > 0.0 ? 0 : degenerate_streak + 1;
        }
        throw std::runtime_error("solve_linear_ot: simplex exceeded pivot limit");
    }

  private:
    void northwest_corner(Eigen::VectorXd a, Eigen::VectorXd b) {
        arcs_.reserve(m_ + n_ - 1);
        int i = 0, j = 0;
        while (true) {
            double f = std::min(a[i], b[j]);
            arcs_.push_back({i, j, f});
            a[i] -= f;
            b[j] -= f;
            if (i == m_ - 1 && j == n_ - 1) break;
            if (j == n_ - 1)
                ++i;
            else if (i == m_ - 1)
                ++j;
            else if (a[i] <= b[j])
                ++i;
            else
                ++j;
        }
        rebuild_adjacency();
    }

    void rebuild_adjacency() {
        adjacency_.assign(m_ + n_, {});
        for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
            adjacency_[arcs_[e].i].push_back(e);
            adjacency_[m_ + arcs_[e].j].push_back(e);
        }
    }

    void compute_duals() {
        u_.assign(m_, 0.0);
        v_.assign(n_, 0.0);
        std::vector<char> seen(m_ + n_, 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            for (int e : adjacency_[node]) {
                const Arc& arc = arcs_[e];
                int other = node < m_ ? m_ + arc.j : arc.i;
                if (seen[other]) continue;
                seen[other] = 1;
                if (other >= m_)
                    v_[arc.j] = cost_(arc.i, arc.j) - u_[arc.i];
                else
                    u_[arc.i] = cost_(arc.i, arc.j) - v_[arc.j];
                queue.push_back(other);
            }
        }
    }

    std::pair<int, int> find_entering(bool bland) const {
        int bi = -1, bj = -1;
        double best = -tol_;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) {
                double r = cost_(i, j) - u_[i] - v_[j];
                if (r < best) {
                    if (bland) return {i, j};
                    best = r;
                    bi = i;
                    bj = j;
                }
            }
        return {bi, bj};
    }

    // Adds arc (ei, ej), shifts flow around the unique tree cycle, removes
    // the blocking arc. Returns the shifted amount.
    double pivot_on(int ei, int ej) {
        std::vector<int> parent_arc(m_ + n_, -1), parent_node(m_ + n_, -1);
        std::vector<char> seen(m_ + n_, 0);
        std::deque<int> queue{ei};
        seen[ei] = 1;
        const int target = m_ + ej;
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            if (node == target) break;
            for (int e : adjacency_[node]) {
                const Arc& arc = arcs_[e];
                int other = node < m_ ? m_ + arc.j : arc.i;
                if (seen[other]) continue;
                seen[other] = 1;
                parent_arc[other] = e;
                parent_node[other] = node;
                queue.push_back(other);
            }
        }
        if (!seen[target]) throw std::runtime_error("solve_linear_ot: basis lost connectivity");

        // Path arcs from the sink end back to ei; entering arc carries +.
        std::vector<int> path;
        for (int node = target; node != ei; node = parent_node[node])
            path.push_back(parent_arc[node]);
        // path is ordered sink-side first; arcs adjacent to the entering arc's
        // sink get -, then signs alternate.
        double delta = std::numeric_limits<double>::infinity();
        int leaving = -1;
        for (int k = 0; k < static_cast<int>(path.size()); ++k) {
            if (k % 2 == 0) {
                const Arc& arc = arcs_[path[k]];
                if (arc.flow < delta) {
                    delta = arc.flow;
                    leaving = path[k];
                }
            }
        }
        if (leaving < 0) throw std::runtime_error("solve_linear_ot: degenerate cycle");

        delta = std::max(delta, 0.0);
        for (int k = 0; k < static_cast<int>(path.size()); ++k)
            arcs_[path[k]].flow += (k % 2 == 0) ? -delta : delta;
        arcs_[leaving] = {ei, ej, delta};
        rebuild_adjacency();
        return delta;
    }

    Eigen::MatrixXd extract() const {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m_, n_);
        for (const Arc& arc : arcs_) out(arc.i, arc.j) += std::max(arc.flow, 0.0);
        return out;
    }

    const Eigen::MatrixXd& cost_;
    int m_, n_;
    double tol_ = 0.0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<double> u_, v_;
};

}  // namespace

Eigen::MatrixXd solve_linear_ot(const Eigen::MatrixXd& cost, const Eigen::VectorXd& p,
                                const Eigen::VectorXd& q) {
    if (cost.rows() != p.size() || cost.cols() != q.size())
        throw std::invalid_argument("solve_linear_ot: cost shape does not match marginals");
    if (!cost.allFinite()) throw std::invalid_argument("solve_linear_ot: non-finite cost");
    if (p.minCoeff() < 0.0 || q.minCoeff() < 0.0)
        throw std::invalid_argument("solve_linear_ot: negative marginal");
    double sp = p.sum(), sq = q.sum();
    if (std::abs(sp - sq) > 1e-9)
        throw std::invalid_argument("solve_linear_ot: marginal sums differ beyond 1e-9");
    // Scale the demand side so both sides sum identically and the northwest
    // corner start closes exactly.
    Eigen::VectorXd demand = q * (sp / sq);
    TransportSimplex simplex(cost, p, demand);
    return simplex.solve();
}

Coupling solve_linear_ot(const Eigen::MatrixXd& cost, const NodeDistribution& p,
                         const NodeDistribution& q) {
    return Coupling{solve_linear_ot(cost, p.weights, q.weights), p, q};
}

}  // namespace specgw
