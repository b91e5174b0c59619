#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bellcal/errors.hpp"

namespace bellcal {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// state -> probability vector over actions (nonnegative, sums to 1)
using Policy = std::function<VectorXd(const VectorXd&)>;
// state -> scalar value
using ValueFn = std::function<double(const VectorXd&)>;
// (state, action) -> scalar
using QFn = std::function<double(const VectorXd&, int)>;

// One logged (S, A, R, S', done) tuple under the behavior policy.
// behavior_probs ("bp") and customer_id ("cid") are optional extensions
// written by the simulator; empty / negative when absent.
struct Transition {
    VectorXd state;
    int action = 0;
    double reward = 0.0;
    VectorXd next_state;
    bool done = false;
    VectorXd behavior_probs; // size 0 when not logged
    std::int64_t customer_id = -1;
};

struct TransitionDataset {
    std::vector<Transition> transitions;
    int num_actions = 0;
    int state_dim = 0;
    std::uint64_t seed = 0;

    std::size_t size() const { return transitions.size(); }
    // Throws Error if any Transition violates the dataset header.
    void validate() const;
};

// Finite MDP used as a brute-force oracle: P[a](s, s') stochastic,
// rewards(s, a), initial distribution rho, discount in [0, 1).
struct TabularMDP {
    std::vector<MatrixXd> transition; // one num_states x num_states matrix per action
    MatrixXd rewards;                 // num_states x num_actions
    VectorXd initial_dist;
    double discount = 0.0;

    int num_states() const { return static_cast<int>(rewards.rows()); }
    int num_actions() const { return static_cast<int>(rewards.cols()); }
    void validate() const;
};

// Tabular states travel through the generic interfaces as a 1-d vector
// holding the state index.
inline VectorXd tabular_state(int s) {
    VectorXd v(1);
    v(0) = static_cast<double>(s);
    return v;
}
inline int tabular_index(const VectorXd& s) { return static_cast<int>(s(0)); }

// Wraps a num_states x num_actions probability matrix as a Policy.
Policy tabular_policy(const MatrixXd& probs);

// (pi f)(s) = sum_a pi(a|s) f(s, a)
double policy_marginalize(const QFn& f, const Policy& pi, const VectorXd& s);
double policy_marginalize(const Eigen::Ref<const VectorXd>& q_values,
                          const Eigen::Ref<const VectorXd>& probs);

// pi(a|s) / b0(a|s). Throws OverlapViolation when b0 is zero but pi is not;
// returns 0 when both are zero.
double importance_ratio(const Policy& pi, const Policy& b0, const VectorXd& s, int a);

// Policy-marginalized reward vector r_pi and kernel P_pi.
VectorXd policy_reward(const TabularMDP& mdp, const MatrixXd& pi_probs);
MatrixXd policy_kernel(const TabularMDP& mdp, const MatrixXd& pi_probs);

// r_pi + gamma * P_pi * v
VectorXd bellman_apply(const TabularMDP& mdp, const MatrixXd& pi_probs,
                       const Eigen::Ref<const VectorXd>& v);

// Solves (I - gamma P_pi) v = r_pi directly; the result satisfies
// ||v - bellman_apply(v)||_inf <= 1e-8 or SolverFailure is thrown.
VectorXd tabular_value_solve(const TabularMDP& mdp, const MatrixXd& pi_probs);

// Stationary distribution of a row-stochastic kernel by power iteration on
// the transpose (tolerance 1e-12 in total variation, 10000 iteration cap).
// nullopt when the iteration does not converge.
std::optional<VectorXd> stationary_distribution(const MatrixXd& kernel,
                                                double tol = 1e-12,
                                                int max_iter = 10000);

// Average state marginal (rho, rho P, ..., rho P^{T-1}) / T under `probs`;
// the default weighting measure for coarsened-operator diagnostics.
VectorXd behavior_occupancy(const TabularMDP& mdp, const MatrixXd& probs, int horizon);

} // namespace bellcal
