#include "bellcal/mdp.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace bellcal {

void TransitionDataset::validate() const {
    if (transitions.empty()) throw Error("dataset is empty");
    if (num_actions < 1 || state_dim < 1)
        throw Error("dataset header must declare num_actions >= 1 and state_dim >= 1");
    for (const Transition& tr : transitions) {
        if (tr.state.size() != state_dim || tr.next_state.size() != state_dim)
            throw DimensionMismatch("transition state dimension does not match header");
        if (tr.action < 0 || tr.action >= num_actions)
            throw Error("transition action out of range");
        if (!std::isfinite(tr.reward)) throw Error("transition reward is not finite");
        if (tr.behavior_probs.size() != 0 && tr.behavior_probs.size() != num_actions)
            throw DimensionMismatch("behavior probability vector has wrong length");
    }
}

void TabularMDP::validate() const {
    const int S = num_states();
    const int A = num_actions();
    if (S < 1 || A < 1) throw Error("TabularMDP must have at least one state and action");
    if (static_cast<int>(transition.size()) != A)
        throw DimensionMismatch("transition tensor must have one matrix per action");
    for (const MatrixXd& P : transition) {
        if (P.rows() != S || P.cols() != S)
            throw DimensionMismatch("transition matrix has wrong shape");
        for (int s = 0; s < S; ++s) {
            if (P.row(s).minCoeff() < 0.0) throw Error("negative transition probability");
            if (std::abs(P.row(s).sum() - 1.0) > 1e-12)
                throw Error("transition row does not sum to 1");
        }
    }
    if (initial_dist.size() != S) throw DimensionMismatch("initial distribution has wrong length");
    if (std::abs(initial_dist.sum() - 1.0) > 1e-12 || initial_dist.minCoeff() < 0.0)
        throw Error("initial distribution is not a probability vector");
    if (!(discount >= 0.0 && discount < 1.0)) throw Error("discount must be in [0, 1)");
}

Policy tabular_policy(const MatrixXd& probs) {
    return [probs](const VectorXd& s) -> VectorXd { return probs.row(tabular_index(s)); };
}

double policy_marginalize(const Eigen::Ref<const VectorXd>& q_values,
                          const Eigen::Ref<const VectorXd>& probs) {
    if (q_values.size() != probs.size())
        throw DimensionMismatch("policy_marginalize: q-values and probabilities differ in length");
    return probs.dot(q_values);
}

double policy_marginalize(const QFn& f, const Policy& pi, const VectorXd& s) {
    const VectorXd probs = pi(s);
    VectorXd q(probs.size());
    for (int a = 0; a < probs.size(); ++a) {
        q(a) = f(s, a);
        if (!std::isfinite(q(a))) throw Error("policy_marginalize: non-finite q-value");
    }
    return policy_marginalize(q, probs);
}

double importance_ratio(const Policy& pi, const Policy& b0, const VectorXd& s, int a) {
    const double p = pi(s)(a);
    const double b = b0(s)(a);
    if (b <= 0.0) {
        if (p <= 0.0) return 0.0;
        throw OverlapViolation("importance_ratio: behavior assigns zero probability to a target action");
    }
    return p / b;
}

VectorXd policy_reward(const TabularMDP& mdp, const MatrixXd& pi_probs) {
    return (mdp.rewards.array() * pi_probs.array()).rowwise().sum();
}

MatrixXd policy_kernel(const TabularMDP& mdp, const MatrixXd& pi_probs) {
    const int S = mdp.num_states();
    MatrixXd P = MatrixXd::Zero(S, S);
    for (int a = 0; a < mdp.num_actions(); ++a)
        P += pi_probs.col(a).asDiagonal() * mdp.transition[a];
    return P;
}

VectorXd bellman_apply(const TabularMDP& mdp, const MatrixXd& pi_probs,
                       const Eigen::Ref<const VectorXd>& v) {
    if (v.size() != mdp.num_states())
        throw DimensionMismatch("bellman_apply: value vector length does not match num_states");
    return policy_reward(mdp, pi_probs) + mdp.discount * (policy_kernel(mdp, pi_probs) * v);
}

VectorXd tabular_value_solve(const TabularMDP& mdp, const MatrixXd& pi_probs) {
    const int S = mdp.num_states();
    const MatrixXd A = MatrixXd::Identity(S, S) - mdp.discount * policy_kernel(mdp, pi_probs);
    const VectorXd r = policy_reward(mdp, pi_probs);
    Eigen::PartialPivLU<MatrixXd> lu(A);
    const VectorXd v = lu.solve(r);
    const double residual = (v - bellman_apply(mdp, pi_probs, v)).cwiseAbs().maxCoeff();
    if (!v.allFinite() || residual > 1e-8)
        throw SolverFailure("tabular_value_solve: linear system is numerically singular");
    return v;
}

std::optional<VectorXd> stationary_distribution(const MatrixXd& kernel, double tol, int max_iter) {
    const int S = static_cast<int>(kernel.rows());
    VectorXd mu = VectorXd::Constant(S, 1.0 / S);
    for (int it = 0; it < max_iter; ++it) {
        VectorXd next = kernel.transpose() * mu;
        next /= next.sum();
        const double tv = 0.5 * (next - mu).cwiseAbs().sum();
        mu = next;
        if (tv < tol) return mu;
    }
    return std::nullopt;
}

VectorXd behavior_occupancy(const TabularMDP& mdp, const MatrixXd& probs, int horizon) {
    const MatrixXd P = policy_kernel(mdp, probs);
    VectorXd marginal = mdp.initial_dist;
    VectorXd acc = VectorXd::Zero(mdp.num_states());
    for (int t = 0; t < horizon; ++t) {
        acc += marginal;
        marginal = P.transpose() * marginal;
    }
    return acc / acc.sum();
}

} // namespace bellcal
