#pragma once

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "vekua/domain.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/meridional.hpp"
#include "vekua/radial_profile.hpp"
#include "vekua/types.hpp"

namespace vekua {

enum class BvpCase { Meridional, Transverse };

struct BoundarySample {
    Complex point;
    double value;
};

struct BvpProblem {
    BvpCase kind = BvpCase::Transverse;
    Domain domain = Domain::rectangle(0, 1, 0, 1);
    RadialProfile profile = RadialProfile::constant(1.0);
    Complex z0{};
    std::vector<BoundarySample> boundary;
    int n_max = 0;
};

struct BvpSolution {
    std::vector<double> coefficients; // column layout below
    double boundary_residual_max = 0.0;
    double boundary_residual_rms = 0.0;
    double condition_estimate = 0.0;
    int rank = 0;
};

/// Column layout of the real basis: column 0 is the n=0 coefficient-1 member
/// (its coefficient-i partner has identically zero real part and is dropped);
/// for n >= 1 columns 2n-1 and 2n hold the coefficient-1 and coefficient-i
/// members.
inline int basis_size(int n_max) { return 2 * n_max + 1; }
struct BasisColumn {
    int n;
    Coeff coeff;
};
inline BasisColumn basis_column(int j) {
    if (j == 0) return {0, Coeff::One};
    return {(j + 1) / 2, j % 2 == 1 ? Coeff::One : Coeff::I};
}

/// Trial family of exact solutions sampled at arbitrary points. sample gives
/// the real (Dirichlet-trace) values; sample_w the full p-analytic values
/// used for field maps and conjugates.
class PowerBasis {
  public:
    virtual ~PowerBasis() = default;
    virtual int size() const = 0;
    virtual Eigen::MatrixXd sample(std::span<const Complex> points) const = 0;
    virtual Eigen::MatrixXcd sample_w(std::span<const Complex> points) const = 0;
};

class TransversePowerBasis final : public PowerBasis {
  public:
    TransversePowerBasis(RadialProfile profile, Domain domain, Complex z0, int n_max,
                         PowerTableOptions opt = {});
    int size() const override { return basis_size(n_max_); }
    Eigen::MatrixXd sample(std::span<const Complex> points) const override;
    Eigen::MatrixXcd sample_w(std::span<const Complex> points) const override;

  private:
    RadialProfile profile_;
    Domain domain_;
    Complex z0_;
    int n_max_;
    PowerTableOptions opt_;
    GeneratingSequence seq_;
};

class MeridionalPowerBasis final : public PowerBasis {
  public:
    MeridionalPowerBasis(RadialProfile profile, Domain domain, Complex z0, int n_max,
                         int grid_points = 512);
    int size() const override { return basis_size(n_max_); }
    Eigen::MatrixXd sample(std::span<const Complex> points) const override;
    Eigen::MatrixXcd sample_w(std::span<const Complex> points) const override;
    const XSequence& sequence() const { return *xs_; }

  private:
    std::shared_ptr<XSequence> xs_;
    Complex z0_;
    int n_max_;
};

std::unique_ptr<PowerBasis> make_basis(const BvpProblem& problem);

/// Design matrix: boundary samples by basis columns.
Eigen::MatrixXd assemble(const BvpProblem& problem, const PowerBasis& basis);

/// Least squares by rank-revealing orthogonal factorization with column
/// equilibration; rank-deficient systems get the minimum-norm solution and a
/// rank below the column count. threshold < 0 keeps the factorization default.
BvpSolution solve_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                                double threshold = -1.0);

BvpSolution solve(const BvpProblem& problem, const PowerBasis& basis, double threshold = -1.0);

/// u and field components at interior points. Transverse: E = grad u by
/// central differences; meridional: (E1, E2) = (E_r, E_3) term-wise from the
/// complex basis values.
struct SolutionEvaluation {
    std::vector<double> u;
    std::vector<double> e1, e2;
};
SolutionEvaluation evaluate_solution(const BvpSolution& sol, const BvpProblem& problem,
                                     const PowerBasis& basis, std::span<const Complex> points);

std::vector<BoundarySample> sample_boundary(const Domain& domain, int count,
                                            const std::function<double(Complex)>& data);
inline int default_collocation_count(int n_max, double oversampling = 4.0) {
    return static_cast<int>(std::ceil(oversampling * basis_size(n_max)));
}

} // namespace vekua
