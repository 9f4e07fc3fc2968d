#include "vekua/bvp.hpp"

#include <cmath>
#include <stdexcept>

namespace vekua {

TransversePowerBasis::TransversePowerBasis(RadialProfile profile, Domain domain, Complex z0,
                                           int n_max, PowerTableOptions opt)
    : profile_(std::move(profile)), domain_(std::move(domain)), z0_(z0), n_max_(n_max),
      opt_(std::move(opt)), seq_(transverse_sequence(profile_)) {
    if (n_max < 0) throw std::invalid_argument("TransversePowerBasis: n_max must be >= 0");
    if (domain_.contains_origin())
        throw std::domain_error("TransversePowerBasis: domain must exclude the origin");
    opt_.with_refinement = false; // bulk sampling; refinement handled by callers that need it
}

Eigen::MatrixXcd TransversePowerBasis::sample_w(std::span<const Complex> points) const {
    const FormalPowerTable table =
        FormalPowerTable::build(seq_, profile_, z0_, n_max_, points, domain_, opt_);
    Eigen::MatrixXcd W(points.size(), size());
    for (size_t i = 0; i < points.size(); ++i) {
        const double f = profile_.sqrt_at(std::abs(points[i]));
        for (int j = 0; j < size(); ++j) {
            const BasisColumn col = basis_column(j);
            W(i, j) = star_power_from_vekua(table.value(col.n, col.coeff, i), f);
        }
    }
    return W;
}

Eigen::MatrixXd TransversePowerBasis::sample(std::span<const Complex> points) const {
    const FormalPowerTable table =
        FormalPowerTable::build(seq_, profile_, z0_, n_max_, points, domain_, opt_);
    Eigen::MatrixXd A(points.size(), size());
    for (size_t i = 0; i < points.size(); ++i) {
        const double f = profile_.sqrt_at(std::abs(points[i]));
        for (int j = 0; j < size(); ++j) {
            const BasisColumn col = basis_column(j);
            A(i, j) = table.value(col.n, col.coeff, i).real() / f;
        }
    }
    return A;
}

MeridionalPowerBasis::MeridionalPowerBasis(RadialProfile profile, Domain domain, Complex z0,
                                           int n_max, int grid_points)
    : z0_(z0), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("MeridionalPowerBasis: n_max must be >= 0");
    if (!(domain.min_x() > 0))
        throw std::domain_error("MeridionalPowerBasis: domain must lie in the half plane x > 0");
    if (!domain.contains(z0))
        throw std::domain_error("MeridionalPowerBasis: center must lie in the domain");
    // grid spans the domain x-extent; boundary points sit at the extremes
    double lo = domain.min_x(), hi = lo;
    switch (domain.kind()) {
    case Domain::Kind::Rectangle:
        hi = domain.x1();
        break;
    case Domain::Kind::Disk:
        hi = domain.center().real() + domain.radius();
        break;
    case Domain::Kind::Polygon:
        for (const auto& v : domain.vertices()) hi = std::max(hi, v.real());
        break;
    }
    xs_ = std::make_shared<XSequence>(profile, z0.real(),
                                      XSequence::make_grid(lo, hi, z0.real(), grid_points), n_max);
}

Eigen::MatrixXcd MeridionalPowerBasis::sample_w(std::span<const Complex> points) const {
    Eigen::MatrixXcd W(points.size(), size());
    for (size_t i = 0; i < points.size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            const BasisColumn col = basis_column(j);
            W(i, j) = eval_meridional_power(*xs_, col.n, coeff_value(col.coeff), z0_.imag(),
                                            points[i]);
        }
    }
    return W;
}

Eigen::MatrixXd MeridionalPowerBasis::sample(std::span<const Complex> points) const {
    return sample_w(points).real();
}

std::unique_ptr<PowerBasis> make_basis(const BvpProblem& problem) {
    if (problem.kind == BvpCase::Transverse)
        return std::make_unique<TransversePowerBasis>(problem.profile, problem.domain, problem.z0,
                                                      problem.n_max);
    return std::make_unique<MeridionalPowerBasis>(problem.profile, problem.domain, problem.z0,
                                                  problem.n_max);
}

Eigen::MatrixXd assemble(const BvpProblem& problem, const PowerBasis& basis) {
    if (problem.boundary.empty())
        throw std::invalid_argument("assemble: no boundary samples");
    std::vector<Complex> pts;
    pts.reserve(problem.boundary.size());
    for (const auto& s : problem.boundary) pts.push_back(s.point);
    return basis.sample(pts);
}

BvpSolution solve_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                                double threshold) {
    if (A.rows() < A.cols())
        throw std::invalid_argument("solve_least_squares: need at least as many rows as columns");
    if (A.rows() != rhs.size())
        throw std::invalid_argument("solve_least_squares: rhs size mismatch");

    // column equilibration: conditioning of formal-power columns degrades
    // geometrically in n, scaling recovers most of it without changing the
    // least-squares minimizer
    Eigen::VectorXd scale(A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        const double nrm = A.col(j).norm();
        scale(j) = nrm > 0 ? 1.0 / nrm : 1.0;
    }
    const Eigen::MatrixXd As = A * scale.asDiagonal();

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    if (threshold >= 0.0) cod.setThreshold(threshold);
    cod.compute(As);

    BvpSolution sol;
    sol.rank = static_cast<int>(cod.rank());
    const Eigen::VectorXd y = cod.solve(rhs);
    const Eigen::VectorXd x = scale.asDiagonal() * y;
    sol.coefficients.assign(x.data(), x.data() + x.size());

    const auto T = cod.matrixT();
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < sol.rank; ++k) {
        const double d = std::abs(T(k, k));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    sol.condition_estimate = (sol.rank > 0 && dmin > 0) ? dmax / dmin
                                                        : std::numeric_limits<double>::infinity();

    const Eigen::VectorXd res = A * x - rhs;
    sol.boundary_residual_max = res.size() ? res.cwiseAbs().maxCoeff() : 0.0;
    sol.boundary_residual_rms = res.size() ? std::sqrt(res.squaredNorm() / res.size()) : 0.0;
    return sol;
}

BvpSolution solve(const BvpProblem& problem, const PowerBasis& basis, double threshold) {
    const Eigen::MatrixXd A = assemble(problem, basis);
    Eigen::VectorXd b(problem.boundary.size());
    for (size_t i = 0; i < problem.boundary.size(); ++i) b(i) = problem.boundary[i].value;
    return solve_least_squares(A, b, threshold);
}

SolutionEvaluation evaluate_solution(const BvpSolution& sol, const BvpProblem& problem,
                                     const PowerBasis& basis, std::span<const Complex> points) {
    if (static_cast<int>(sol.coefficients.size()) != basis.size())
        throw std::invalid_argument("evaluate_solution: coefficient count mismatch");
    for (const Complex& z : points)
        if (!problem.domain.contains(z))
            throw std::domain_error("evaluate_solution: point outside the domain");

    const Eigen::Map<const Eigen::VectorXd> c(sol.coefficients.data(), sol.coefficients.size());
    SolutionEvaluation out;
    out.u.resize(points.size());
    out.e1.resize(points.size());
    out.e2.resize(points.size());

    if (problem.kind == BvpCase::Meridional) {
        const Eigen::MatrixXcd W = basis.sample_w(points);
        const Eigen::VectorXcd w = W * c.cast<Complex>();
        for (size_t i = 0; i < points.size(); ++i) {
            out.u[i] = w(i).real();
            const MeridionalField f =
                field_from_meridional(w(i), problem.profile, points[i].real());
            out.e1[i] = f.E_r;
            out.e2[i] = f.E_3;
        }
        return out;
    }

    // transverse: u on the points plus 4-point stencils for the gradient
    const double h = 1e-5 * problem.domain.diameter();
    std::vector<Complex> all;
    all.reserve(points.size() * 5);
    for (const Complex& z : points) {
        all.push_back(z);
        all.push_back(z + Complex{h, 0});
        all.push_back(z - Complex{h, 0});
        all.push_back(z + Complex{0, h});
        all.push_back(z - Complex{0, h});
    }
    for (const Complex& z : all)
        if (!problem.domain.contains(z))
            throw std::domain_error(
                "evaluate_solution: gradient stencil leaves the domain; keep points interior");
    const Eigen::MatrixXd U = basis.sample(all);
    const Eigen::VectorXd u = U * c;
    for (size_t i = 0; i < points.size(); ++i) {
        out.u[i] = u(5 * i);
        out.e1[i] = (u(5 * i + 1) - u(5 * i + 2)) / (2.0 * h);
        out.e2[i] = (u(5 * i + 3) - u(5 * i + 4)) / (2.0 * h);
    }
    return out;
}

std::vector<BoundarySample> sample_boundary(const Domain& domain, int count,
                                            const std::function<double(Complex)>& data) {
    std::vector<BoundarySample> out;
    out.reserve(count);
    for (const Complex& z : domain.boundary_points(count)) out.push_back({z, data(z)});
    return out;
}

} // namespace vekua
