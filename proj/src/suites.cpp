#include "cpq/suites.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "cpq/calculus.hpp"
#include "cpq/cpn.hpp"
#include "cpq/cqspace.hpp"
#include "cpq/crossratio.hpp"
#include "cpq/errors.hpp"
#include "cpq/geometry.hpp"
#include "cpq/integrate.hpp"
#include "cpq/poisson.hpp"
#include "cpq/qgroup.hpp"
#include "cpq/rmatrix.hpp"

namespace cpq {

namespace {

using Job = std::function<Report()>;

const std::vector<std::string> kNames{"rmatrix", "ambient",  "cpn-relations", "kahler",      "volume",
                                      "integrate", "poisson", "qgroup",        "braiding",    "collinearity",
                                      "cross-ratio", "invariant", "engine"};

void jobs_for(const std::string& s, const SuiteParams& p, std::vector<Job>& out) {
    const int N = p.N;
    if (N < 1) throw PreconditionViolated("N must be >= 1");
    if (s == "rmatrix") {
        out.push_back([N] { return check_matrix_identities(build_rhat(N + 1, 0)); });
        out.push_back([N] { return check_matrix_identities(build_rhat(N, 1)); });
    } else if (s == "ambient") {
        out.push_back([N] {
            const AmbientAlgebra A = build_ambient(N);
            Report r = check_relation_reproduction(A);
            r.merge(check_L_central(A));
            r.merge(check_ambient_q_symmetry(A));
            r.merge(check_system_hygiene(A.forms, true, false));
            r.merge(check_system_hygiene(A.derivs, false, false));
            return r;
        });
        out.push_back([N] { return check_derivative_calculus(build_ambient(N), N == 1 ? 3 : 2); });
        out.push_back([N] {
            const AmbientAlgebra A = build_ambient(N);
            Report r("involution");
            for (int n : {0, 1, -1}) r.merge(check_involution_family(A, n));
            return r;
        });
    } else if (s == "cpn-relations") {
        out.push_back([N] {
            const ProjectiveAlgebra P = build_projective(N);
            Report r = check_projective_relations(P);
            r.merge(check_poincare(P, 4));
            r.merge(check_projective_q_symmetry(P));
            for (const auto* sys : {&P.plane, &P.functions, &P.forms, &P.derivs}) r.merge(check_system_hygiene(*sys, true, false));
            return r;
        });
        out.push_back([N] { return check_derivation_from_ambient(build_projective(N), build_ambient(N)); });
        out.push_back([N] { return check_projective_derivatives(build_projective(N), 2); });
    } else if (s == "kahler") {
        out.push_back([N] {
            const ProjectiveAlgebra P = build_projective(N);
            Report r = check_one_form_identities(P);
            r.merge(check_kahler(P));
            return r;
        });
    } else if (s == "volume") {
        out.push_back([N] { return check_volume(build_projective(N)); });
    } else if (s == "integrate") {
        out.push_back([N] { return check_recursion(build_projective(N), 4); });
        out.push_back([N, p] { return check_dilation_identity(build_projective(N), 60, p.seed); });
        out.push_back([N] { return check_torus_vanishing(build_projective(N), 6); });
    } else if (s == "poisson") {
        out.push_back([N] { return check_poisson_table(build_projective(N)); });
        out.push_back([N, p] { return check_poisson_structure(build_projective(N), p.seed); });
    } else if (s == "qgroup") {
        out.push_back([N] { return check_covariance(N); });
        if (N == 1) out.push_back([] { return check_K_invariance(1); });
    } else if (s == "braiding") {
        out.push_back([N] { return check_braided(build_braided(N, 2)); });
        out.push_back([N] {
            const QRat q = QRat::q();
            Report r("homogeneous-braiding");
            r.merge(check_homogeneous_braiding(N, q, q.inv()));
            r.merge(check_homogeneous_braiding(N, QRat(1), QRat(1)));
            r.merge(check_homogeneous_braiding(N, q * q, q.inv() * q.inv()));
            return r;
        });
    } else if (s == "collinearity") {
        const int m = p.m;
        out.push_back([N, m] { return check_collinearity(build_braided(N, m)); });
        out.push_back([N, m] { return check_ideal_stability(build_braided(N, m)); });
    } else if (s == "cross-ratio") {
        if (N != 1) throw PreconditionViolated("the cross-ratio suite is fixed at N = 1");
        out.push_back([] { return check_cross_ratio_invariance(1); });
    } else if (s == "invariant") {
        out.push_back([N, p] { return check_classical_invariant(N, p.samples, p.seed); });
    } else if (s == "engine") {
        out.push_back([N] {
            const AmbientAlgebra A = build_ambient(N);
            const ProjectiveAlgebra P = build_projective(N);
            Report r("engine");
            for (const auto* sys : {&A.forms, &A.derivs, &P.plane, &P.functions, &P.forms, &P.derivs})
                r.merge(check_normal_form_properties(*sys, 1000, 4));
            r.merge(check_poincare(P, 4));
            return r;
        });
    } else {
        throw UnknownSuite("unknown suite '" + s + "'");
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    auto v = kNames;
    v.push_back("all");
    return v;
}

Report run_suite(const std::string& name, const SuiteParams& p, int jobs) {
    std::vector<Job> work;
    if (name == "all") {
        for (const auto& s : kNames) {
            if (s == "cross-ratio" && p.N != 1) continue;
            jobs_for(s, p, work);
        }
    } else {
        jobs_for(name, p, work);
    }
    std::vector<Report> parts(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < work.size();) {
            try {
                parts[k] = work[k]();
            } catch (const Error& e) {
                // a check that cannot even start is an error entry, not a crash
                parts[k] = Report(name);
                parts[k].add({name + ".job" + std::to_string(k), "plumbing", Status::Error, e.what(), 0});
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(work.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Report out(name);
    for (const auto& r : parts) out.merge(r);
    out.sort_by_id();
    return out;
}

}  // namespace cpq
