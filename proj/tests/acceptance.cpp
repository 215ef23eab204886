// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes. Each criterion is exact (no tolerances); failures print the first
// offending case.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nrs/combinat.hpp>
#include <nrs/construct.hpp>
#include <nrs/mpoly.hpp>
#include <nrs/nullres.hpp>
#include <nrs/polyring.hpp>
#include <nrs/qchar.hpp>
#include <nrs/resolution.hpp>

using namespace nrs;

namespace {

std::ostringstream detail;

bool criterion_determinants() {
    struct Task {
        int nvars, ell;
        DetMode mode;
    };
    const std::vector<Task> tasks = {
        {2, 1, DetMode::Symbolic},   {2, 2, DetMode::Symbolic},
        {4, 1, DetMode::Symbolic},   {4, 2, DetMode::Symbolic},
        {3, 1, DetMode::Symbolic},   {3, 2, DetMode::Symbolic},
        {5, 1, DetMode::Symbolic},   {4, 3, DetMode::Randomized},
        {6, 1, DetMode::Randomized}, {6, 2, DetMode::Randomized}};
    for (const Task& t : tasks) {
        DetReport rep = det_identity_check(t.nvars, t.ell, t.mode, 8, 12345);
        const Int expected = binomial(t.nvars - 1, t.ell - 1) +
                             binomial(t.nvars - 2, t.ell - 1);
        if (!rep.matches || rep.c == 0 || Int(rep.exponent) != expected) {
            detail << "N=" << t.nvars << " ell=" << t.ell
                   << " matches=" << rep.matches << " c=" << rep.c
                   << " exponent=" << rep.exponent;
            return false;
        }
    }
    return true;
}

bool criterion_membership() {
    auto run = [](int nvars, int ell_max) {
        for (int ell = 0; ell <= ell_max; ++ell) {
            const auto family = enumerate_basis(nvars, ell);
            if (Int(static_cast<long>(family.size())) !=
                binomial(nvars, ell)) {
                detail << "N=" << nvars << " ell=" << ell << " family size "
                       << family.size();
                return false;
            }
            for (const auto& [idx, elem] : family) {
                if (!in_U(elem)) {
                    detail << "N=" << nvars << " ell=" << ell
                           << " index " << idx.str() << " not in U";
                    return false;
                }
            }
        }
        return true;
    };
    for (int nvars : {2, 4, 6, 8}) {
        if (!run(nvars, std::min(4, nvars))) return false;
    }
    for (int nvars : {3, 5, 7}) {
        if (!run(nvars, 3)) return false;
    }
    return true;
}

bool criterion_tetranomial() {
    for (int n = 1; n <= 12; ++n) {
        if (!verify_tetranomial(n)) {
            detail << "n=" << n;
            return false;
        }
    }
    return true;
}

bool criterion_degree_sums() {
    for (int nvars : {2, 3, 4, 5, 6, 7, 8}) {
        for (int ell = 0; ell <= nvars; ++ell) {
            if (!degree_sum_check(nvars, ell)) {
                detail << "N=" << nvars << " ell=" << ell;
                return false;
            }
        }
    }
    return true;
}

bool criterion_span() {
    for (int n = 1; n <= 5; ++n) {
        for (int ell = 0; ell <= 2 * n; ++ell) {
            SpanReport rep = span_rank(n, ell);
            if (!rep.full) {
                detail << "n=" << n << " ell=" << ell << " rank " << rep.rank
                       << " of " << rep.dimension;
                return false;
            }
        }
    }
    for (int nvars : {2, 3, 4, 5, 6}) {
        BridgeReport rep = specialization_bridge(nvars);
        if (!rep.ok()) {
            detail << "bridge N=" << nvars;
            return false;
        }
    }
    return true;
}

/// All strictly increasing tuples with entries in 1..n.
std::vector<std::vector<int>> subsets_of(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> t;
        for (int v = 1; v <= n; ++v) {
            if (mask & (1 << (v - 1))) t.push_back(v);
        }
        out.push_back(std::move(t));
    }
    return out;
}

/// All weakly increasing tuples with entries in 1..n, sizes 0..max_len.
std::vector<std::vector<int>> multisets_of(int n, int max_len) {
    std::vector<std::vector<int>> out{{}};
    std::size_t lo = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t hi = out.size();
        for (std::size_t t = lo; t < hi; ++t) {
            const int start = out[t].empty() ? 1 : out[t].back();
            for (int v = start; v <= n; ++v) {
                auto next = out[t];
                next.push_back(v);
                out.push_back(std::move(next));
            }
        }
        lo = hi;
    }
    return out;
}

bool criterion_reduce() {
    // h-monotone exhaustive steps plus global termination of the rewrite
    // graph.
    for (int n = 1; n <= 3; ++n) {
        for (const auto& d : enumerate_descriptors(n, 3)) {
            for (const auto& c : valid_choices(d)) {
                StepResult res = reduce_step(d, c);
                if (res.h_after > res.h_before) {
                    detail << "h increased at " << d.str() << " " << c.str();
                    return false;
                }
            }
            TerminationStats st = check_termination(d);
            if (!st.terminated) {
                detail << "non-terminating chain from " << d.str();
                return false;
            }
        }
    }
    // Every product of alphas, betas and omegas lies in the span of the
    // admissible family, including the monomials outside the index range.
    for (int n = 1; n <= 3; ++n) {
        const auto is_tuples = subsets_of(n);
        const auto ks = multisets_of(n, n);
        for (const auto& I : is_tuples) {
            for (const auto& J : is_tuples) {
                for (const auto& K : ks) {
                    const int ell = static_cast<int>(I.size() + J.size() +
                                                     2 * K.size());
                    if (ell > 2 * n) continue;
                    GammaWedge target = GammaWedge::unit(n);
                    for (int i : I) target = target.wedge(GammaWedge::alpha(n, i));
                    for (int j : J) target = target.wedge(GammaWedge::beta(n, j));
                    for (int k : K) target = target.wedge(omega(n, k));
                    if (target.is_zero()) continue;
                    auto exp = express_in_span(target);
                    if (!exp.has_value()) {
                        detail << "n=" << n << " monomial outside span";
                        return false;
                    }
                    GammaWedge acc(n, ell);
                    for (std::size_t t = 0; t < exp->indices.size(); ++t) {
                        acc += abw_element(n, exp->indices[t]) * exp->coeffs[t];
                    }
                    if (!(acc == target)) {
                        detail << "n=" << n << " expansion mismatch";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool criterion_resolution() {
    struct Task {
        int nvars, ell;
    };
    const std::vector<Task> tasks = {{2, 0}, {2, 1}, {4, 0}, {4, 1}, {4, 2},
                                     {6, 0}, {6, 1}, {6, 2}, {6, 3}, {3, 0},
                                     {3, 1}, {5, 0}, {5, 1}, {5, 2}};
    const long d_max = 10;
    for (const Task& t : tasks) {
        QSeries m = ch_M(t.nvars, t.ell, d_max + 2);
        std::vector<long> dims = graded_quotient_dims(t.nvars, t.ell, d_max);
        for (long d = 0; d <= d_max; ++d) {
            if (dims[static_cast<std::size_t>(d)] !=
                m.coeff_at(m.offset + Rat(d))) {
                detail << "N=" << t.nvars << " ell=" << t.ell << " d=" << d
                       << " dim " << dims[static_cast<std::size_t>(d)];
                return false;
            }
        }
        if (!phi_complex_check(t.nvars, t.ell)) {
            detail << "phi composite nonzero at N=" << t.nvars
                   << " ell=" << t.ell;
            return false;
        }
    }
    for (int nvars : {2, 3, 4, 5, 6}) {
        for (int ell = 0; ell <= nvars; ++ell) {
            if (!bas_partition_check(nvars, ell)) {
                detail << "partition N=" << nvars << " ell=" << ell;
                return false;
            }
        }
    }
    return true;
}

bool criterion_branching() {
    for (int lambda = 0; lambda <= 3; ++lambda) {
        const int i = lambda % 2;
        if (!(branching(i, lambda, 20) == virasoro_product(lambda, 20))) {
            detail << "lambda=" << lambda;
            return false;
        }
    }
    for (int i : {0, 1}) {
        if (!fermionic_identity(i, 15, 6)) {
            detail << "fermionic i=" << i;
            return false;
        }
        if (!ising_identity(i, 20)) {
            detail << "ising i=" << i;
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string label;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "determinant-identities", criterion_determinants},
        {2, "null-residue-membership", criterion_membership},
        {3, "q-tetranomial", criterion_tetranomial},
        {4, "degree-sums", criterion_degree_sums},
        {5, "spanning-independence", criterion_span},
        {6, "reduction-algorithm", criterion_reduce},
        {7, "characters-resolution", criterion_resolution},
        {8, "branching-identities", criterion_branching},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        detail.str("");
        bool pass = false;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            pass = false;
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        std::cout << "criterion " << c.number << " (" << c.label
                  << "): " << (pass ? "PASS" : "FAIL") << " (" << std::fixed
                  << std::setprecision(1) << secs << "s)" << std::endl;
        if (!pass) {
            all = false;
            if (!error.empty()) {
                std::cout << "  error: " << error << std::endl;
            }
            if (!detail.str().empty()) {
                std::cout << "  first failure: " << detail.str() << std::endl;
            }
        }
    }
    return all ? 0 : 1;
}
