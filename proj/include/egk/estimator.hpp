#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egk/schemes.hpp"

namespace egk {

/// log2 of C(a, b); 0-count inputs (b < 0 or b > a) return -infinity
long double log2_binomial(long long a, long long b);

enum class ProblemKind { rsd, brd, nhrsd, rsl, nhrsl };

/// One decoding / support-learning instance. For block problems eta holds the
/// block lengths and rho the block weights; non-homogeneous shapes use
/// eta = (outer, middle, outer) with rho = (w1, w2), w1 the joint outer
/// weight. N is the syndrome count of the support-learning problems.
struct ProblemInstance {
    ProblemKind problem = ProblemKind::rsd;
    int q = 2;
    int m = 0, n = 0, k = 0, r = 0;
    std::vector<int> eta;
    std::vector<int> rho;
    int N = 0;
};

/// Cost of one attack in log2 operations, with the internal parameters the
/// optimizer settled on (insertion order preserved for display). An
/// inapplicable report keeps bits = 0 and explains itself in note.
struct AttackReport {
    std::string attack;
    bool applicable = false;
    long double bits = 0.0L;
    std::vector<std::pair<std::string, long long>> params;
    std::string note;
};

struct EstimatorOptions {
    long double omega = 2.81L;      // linear algebra exponent
    std::optional<int> d_reg;       // Groebner degree of regularity, if known
};

std::vector<AttackReport> estimate_rsd(const ProblemInstance& inst,
                                       const EstimatorOptions& opt = {});
std::vector<AttackReport> estimate_brd(const ProblemInstance& inst,
                                       const EstimatorOptions& opt = {});
std::vector<AttackReport> estimate_nhrsd(const ProblemInstance& inst,
                                         const EstimatorOptions& opt = {});
std::vector<AttackReport> estimate_nhrd_bp(const ProblemInstance& inst,
                                           const EstimatorOptions& opt = {});
std::vector<AttackReport> estimate_rsl(const ProblemInstance& inst,
                                       const EstimatorOptions& opt = {});
std::vector<AttackReport> estimate_nhrsl(const ProblemInstance& inst,
                                         const EstimatorOptions& opt = {});

/// dispatch on inst.problem (BP variants included for the block problems)
std::vector<AttackReport> estimate_instance(const ProblemInstance& inst,
                                            const EstimatorOptions& opt = {});

struct InstanceReports {
    std::string tag;
    ProblemInstance instance;
    std::vector<AttackReport> reports;
};

struct SecuritySummary {
    long double bits = 0.0L;        // minimum over all applicable reports
    std::vector<InstanceReports> instances;
};

/// builds the scheme's reduction instances and minimizes over every
/// applicable attack
SecuritySummary scheme_security(const SchemeParams& p, const EstimatorOptions& opt = {});

}  // namespace egk
