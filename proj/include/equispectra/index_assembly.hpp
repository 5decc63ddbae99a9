#pragma once

// Index-theorem bookkeeping: the equivariant Euler characteristic from strata
// data, single-orbit stratum beta terms, the general beta coefficient, the
// invariant-index block filter, and the lens-space cotangent sum.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equispectra/rep_theory.hpp"

namespace equispectra {

/// <Res_H chi_rho, xi>_H. h_elements are ambient indices of H; xi holds +-1
/// per listed element (empty = trivial).
long chi_rho_homogeneous(const CharacterTable& g, const std::vector<int>& h_elements, const std::vector<int>& xi,
                         int rho);

enum class StrataMode { finite, compact_opaque };

struct Stratum {
    std::string id;
    std::vector<int> isotropy;  // ambient elements (finite mode)
    long chi_quotient_rel = 0;  // chi(G\closure, G\lower strata)
    std::vector<int> xi;        // orientation character on isotropy; empty = preserved
    std::map<std::string, long> chi_table;  // compact-opaque: rho -> chi^rho(G/G_j, L)
};

struct StrataModel {
    StrataMode mode = StrataMode::finite;
    std::optional<CharacterTable> table;  // finite mode
    std::vector<std::string> irreps;      // ordering of rho labels (both modes)
    std::vector<int> principal_isotropy;
    long chi_principal_rel = 0;
    std::map<std::string, long> principal_chi_table;  // compact-opaque
    std::vector<Stratum> strata;
    std::optional<long> total;  // chi(M), if known

    /// Throws structural/validation errors; see README for the required fields.
    void validate() const;
};

struct EulerTerm {
    std::string source;  // "principal" or a stratum id
    long chi_rho;        // chi^rho(G/G_j, L)
    long chi_rel;
};

struct EulerResult {
    std::string rho;
    long value;
    std::vector<EulerTerm> terms;
};

EulerResult equivariant_euler(const StrataModel& model, const std::string& rho);
std::vector<EulerResult> equivariant_euler_all(const StrataModel& model);

/// sum_rho dim V_rho chi^rho(M); finite mode only (compact groups have no finite sum).
long euler_total(const StrataModel& model);

/// Per-sigma data in isotypic-dimension convention (copies x dim W_sigma).
struct EtaH {
    Rational eta;
    Rational h;
};

struct StratumBeta {
    Rational value;
    std::vector<long> n;  // n_sigma^rho per H-irreducible
};

/// (1/(2 dim V_rho)) sum_sigma (n_sigma^rho / dim W_sigma)(-eta_sigma + h_sigma).
StratumBeta stratum_beta(const CharacterTable& g, const CharacterTable& h, const std::vector<int>& embedding, int rho,
                         const std::map<int, EtaH>& data);

/// (1/(2 dim V_rho)) (1/(n_b rank W^b)) (-eta + h), the multiplier of the user-supplied integral.
Rational general_beta_coefficient(int dim_rho, int n_b, long rank_wb, const Rational& eta, const Rational& h);

struct BetaTerm {
    std::string stratum;
    std::string block;
    Rational coefficient;
    double integral;
    double contribution() const;
};

struct BetaAssembly {
    double principal_integral;
    std::vector<BetaTerm> terms;
    double total() const;
};

struct StratumPresence {
    std::string id;
    CharacterTable table;
    std::vector<FineBlock> blocks;
    std::vector<int> present;  // isotropy irreducibles occurring in the bundle
};

struct RetainedBlock {
    std::string stratum;
    FineBlock block;
    std::string justification;
};

/// Keeps block b iff it contains sigma* for some present sigma.
std::vector<RetainedBlock> invariant_index_beta_filter(const std::vector<StratumPresence>& strata);

struct LensEta {
    Rational exact;        // -8 s(n m^{-1}, p), Dedekind sum
    double direct;         // -(2/p) sum cot cot, summed q = 1..p-1
    double paired;         // q and p-q folded together
    double discrepancy;    // |direct - paired|, in working precision
    std::string decimal;   // direct value to the working precision
};

/// Dedekind sum s(h, k) = sum_{r=1}^{k-1} ((r/k)) ((hr/k)).
Rational dedekind_sum(long h, long k);

/// eta = -(2/p) sum_{q=1}^{p-1} cot(q m pi/p) cot(q n pi/p); gcd(m,p) = gcd(n,p) = 1.
LensEta lens_eta(long p, long m, long n, int digits = 0);

}  // namespace equispectra
