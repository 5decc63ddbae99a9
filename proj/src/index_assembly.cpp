#include "equispectra/index_assembly.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <algorithm>
#include <numeric>
#include <set>

#include "equispectra/error.hpp"
#include "equispectra/eta_engine.hpp"

namespace equispectra {

namespace mp = boost::multiprecision;

namespace {

Error index_error(const std::string& code, const std::string& msg, Error::Context ctx = {}) {
    return Error(code, "index_assembly", msg, std::move(ctx));
}

// xi must be a +-1 homomorphism on the listed elements
void check_sign_character(const FiniteGroup& g, const std::vector<int>& elems, const std::vector<int>& xi,
                          const std::string& where) {
    if (xi.empty()) return;
    if (xi.size() != elems.size())
        throw index_error("structural", "orientation character needs one sign per isotropy element", {{"stratum", where}});
    std::map<int, int> sign;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (xi[i] != 1 && xi[i] != -1)
            throw index_error("validation", "orientation character must take values +-1", {{"stratum", where}});
        sign[elems[i]] = xi[i];
    }
    for (const auto& [a, sa] : sign)
        for (const auto& [b, sb] : sign)
            if (sign.at(g.mul(a, b)) != sa * sb)
                throw index_error("validation", "orientation character is not a homomorphism", {{"stratum", where}});
}

long table_value(const std::map<std::string, long>& table, const std::string& rho, const std::string& where) {
    const auto it = table.find(rho);
    if (it == table.end())
        throw index_error("validation", "missing chi_table entry", {{"stratum", where}, {"rho", rho}});
    return it->second;
}

}  // namespace

long chi_rho_homogeneous(const CharacterTable& g, const std::vector<int>& h_elements, const std::vector<int>& xi,
                         int rho) {
    if (rho < 0 || rho >= g.size()) throw index_error("structural", "irreducible not in the table");
    if (h_elements.empty()) throw index_error("structural", "empty isotropy subgroup");
    make_subgroup(g.group(), h_elements);  // closure check
    check_sign_character(g.group(), h_elements, xi, "");
    Cyclotomic s(0L);
    for (std::size_t i = 0; i < h_elements.size(); ++i) {
        const Cyclotomic& c = g.character(rho)[h_elements[i]];
        s += xi.empty() || xi[i] == 1 ? c : -c;
    }
    s /= Cyclotomic(static_cast<long>(h_elements.size()));
    if (!s.is_integer()) throw index_error("inconsistent", "restricted inner product is not an integer", {{"value", s.to_string()}});
    const long v = mp::numerator(s.rational_value()).convert_to<long>();
    if (v < 0) throw index_error("inconsistent", "negative multiplicity");
    return v;
}

void StrataModel::validate() const {
    std::set<std::string> ids;
    for (const auto& s : strata)
        if (!ids.insert(s.id).second) throw index_error("structural", "duplicate stratum id", {{"stratum", s.id}});
    if (mode == StrataMode::finite) {
        if (!table) throw index_error("structural", "finite mode needs a character table");
        if (irreps.size() != static_cast<std::size_t>(table->size()))
            throw index_error("structural", "irreducible labels do not match the character table");
        make_subgroup(table->group(), principal_isotropy);
        for (const auto& s : strata) {
            if (s.isotropy.empty()) throw index_error("structural", "stratum needs an isotropy subgroup", {{"stratum", s.id}});
            for (int e : s.isotropy)
                if (e < 0 || e >= table->group().order())
                    throw index_error("structural", "isotropy element out of range", {{"stratum", s.id}});
            make_subgroup(table->group(), s.isotropy);
            check_sign_character(table->group(), s.isotropy, s.xi, s.id);
        }
    } else {
        if (irreps.empty()) throw index_error("structural", "compact-opaque mode needs the list of irreducible labels");
    }
}

EulerResult equivariant_euler(const StrataModel& model, const std::string& rho) {
    EulerResult r{rho, 0, {}};
    if (model.mode == StrataMode::finite) {
        const int i = model.table->index_of(rho);
        const long p = chi_rho_homogeneous(*model.table, model.principal_isotropy, {}, i);
        r.terms.push_back({"principal", p, model.chi_principal_rel});
        for (const auto& s : model.strata)
            r.terms.push_back({s.id, chi_rho_homogeneous(*model.table, s.isotropy, s.xi, i), s.chi_quotient_rel});
    } else {
        if (std::find(model.irreps.begin(), model.irreps.end(), rho) == model.irreps.end())
            throw index_error("validation", "unknown irreducible", {{"rho", rho}});
        r.terms.push_back({"principal", table_value(model.principal_chi_table, rho, "principal"), model.chi_principal_rel});
        for (const auto& s : model.strata) r.terms.push_back({s.id, table_value(s.chi_table, rho, s.id), s.chi_quotient_rel});
    }
    for (const auto& t : r.terms) r.value += t.chi_rho * t.chi_rel;
    return r;
}

std::vector<EulerResult> equivariant_euler_all(const StrataModel& model) {
    std::vector<EulerResult> out;
    for (const auto& rho : model.irreps) out.push_back(equivariant_euler(model, rho));
    return out;
}

long euler_total(const StrataModel& model) {
    if (model.mode != StrataMode::finite) throw index_error("domain", "total is only defined in finite mode");
    long s = 0;
    for (int i = 0; i < model.table->size(); ++i) s += model.table->degree(i) * equivariant_euler(model, model.table->name(i)).value;
    return s;
}

StratumBeta stratum_beta(const CharacterTable& g, const CharacterTable& h, const std::vector<int>& embedding, int rho,
                         const std::map<int, EtaH>& data) {
    StratumBeta out;
    out.n = restriction_multiplicities(g, h, embedding, rho);
    Rational s = 0;
    for (int sigma = 0; sigma < h.size(); ++sigma) {
        if (out.n[sigma] == 0) continue;
        const auto it = data.find(sigma);
        if (it == data.end())
            throw index_error("validation", "missing eta/h entry", {{"sigma", h.name(sigma)}, {"rho", g.name(rho)}});
        s += Rational(out.n[sigma], h.degree(sigma)) * (it->second.h - it->second.eta);
    }
    out.value = s / (2 * g.degree(rho));
    return out;
}

Rational general_beta_coefficient(int dim_rho, int n_b, long rank_wb, const Rational& eta, const Rational& h) {
    if (dim_rho <= 0 || n_b <= 0 || rank_wb <= 0) throw index_error("domain", "dimensions must be positive");
    return (h - eta) / (Rational(2 * dim_rho) * n_b * rank_wb);
}

double BetaTerm::contribution() const { return coefficient.convert_to<double>() * integral; }

double BetaAssembly::total() const {
    double s = principal_integral;
    for (const auto& t : terms) s += t.contribution();
    return s;
}

std::vector<RetainedBlock> invariant_index_beta_filter(const std::vector<StratumPresence>& strata) {
    std::vector<RetainedBlock> out;
    for (const auto& st : strata) {
        std::set<int> duals;
        for (int s : st.present) duals.insert(st.table.dual(s));
        for (const auto& b : st.blocks) {
            std::string why;
            for (int l : b.labels)
                if (duals.count(l)) {
                    // name the present sigma whose dual is l
                    for (int s : st.present)
                        if (st.table.dual(s) == l) {
                            why = st.table.name(l) + " is dual to present " + st.table.name(s);
                            break;
                        }
                    break;
                }
            if (!why.empty()) out.push_back({st.id, b, why});
        }
    }
    return out;
}

Rational dedekind_sum(long h, long k) {
    if (k < 1) throw index_error("domain", "dedekind sum needs k >= 1");
    // ((a/k)) for integer a
    auto saw = [k](long a) {
        const long r = ((a % k) + k) % k;
        return r == 0 ? Rational(0) : Rational(r, k) - Rational(1, 2);
    };
    Rational s = 0;
    for (long r = 1; r < k; ++r) s += saw(r) * saw((h % k) * r);
    return s;
}

LensEta lens_eta(long p, long m, long n, int digits) {
    if (p < 2) throw index_error("domain", "p must be at least 2", {{"p", std::to_string(p)}});
    if (std::gcd(m, p) != 1 || std::gcd(n, p) != 1)
        throw index_error("domain", "m and n must be coprime to p",
                          {{"p", std::to_string(p)}, {"m", std::to_string(m)}, {"n", std::to_string(n)}});
    if (digits <= 0) digits = working_digits();
    using Real = mp::mpfr_float;
    const unsigned saved = Real::default_precision();
    Real::default_precision(static_cast<unsigned>(digits + 10));
    const Real pi = 4 * mp::atan(Real(1));
    auto cot = [&](long q, long a) -> Real {
        const long r = ((q * a) % p + p) % p;  // exact reduction before the trig call
        const Real x = pi * r / p;
        return mp::cos(x) / mp::sin(x);
    };
    Real direct = 0;
    for (long q = 1; q < p; ++q) direct += cot(q, m) * cot(q, n);
    Real paired = 0;
    for (long q = 1; 2 * q < p; ++q) paired += 2 * cot(q, m) * cot(q, n);
    if (p % 2 == 0) paired += cot(p / 2, m) * cot(p / 2, n);
    direct *= Real(-2) / p;
    paired *= Real(-2) / p;

    LensEta out;
    long minv = 1;
    while ((((m % p) + p) % p * minv) % p != 1 % p) ++minv;
    out.exact = -8 * dedekind_sum(((n % p + p) % p) * minv % p, p);
    out.direct = direct.convert_to<double>();
    out.paired = paired.convert_to<double>();
    out.discrepancy = mp::abs(direct - paired).convert_to<double>();
    out.decimal = direct.str(digits, std::ios_base::fixed);
    Real::default_precision(saved);
    return out;
}

}  // namespace equispectra
