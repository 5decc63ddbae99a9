#include "equispectra/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "equispectra/error.hpp"
#include "equispectra/eta_engine.hpp"
#include "equispectra/polyspace_oracle.hpp"
#include "equispectra/spectral.hpp"

#ifndef EQUISPECTRA_FIXTURE_DIR
#define EQUISPECTRA_FIXTURE_DIR "fixtures"
#endif

namespace equispectra::io {

namespace fs = std::filesystem;

namespace {

Error io_error(const std::string& code, const std::string& msg, Error::Context ctx = {}) {
    return Error(code, "cli_io", msg, std::move(ctx));
}

Rational rational_of(const Json& v) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_number_float()) return parse_rational(v.dump());
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw io_error("validation", e.what(), {{"value", v.dump()}});
    }
    throw io_error("validation", "expected a rational number", {{"value", v.dump()}});
}

std::pair<long, long> fraction_of(const Json& v) {
    const Rational q = rational_of(v);
    return {boost::multiprecision::numerator(q).convert_to<long>(), boost::multiprecision::denominator(q).convert_to<long>()};
}

// cos(pi a / b) = (z + z^{-1}) / 2 with z = zeta_{2b}^a
Cyclotomic cos_pi(long a, long b) {
    return Cyclotomic(Rational(1, 2)) * (Cyclotomic::root_of_unity(2 * b, a) + Cyclotomic::root_of_unity(2 * b, -a));
}

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw io_error("validation", std::string("missing field '") + key + "'");
    return doc.at(key);
}

template <class T>
T get_as(const Json& doc, const char* key) {
    try {
        return field(doc, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw io_error("validation", std::string("field '") + key + "' has the wrong type", {{"detail", e.what()}});
    }
}

template <class Scalar>
Scalar parse_scalar(const Json& v);
template <>
Cyclotomic parse_scalar<Cyclotomic>(const Json& v) { return parse_exact(v); }
template <>
Complex parse_scalar<Complex>(const Json& v) { return parse_float(v); }

template <class Scalar>
std::vector<Matrix<Scalar>> parse_matrices(const Json& v) {
    if (!v.is_array()) throw io_error("validation", "expected a list of matrices");
    std::vector<Matrix<Scalar>> out;
    for (const auto& m : v) out.push_back(parse_matrix<Scalar>(m));
    return out;
}

ComplexMatrix to_complex_matrix(const ExactMatrix& m) {
    ComplexMatrix c(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).to_complex();
    return c;
}

template <class Scalar>
CliffordSymbol<Scalar> from_exact(const CliffordSymbol<Cyclotomic>& s, double tol) {
    if constexpr (is_exact_v<Scalar>) {
        return s;
    } else {
        std::vector<ComplexMatrix> a;
        for (const auto& m : s.matrices()) a.push_back(to_complex_matrix(m));
        return CliffordSymbol<Complex>::create(a, tol);
    }
}

// Inline object, or a path relative to base; next_base is where nested paths resolve.
Json resolve(const Json& v, const fs::path& base, fs::path& next_base) {
    if (v.is_string()) {
        const fs::path where = base / v.get<std::string>();
        next_base = where.has_parent_path() ? where.parent_path() : fs::path(".");
        return read_json(where);
    }
    next_base = base;
    return v;
}

fs::path base_of(const fs::path& p) { return p.has_parent_path() ? p.parent_path() : fs::path("."); }

std::vector<int> elements_of(const Json& v) {
    const Json& e = v.is_object() ? field(v, "elements") : v;
    try {
        return e.get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
        throw io_error("validation", "subgroup elements must be a list of integers");
    }
}

std::map<std::string, long> long_map(const Json& v) {
    std::map<std::string, long> out;
    if (!v.is_object()) throw io_error("validation", "chi_table must be an object");
    for (const auto& [k, x] : v.items()) {
        if (!x.is_number_integer()) throw io_error("validation", "chi_table values must be integers", {{"rho", k}});
        out[k] = x.get<long>();
    }
    return out;
}

Json eigen_json(const std::vector<Eigenpair>& e) {
    Json a = Json::array();
    for (const auto& p : e) a.push_back({{"lambda", p.lambda}, {"mult", p.mult}});
    return a;
}

Json gf_json(const RationalGF& g) {
    Json num = Json::array();
    for (const auto& c : g.num) num.push_back(to_string(c));
    return {{"num", num}, {"den", g.denominator_string()}};
}

std::vector<int> alphas(const CharacterTable& t, const std::optional<std::string>& alpha) {
    if (alpha) {
        for (int i = 0; i < t.size(); ++i)
            if (t.name(i) == *alpha) return {i};
        throw io_error("validation", "--alpha names no irreducible of the group", {{"alpha", *alpha}});
    }
    std::vector<int> out(t.size());
    for (int i = 0; i < t.size(); ++i) out[i] = i;
    return out;
}

// The action for a symbol or action file, with its table.
template <class Scalar>
std::pair<GroupAction<Scalar>, CharacterTable> action_for(const Json& doc, const fs::path& path, double tol) {
    const std::string kind = kind_of(doc);
    if (kind == "symbol")
        return {GroupAction<Scalar>::trivial(load_symbol<Scalar>(doc, base_of(path), tol)), cyclic_characters(1)};
    if (kind == "action") {
        auto act = load_action<Scalar>(doc, base_of(path), tol);
        auto table = load_characters(doc, act.group());
        return {std::move(act), std::move(table)};
    }
    throw io_error("validation", "expected a symbol or action file", {{"kind", kind}});
}

// ---------------------------------------------------------------- commands

template <class Scalar>
Json cmd_spectrum(const JobSpec& job, const Json& doc) {
    auto [act, table] = action_for<Scalar>(doc, job.in, job.tol);
    Json rep = envelope("spectrum", job.in);
    rep["k"] = act.symbol().k();
    rep["d"] = act.symbol().d();
    rep["lmax"] = job.lmax;
    Json list = Json::array();
    for (int a : alphas(table, job.alpha)) {
        const auto s = equivariant_spectrum(act, table, a, job.lmax);
        list.push_back({{"alpha", s.alpha},
                        {"degree", s.alpha_degree},
                        {"eigenvalues", eigen_json(s.eigenvalues())},
                        {"gf", {{"plus", gf_json(s.gf_plus)}, {"minus", gf_json(s.gf_minus)}}}});
    }
    rep["spectra"] = list;
    return rep;
}

Json eta_json(const EtaReport& ex, const std::optional<EtaReport>& nu) {
    Json eta = {{"exact", ex.exact ? Json(to_string(*ex.exact)) : Json(nullptr)}, {"float", ex.value}, {"err", ex.err}};
    Json out = {{"alpha", ex.alpha}, {"eta", eta}, {"h", ex.h}, {"method", ex.method}, {"window", ex.window}};
    if (nu) out["oracle"] = {{"float", nu->value}, {"err", nu->err}, {"low_confidence", nu->low_confidence}};
    if (!ex.warning.empty()) out["warning"] = ex.warning;
    return out;
}

template <class Scalar>
RunResult cmd_eta(const JobSpec& job, const Json& doc) {
    auto [act, table] = action_for<Scalar>(doc, job.in, job.tol);
    RunResult r;
    r.report = envelope("eta", job.in);
    Json list = Json::array();
    std::vector<std::string> disagree;
    for (int a : alphas(table, job.alpha)) {
        const auto s = equivariant_spectrum(act, table, a, job.lmax);
        const auto ex = eta_invariant(s);
        std::optional<EtaReport> nu;
        if (ex.exact) {
            nu = numeric_eta_oracle(s);
            if (std::abs(nu->value - ex.value) > 1e-6) disagree.push_back(s.alpha);
        }
        list.push_back(eta_json(ex, nu));
    }
    r.report["results"] = list;
    if (!disagree.empty()) {
        std::string names;
        for (const auto& n : disagree) names += (names.empty() ? "" : ",") + n;
        r.report["error"] = error_object(
            io_error("oracle", "hurwitz-exact and numeric continuations disagree beyond 1e-6", {{"alpha", names}}));
        r.status = 2;
    }
    return r;
}

template <class Scalar>
RunResult cmd_verify(const JobSpec& job, const Json& doc) {
    auto [act, table] = action_for<Scalar>(doc, job.in, job.tol);
    RunResult r;
    r.report = envelope("verify", job.in);
    r.report["mmax"] = job.mmax;
    r.report["mode"] = is_exact_v<Scalar> ? "exact" : "float";
    const auto as = alphas(table, job.alpha);
    std::vector<SpectrumTable> closed;
    for (int a : as) closed.push_back(equivariant_spectrum(act, table, a, job.mmax + act.symbol().k()));
    Json degrees = Json::array();
    bool all = true;
    for (int m = 0; m <= job.mmax; ++m) {
        const auto brute = table.size() == 1 ? std::vector<BruteSpectrum>{brute_spectrum(act.symbol(), m, job.tol)}
                                             : equivariant_brute_spectra(act, table, m, job.tol);
        for (std::size_t i = 0; i < as.size(); ++i) {
            const auto predicted = closed[i].tower(m);
            const bool ok = predicted == brute[as[i]].eigen;
            all = all && ok;
            degrees.push_back({{"m", m},
                               {"alpha", table.name(as[i])},
                               {"match", ok},
                               {"certified", brute[as[i]].certified},
                               {"brute", eigen_json(brute[as[i]].eigen)},
                               {"closed_form", eigen_json(predicted)}});
        }
    }
    r.report["degrees"] = degrees;
    r.report["match"] = all;
    if (!all) {
        r.report["error"] = error_object(io_error("oracle", "closed-form and brute-force spectra disagree"));
        r.status = 2;
    }
    return r;
}

Json euler_report(const JobSpec& job, const Json& doc) {
    const auto model = load_strata(doc);
    Json rep = envelope("euler", job.in);
    rep["mode"] = model.mode == StrataMode::finite ? "finite" : "compact-opaque";
    Json values = Json::object();
    Json detail = Json::array();
    for (const auto& e : equivariant_euler_all(model)) {
        values[e.rho] = e.value;
        Json terms = Json::array();
        for (const auto& t : e.terms) terms.push_back({{"source", t.source}, {"chi_rho", t.chi_rho}, {"chi_rel", t.chi_rel}});
        detail.push_back({{"rho", e.rho}, {"value", e.value}, {"terms", terms}});
    }
    rep["chi"] = values;
    rep["terms"] = detail;
    if (model.mode == StrataMode::finite) {
        const long total = euler_total(model);
        rep["total"] = total;
        if (model.total && *model.total != total)
            throw io_error("validation", "character sum does not reproduce the supplied total",
                           {{"computed", std::to_string(total)}, {"supplied", std::to_string(*model.total)}});
    }
    return rep;
}

// Per-sigma (eta, h) in isotypic-dimension convention from a normal action of H.
std::map<int, EtaH> eta_h_from_action(const GroupAction<Cyclotomic>& act, const CharacterTable& ht) {
    std::map<int, EtaH> out;
    for (int s = 0; s < ht.size(); ++s) {
        const long deg = ht.degree(s);
        if (act.symbol().k() == 1) {
            std::vector<int> orient;
            for (int g = 0; g < act.group().order(); ++g) {
                const Cyclotomic r = act.R(g)(0, 0);
                orient.push_back(r == Cyclotomic(1L) ? 1 : -1);
            }
            const auto c = codim1_eta_h(ht, act.u_plus_all(), orient, s);
            out[s] = {Rational(c.eta * deg), Rational(c.h * deg)};
        } else {
            const auto e = eta_invariant(equivariant_spectrum(act, ht, s));
            if (!e.exact) throw io_error("domain", "eta continuation was not exact", {{"sigma", ht.name(s)}});
            out[s] = {*e.exact * deg, Rational(e.h * deg)};
        }
    }
    return out;
}

Json beta_report(const JobSpec& job, const Json& doc) {
    const FiniteGroup g = load_group(field(doc, "group"));
    const CharacterTable gt = load_characters(doc, g);
    Json rep = envelope("beta", job.in);
    Json strata = Json::array();
    if (doc.contains("strata")) {
        for (const auto& st : doc.at("strata")) {
            const std::string id = get_as<std::string>(st, "id");
            const auto elems = elements_of(field(st, "isotropy"));
            const Subgroup sub = make_subgroup(g, elems);
            std::vector<int> emb = elems;  // user order is the isotropy group's indexing
            if (emb.empty() || emb[0] != 0) throw io_error("validation", "isotropy elements must start with the identity", {{"stratum", id}});
            std::optional<GroupAction<Cyclotomic>> normal;
            CharacterTable ht = cyclic_subgroup_characters(sub);
            std::map<int, EtaH> data;
            if (st.contains("normal_action")) {
                fs::path where;
                const Json nd = resolve(st.at("normal_action"), base_of(job.in), where);
                normal = load_action<Cyclotomic>(nd, where, job.tol);
                if (normal->group().order() != static_cast<int>(elems.size()))
                    throw io_error("validation", "normal action group does not match the isotropy order", {{"stratum", id}});
                for (int a = 0; a < normal->group().order(); ++a)
                    for (int b = 0; b < normal->group().order(); ++b)
                        if (emb[normal->group().mul(a, b)] != g.mul(emb[a], emb[b]))
                            throw io_error("validation", "isotropy listing is not a homomorphism from the normal action group", {{"stratum", id}});
                ht = load_characters(nd, normal->group());
                data = eta_h_from_action(*normal, ht);
            } else {
                if (st.contains("characters")) ht = load_characters(st, sub.group);
                const bool copies = st.value("convention", std::string("dimension")) == "copies";
                for (const auto& [name, v] : field(st, "data").items()) {
                    const int s = ht.index_of(name);
                    const Rational scale = copies ? Rational(ht.degree(s)) : Rational(1);
                    data[s] = {rational_of(field(v, "eta")) * scale, rational_of(field(v, "h")) * scale};
                }
            }
            Json per = Json::array();
            for (int rho : alphas(gt, job.alpha)) {
                const auto b = stratum_beta(gt, ht, emb, rho, data);
                Json n = Json::object();
                for (int s = 0; s < ht.size(); ++s)
                    if (b.n[s]) n[ht.name(s)] = b.n[s];
                per.push_back({{"rho", gt.name(rho)}, {"beta", number(b.value)}, {"n", n}});
            }
            Json sig = Json::array();
            for (const auto& [s, e] : data)
                sig.push_back({{"sigma", ht.name(s)}, {"eta", number(e.eta)}, {"h", number(e.h)}});
            strata.push_back({{"id", id}, {"sigma_data", sig}, {"beta", per}});
        }
    }
    rep["strata"] = strata;

    if (doc.contains("general")) {
        const Json& gen = doc.at("general");
        BetaAssembly asm_{rational_of(field(gen, "principal_integral")).convert_to<double>(), {}};
        Json terms = Json::array();
        for (const auto& t : field(gen, "terms")) {
            const Rational c = general_beta_coefficient(get_as<int>(t, "dim_rho"), get_as<int>(t, "n_b"), get_as<long>(t, "rank"),
                                                        rational_of(field(t, "eta")), rational_of(field(t, "h")));
            BetaTerm bt{get_as<std::string>(t, "stratum"), get_as<std::string>(t, "block"), c,
                        rational_of(field(t, "integral")).convert_to<double>()};
            terms.push_back({{"stratum", bt.stratum}, {"block", bt.block}, {"coefficient", number(c)},
                             {"integral", bt.integral}, {"contribution", bt.contribution()}});
            asm_.terms.push_back(bt);
        }
        rep["general"] = {{"principal_integral", asm_.principal_integral}, {"terms", terms}, {"total", asm_.total()}};
    }

    if (doc.contains("presence")) {
        std::vector<StratumPresence> pres;
        for (const auto& p : doc.at("presence")) {
            const auto elems = elements_of(field(p, "isotropy"));
            const Subgroup sub = make_subgroup(g, elems);
            const CharacterTable ht = cyclic_subgroup_characters(sub);
            std::vector<std::vector<int>> maps;
            for (int nn : p.value("normalizer", std::vector<int>{})) maps.push_back(conjugation_map(g, sub.embedding, nn));
            std::vector<int> present;
            for (const auto& name : get_as<std::vector<std::string>>(p, "present")) present.push_back(ht.index_of(name));
            pres.push_back({get_as<std::string>(p, "id"), ht, fine_partition(ht, maps), present});
        }
        Json kept = Json::array();
        for (const auto& rb : invariant_index_beta_filter(pres)) {
            const auto& table = std::find_if(pres.begin(), pres.end(), [&](const auto& x) { return x.id == rb.stratum; })->table;
            Json labels = Json::array();
            for (int l : rb.block.labels) labels.push_back(table.name(l));
            kept.push_back({{"stratum", rb.stratum}, {"block", labels}, {"justification", rb.justification}});
        }
        rep["retained_blocks"] = kept;
    }
    return rep;
}

Json isotropy_report(const JobSpec& job, const Json& doc) {
    const FiniteGroup g = load_group(field(doc, "group"));
    const CharacterTable gt = load_characters(doc, g);
    const Subgroup sub = make_subgroup(g, elements_of(field(doc, "subgroup")));
    const CharacterTable ht = cyclic_subgroup_characters(sub);
    std::vector<std::vector<int>> maps;
    for (int nn : doc.value("normalizer", std::vector<int>{})) maps.push_back(conjugation_map(g, sub.embedding, nn));
    Json rep = envelope("validate", job.in);
    rep["kind"] = "isotropy";
    Json res = Json::object();
    for (int r = 0; r < gt.size(); ++r) {
        const auto n = restriction_multiplicities(gt, ht, sub.embedding, r);
        Json row = Json::object();
        for (int s = 0; s < ht.size(); ++s) row[ht.name(s)] = n[s];
        res[gt.name(r)] = row;
    }
    rep["restriction"] = res;
    Json blocks = Json::array();
    for (const auto& b : fine_partition(ht, maps)) {
        Json labels = Json::array();
        for (int l : b.labels) labels.push_back(ht.name(l));
        blocks.push_back(labels);
    }
    rep["fine_blocks"] = blocks;
    Json canon = Json::array();
    for (int s = 0; s < ht.size(); ++s) {
        const auto c = canonical_bundle_data(gt, ht, sub.embedding, s, maps);
        canon.push_back({{"sigma", ht.name(s)}, {"j0", gt.name(c.j0)}, {"m", c.m}, {"d", c.d}, {"n", c.n}, {"rank", c.rank()}});
    }
    rep["canonical_bundles"] = canon;
    return rep;
}

template <class Scalar>
Json validate_report(const JobSpec& job, const Json& doc) {
    const std::string kind = kind_of(doc);
    Json rep = envelope("validate", job.in);
    rep["kind"] = kind;
    if (kind == "symbol") {
        const auto s = load_symbol<Scalar>(doc, base_of(job.in), job.tol);
        rep["k"] = s.k();
        rep["d"] = s.d();
    } else if (kind == "action") {
        auto [act, table] = action_for<Scalar>(doc, job.in, job.tol);
        rep["k"] = act.symbol().k();
        rep["d"] = act.symbol().d();
        rep["group_order"] = act.group().order();
        Json names = Json::array();
        for (int i = 0; i < table.size(); ++i) names.push_back(table.name(i));
        rep["irreps"] = names;
    } else if (kind == "strata") {
        const auto m = load_strata(doc);
        rep["mode"] = m.mode == StrataMode::finite ? "finite" : "compact-opaque";
        rep["strata"] = m.strata.size();
    } else if (kind == "beta") {
        JobSpec j = job;
        j.alpha.reset();
        beta_report(j, doc);
    } else if (kind == "isotropy") {
        return isotropy_report(job, doc);
    }
    rep["valid"] = true;
    return rep;
}

const std::set<std::string> kCommands{"validate", "spectrum", "eta", "euler", "beta", "lens-eta", "verify"};

void check_job(const JobSpec& job) {
    if (!kCommands.count(job.command)) throw io_error("validation", "unknown command", {{"command", job.command}});
    if (job.command == "lens-eta") {
        if (!job.in.empty()) throw io_error("validation", "lens-eta takes --p --m --n, not --in");
        if (job.p == 0) throw io_error("validation", "lens-eta needs --p, --m and --n");
    } else {
        if (job.in.empty()) throw io_error("validation", "--in is required", {{"command", job.command}});
        if (job.p || job.m || job.n) throw io_error("validation", "--p/--m/--n only apply to lens-eta");
    }
    if (job.alpha && (job.command == "euler" || job.command == "lens-eta"))
        throw io_error("validation", "--alpha does not apply", {{"command", job.command}});
    if (job.mmax < 0 || job.mmax > 12) throw io_error("validation", "--mmax must lie in [0, 12]");
    if (job.lmax < 1) throw io_error("validation", "--lmax must be positive");
    if (!(job.tol > 0)) throw io_error("validation", "--tol must be positive");
}

template <class Scalar>
RunResult dispatch(const JobSpec& job) {
    RunResult r;
    if (job.command == "lens-eta") {
        const auto l = lens_eta(job.p, job.m, job.n);
        r.report = envelope("lens-eta", "");
        r.report["p"] = job.p;
        r.report["m"] = job.m;
        r.report["n"] = job.n;
        r.report["eta"] = {{"exact", to_string(l.exact)}, {"float", l.direct}, {"err", l.discrepancy}, {"decimal", l.decimal}};
        r.report["paired"] = l.paired;
        if (l.discrepancy > 1e-10 || std::abs(l.direct - l.exact.convert_to<double>()) > 1e-10) {
            r.report["error"] = error_object(io_error("oracle", "cotangent summations disagree"));
            r.status = 2;
        }
        return r;
    }
    const Json doc = read_json(job.in);
    if (job.command == "validate") r.report = validate_report<Scalar>(job, doc);
    else if (job.command == "spectrum") r.report = cmd_spectrum<Scalar>(job, doc);
    else if (job.command == "eta") return cmd_eta<Scalar>(job, doc);
    else if (job.command == "verify") return cmd_verify<Scalar>(job, doc);
    else if (job.command == "euler") r.report = euler_report(job, doc);
    else if (job.command == "beta") r.report = beta_report(job, doc);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- parsing

Cyclotomic parse_exact(const Json& v) {
    if (v.is_number() || v.is_string()) return Cyclotomic(rational_of(v));
    if (v.is_object()) {
        if (v.contains("re") || v.contains("im"))
            return Cyclotomic::gaussian(rational_of(v.value("re", Json(0))), rational_of(v.value("im", Json(0))));
        if (v.contains("cyclo")) {
            const int n = get_as<int>(v, "cyclo");
            if (n < 1) throw io_error("validation", "cyclo order must be positive");
            std::vector<Rational> c;
            for (const auto& x : field(v, "c")) c.push_back(rational_of(x));
            return Cyclotomic::from_exponents(n, c);
        }
        if (v.contains("cospi")) {
            const auto [a, b] = fraction_of(v.at("cospi"));
            return cos_pi(a, b);
        }
        if (v.contains("sinpi")) {
            // sin(pi a/b) = cos(pi (b - 2a) / (2b))
            const auto [a, b] = fraction_of(v.at("sinpi"));
            return cos_pi(b - 2 * a, 2 * b);
        }
    }
    throw io_error("validation", "unrecognized matrix entry", {{"value", v.dump()}});
}

Complex parse_float(const Json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_object() && (v.contains("re") || v.contains("im"))) {
        auto part = [&](const char* key) { return v.contains(key) ? parse_float(v.at(key)).real() : 0.0; };
        return {part("re"), part("im")};
    }
    return parse_exact(v).to_complex();
}

template <class Scalar>
Matrix<Scalar> parse_matrix(const Json& v) {
    if (!v.is_array()) {
        Matrix<Scalar> m(1, 1);
        m(0, 0) = parse_scalar<Scalar>(v);
        return m;
    }
    if (v.empty() || !v.at(0).is_array() || v.at(0).empty()) throw io_error("validation", "matrix must be a non-empty list of rows");
    const auto rows = static_cast<Eigen::Index>(v.size());
    const auto cols = static_cast<Eigen::Index>(v.at(0).size());
    Matrix<Scalar> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = v.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw io_error("validation", "matrix rows have different lengths");
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = parse_scalar<Scalar>(row.at(static_cast<std::size_t>(j)));
    }
    return m;
}

Json read_json(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw io_error("validation", "cannot open input file", {{"path", path.string()}});
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error("validation", "input is not valid JSON", {{"path", path.string()}, {"detail", e.what()}});
    }
}

std::string kind_of(const Json& doc) {
    if (!doc.is_object()) throw io_error("validation", "top level must be an object");
    const std::string k = doc.value("kind", std::string());
    static const std::set<std::string> known{"symbol", "action", "strata", "beta", "isotropy"};
    if (!known.count(k)) throw io_error("validation", "unknown or missing 'kind'", {{"kind", k}});
    return k;
}

template <class Scalar>
CliffordSymbol<Scalar> load_symbol(const Json& doc, const fs::path& base, double tol) {
    fs::path where;
    const Json d = resolve(doc, base, where);
    if (d.contains("builtin")) {
        const std::string b = get_as<std::string>(d, "builtin");
        const Cyclotomic i = Cyclotomic::root_of_unity(4);
        auto one = [](const Cyclotomic& x) {
            ExactMatrix m(1, 1);
            m(0, 0) = x;
            return m;
        };
        if (b == "de_rham") {
            const int k = get_as<int>(d, "k");
            if (k < 1 || k > 6) throw io_error("validation", "de_rham k must lie in [1, 6]");
            return from_exact<Scalar>(de_rham_symbol(k), tol);
        }
        if (b == "cauchy_riemann") return from_exact<Scalar>(CliffordSymbol<Cyclotomic>::create({one(1L), one(i)}), tol);
        if (b == "pauli") {
            ExactMatrix s1(2, 2), s2(2, 2), s3(2, 2);
            s1 << 0L, 1L, 1L, 0L;
            s2 << 0L, -i, i, 0L;
            s3 << 1L, 0L, 0L, -1L;
            return from_exact<Scalar>(CliffordSymbol<Cyclotomic>::create({s1, s2, s3}), tol);
        }
        throw io_error("validation", "unknown builtin symbol", {{"builtin", b}});
    }
    auto a = parse_matrices<Scalar>(field(d, "A"));
    const auto v = validate_symbol<Scalar>(a, tol);
    if (!v.pass) {
        Error::Context ctx;
        if (!v.structural.empty()) ctx["structural"] = v.structural;
        for (const auto& x : v.violations)
            ctx["relation_" + std::to_string(x.l + 1) + "_" + std::to_string(x.j + 1)] = std::to_string(x.residual);
        for (int j : v.singular) ctx["singular_" + std::to_string(j + 1)] = "true";
        throw Error("validation", "operator_core", "symbol violates the Clifford relations", ctx);
    }
    return CliffordSymbol<Scalar>::create(std::move(a), tol);
}

FiniteGroup load_group(const Json& g) {
    if (g.contains("mul")) {
        try {
            return FiniteGroup::from_table(g.at("mul").get<std::vector<std::vector<int>>>(), g.value("name", std::string()));
        } catch (const nlohmann::json::exception&) {
            throw io_error("validation", "mul must be a square table of integers");
        }
    }
    const std::string b = get_as<std::string>(g, "builtin");
    if (b == "product") {
        const Json& f = field(g, "factors");
        if (!f.is_array() || f.size() != 2) throw io_error("validation", "product needs two factors");
        return direct_product(load_group(f.at(0)), load_group(f.at(1)));
    }
    const int n = get_as<int>(g, "n");
    if (n < 1 || n > 64) throw io_error("validation", "group parameter out of range", {{"n", std::to_string(n)}});
    if (b == "cyclic") return cyclic_group(n);
    if (b == "dihedral") return dihedral_group(n);
    if (b == "symmetric") return symmetric_group(n);
    throw io_error("validation", "unknown builtin group", {{"builtin", b}});
}

namespace {

CharacterTable builtin_characters(const Json& g) {
    if (g.contains("mul")) throw io_error("validation", "a group given by its table needs explicit characters");
    const std::string b = get_as<std::string>(g, "builtin");
    if (b == "product") return product_characters(builtin_characters(g.at("factors").at(0)), builtin_characters(g.at("factors").at(1)));
    const int n = get_as<int>(g, "n");
    if (b == "cyclic") return cyclic_characters(n);
    if (b == "dihedral") return dihedral_characters(n);
    if (b == "symmetric") return symmetric_characters(n);
    throw io_error("validation", "unknown builtin group", {{"builtin", b}});
}

}  // namespace

CharacterTable load_characters(const Json& doc, const FiniteGroup& g) {
    const Json c = doc.value("characters", Json("builtin"));
    if (c.is_string() && c.get<std::string>() == "builtin") return builtin_characters(field(doc, "group"));
    std::vector<Irrep> irreps;
    for (const auto& ir : field(c, "irreps")) {
        Irrep r{get_as<std::string>(ir, "name"), get_as<int>(ir, "degree"), {}};
        for (const auto& x : field(ir, "values")) r.values.push_back(parse_exact(x));
        irreps.push_back(std::move(r));
    }
    return CharacterTable::create(g, std::move(irreps));
}

template <class Scalar>
GroupAction<Scalar> load_action(const Json& doc, const fs::path& base, double tol) {
    fs::path where;
    const Json d = resolve(doc, base, where);
    auto sym = load_symbol<Scalar>(field(d, "symbol"), where, tol);
    FiniteGroup g = load_group(field(d, "group"));
    const auto gens = get_as<std::vector<int>>(d, "generators");
    const auto r = parse_matrices<Scalar>(field(d, "R"));
    const auto up = parse_matrices<Scalar>(field(d, "Uplus"));
    const auto um = parse_matrices<Scalar>(field(d, "Uminus"));
    if (r.size() != gens.size() || up.size() != gens.size() || um.size() != gens.size())
        throw io_error("validation", "R, Uplus and Uminus need one matrix per generator");
    return GroupAction<Scalar>::create(std::move(sym), std::move(g), gens, r, up, um, is_exact_v<Scalar> ? 0.0 : tol);
}

StrataModel load_strata(const Json& doc) {
    StrataModel m;
    const std::string mode = doc.value("mode", std::string("finite"));
    if (mode == "finite") {
        m.mode = StrataMode::finite;
        const FiniteGroup g = load_group(field(doc, "group"));
        m.table = load_characters(doc, g);
        for (int i = 0; i < m.table->size(); ++i) m.irreps.push_back(m.table->name(i));
        m.principal_isotropy = elements_of(field(doc, "principal_isotropy"));
    } else if (mode == "compact-opaque") {
        m.mode = StrataMode::compact_opaque;
        m.irreps = get_as<std::vector<std::string>>(doc, "irreps");
        m.principal_chi_table = long_map(field(doc, "principal_chi_table"));
    } else {
        throw io_error("validation", "mode must be finite or compact-opaque", {{"mode", mode}});
    }
    m.chi_principal_rel = get_as<long>(doc, "chi_principal_rel");
    for (const auto& s : field(doc, "strata")) {
        Stratum st;
        st.id = get_as<std::string>(s, "id");
        st.chi_quotient_rel = get_as<long>(s, "chi_quotient_rel");
        if (m.mode == StrataMode::finite) st.isotropy = elements_of(field(s, "isotropy"));
        const Json o = s.value("orientation", Json("preserved"));
        if (o.is_object()) {
            st.xi = get_as<std::vector<int>>(o, "xi");
        } else if (!(o.is_string() && o.get<std::string>() == "preserved")) {
            throw io_error("validation", "orientation must be \"preserved\" or {\"xi\": [...]}", {{"stratum", st.id}});
        }
        if (m.mode == StrataMode::compact_opaque) st.chi_table = long_map(field(s, "chi_table"));
        m.strata.push_back(std::move(st));
    }
    if (doc.contains("total")) m.total = get_as<long>(doc, "total");
    m.validate();
    return m;
}

// ---------------------------------------------------------------- reports

Json envelope(const std::string& command, const std::string& input) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    if (!input.empty()) j["input"] = fs::path(input).filename().string();
    return j;
}

Json number(const Rational& q) { return {{"exact", to_string(q)}, {"float", q.convert_to<double>()}}; }

Json error_object(const Error& e) {
    Json ctx = Json::object();
    for (const auto& [k, v] : e.context()) ctx[k] = v;
    return {{"code", e.code()}, {"module", e.module()}, {"message", e.what()}, {"context", ctx}};
}

fs::path fixture_dir() {
    if (const char* env = std::getenv("EQUISPECTRA_FIXTURES")) return env;
    return EQUISPECTRA_FIXTURE_DIR;
}

std::vector<Fixture> bundled_fixtures(const fs::path& dir) {
    const Json idx = read_json(dir / "index.json");
    std::vector<Fixture> out;
    for (const auto& f : field(idx, "fixtures"))
        out.push_back({get_as<std::string>(f, "name"), get_as<std::string>(f, "file"), get_as<std::string>(f, "kind"),
                       f.value("description", std::string())});
    return out;
}

RunResult run(const JobSpec& job) {
    RunResult r;
    try {
        check_job(job);
        r = job.mode == Mode::exact ? dispatch<Cyclotomic>(job) : dispatch<Complex>(job);
    } catch (const Error& e) {
        r.report = envelope(job.command, job.in);
        r.report["error"] = error_object(e);
        r.status = e.code() == "oracle" || e.code() == "internal" ? 2 : 1;
    } catch (const std::exception& e) {
        r.report = envelope(job.command, job.in);
        r.report["error"] = error_object(Error("validation", "cli_io", e.what()));
        r.status = 1;
    }
    return r;
}

template Matrix<Cyclotomic> parse_matrix(const Json&);
template Matrix<Complex> parse_matrix(const Json&);
template CliffordSymbol<Cyclotomic> load_symbol(const Json&, const fs::path&, double);
template CliffordSymbol<Complex> load_symbol(const Json&, const fs::path&, double);
template GroupAction<Cyclotomic> load_action(const Json&, const fs::path&, double);
template GroupAction<Complex> load_action(const Json&, const fs::path&, double);

}  // namespace equispectra::io
