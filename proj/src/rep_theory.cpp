#include "equispectra/rep_theory.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "equispectra/error.hpp"

namespace equispectra {

namespace {

Error structural(const std::string& msg, Error::Context ctx = {}) {
    return Error("structural", "rep_theory", msg, std::move(ctx));
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul, std::string name) {
    FiniteGroup g;
    g.name_ = std::move(name);
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw structural("group must have at least one element");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw structural("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw structural("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (mul[0][a] != a || mul[a][0] != a) throw structural("element 0 is not the identity");
    }
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen[mul[a][b]]) throw structural("multiplication table row is not a permutation");
            seen[mul[a][b]] = true;
            if (mul[a][b] == 0) g.inv_[a] = b;
        }
        if (mul[g.inv_[a]][a] != 0) throw structural("left and right inverses differ");
    }
    auto assoc = [&](int a, int b, int c) { return mul[mul[a][b]][c] == mul[a][mul[b][c]]; };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw structural("multiplication is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t)
            if (!assoc(pick(rng), pick(rng), pick(rng))) throw structural("multiplication is not associative");
    }
    g.mul_ = std::move(mul);
    g.orders_.assign(n, 1);
    for (int a = 0; a < n; ++a) {
        int x = a;
        int o = 1;
        while (x != 0) {
            x = g.mul_[x][a];
            ++o;
        }
        g.orders_[a] = o;
        g.exponent_ = lcm_int(g.exponent_, o);
    }
    g.class_of_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (g.class_of_[a] >= 0) continue;
        std::vector<int> cls;
        for (int b = 0; b < n; ++b) {
            const int c = g.conjugate(a, b);
            if (g.class_of_[c] < 0) {
                g.class_of_[c] = static_cast<int>(g.classes_.size());
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        g.classes_.push_back(std::move(cls));
    }
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw structural("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(mul), "Z" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw structural("dihedral group needs n >= 1");
    std::vector<std::vector<int>> mul(2 * n, std::vector<int>(2 * n));
    auto md = [n](int x) { return ((x % n) + n) % n; };
    for (int x = 0; x < 2 * n; ++x) {
        for (int y = 0; y < 2 * n; ++y) {
            const bool sx = x >= n;
            const bool sy = y >= n;
            const int a = x % n;
            const int b = y % n;
            if (!sx && !sy) mul[x][y] = md(a + b);
            else if (!sx && sy) mul[x][y] = n + md(b - a);
            else if (sx && !sy) mul[x][y] = n + md(a + b);
            else mul[x][y] = md(b - a);
        }
    }
    return FiniteGroup::from_table(std::move(mul), "D" + std::to_string(n));
}

namespace {

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw structural("built-in symmetric groups cover n <= 4");
    const auto perms = permutations(n);
    const int size = static_cast<int>(perms.size());
    std::vector<std::vector<int>> mul(size, std::vector<int>(size));
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return FiniteGroup::from_table(std::move(mul), "S" + std::to_string(n));
}

std::vector<int> permutation_of(int n, int g) { return permutations(n).at(g); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order();
    const int nh = h.order();
    std::vector<std::vector<int>> mul(ng * nh, std::vector<int>(ng * nh));
    for (int a = 0; a < ng * nh; ++a)
        for (int b = 0; b < ng * nh; ++b)
            mul[a][b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
    return FiniteGroup::from_table(std::move(mul), g.name() + "x" + h.name());
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
    std::vector<int> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw structural("repeated subgroup element");
    if (sorted.empty() || sorted.front() != 0) throw structural("subgroup must contain the identity");
    for (int x : sorted)
        if (x < 0 || x >= g.order()) throw structural("subgroup element out of range");
    elements.erase(std::find(elements.begin(), elements.end(), 0));
    elements.insert(elements.begin(), 0);
    const int n = static_cast<int>(elements.size());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < n; ++i) local[elements[i]] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int c = local[g.mul(elements[a], elements[b])];
            if (c < 0) throw structural("subgroup elements are not closed under multiplication");
            mul[a][b] = c;
        }
    }
    return {FiniteGroup::from_table(std::move(mul)), std::move(elements)};
}

CharacterTable CharacterTable::create(FiniteGroup group, std::vector<Irrep> irreps) {
    const int n = group.order();
    long sum_sq = 0;
    for (const auto& ir : irreps) {
        if (static_cast<int>(ir.values.size()) != n)
            throw structural("character " + ir.name + " needs one value per group element");
        if (ir.values[0] != Cyclotomic(static_cast<long>(ir.degree)))
            throw structural("character " + ir.name + " has chi(e) != degree");
        for (const auto& cls : group.classes())
            for (int x : cls)
                if (ir.values[x] != ir.values[cls.front()])
                    throw structural("character " + ir.name + " is not a class function");
        sum_sq += static_cast<long>(ir.degree) * ir.degree;
    }
    if (sum_sq != n) throw structural("sum of squared degrees differs from the group order");
    CharacterTable t;
    t.group_ = std::move(group);
    t.irreps_ = std::move(irreps);
    for (int i = 0; i < t.size(); ++i) {
        for (int j = i; j < t.size(); ++j) {
            const Cyclotomic ip = t.inner(t.character(i), t.character(j));
            if (ip != Cyclotomic(i == j ? 1L : 0L))
                throw Error("inconsistent", "rep_theory", "characters " + t.name(i) + " and " + t.name(j) +
                                                              " violate row orthogonality");
        }
    }
    return t;
}

int CharacterTable::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (irreps_[i].name == name) return i;
    throw structural("unknown irreducible '" + name + "'", {{"label", name}});
}

int CharacterTable::find(const std::vector<Cyclotomic>& values) const {
    for (int i = 0; i < size(); ++i)
        if (irreps_[i].values == values) return i;
    return -1;
}

int CharacterTable::find_conj(int i) const {
    std::vector<Cyclotomic> v;
    for (const auto& x : irreps_[i].values) v.push_back(conj(x));
    return find(v);
}

int CharacterTable::trivial() const {
    return find(std::vector<Cyclotomic>(group_.order(), Cyclotomic(1L)));
}

Cyclotomic CharacterTable::inner(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
    Cyclotomic s(0L);
    for (int g = 0; g < group_.order(); ++g) s += a[g] * conj(b[g]);
    return s / Cyclotomic(static_cast<long>(group_.order()));
}

long CharacterTable::multiplicity(const std::vector<Cyclotomic>& chi, int i) const {
    const Cyclotomic ip = inner(chi, character(i));
    if (!ip.is_integer() || ip.rational_value() < 0)
        throw Error("inconsistent", "rep_theory", "class function is not a character: <chi, " + name(i) + "> = " + ip.to_string());
    return ip.rational_value().convert_to<long>();
}

CharacterTable cyclic_characters(int n) {
    FiniteGroup g = cyclic_group(n);
    std::vector<Irrep> irreps;
    for (int j = 0; j < n; ++j) {
        Irrep ir{"chi" + std::to_string(j), 1, {}};
        for (int a = 0; a < n; ++a) ir.values.push_back(Cyclotomic::root_of_unity(n, static_cast<long>(j) * a));
        irreps.push_back(std::move(ir));
    }
    return CharacterTable::create(std::move(g), std::move(irreps));
}

CharacterTable dihedral_characters(int n) {
    FiniteGroup g = dihedral_group(n);
    std::vector<Irrep> irreps;
    auto one_dim = [&](const std::string& name, long r_sign, long s_sign) {
        Irrep ir{name, 1, {}};
        for (int x = 0; x < 2 * n; ++x) {
            const int a = x % n;
            long v = (a % 2 == 0) ? 1 : r_sign;
            if (x >= n) v *= s_sign;
            ir.values.emplace_back(v);
        }
        irreps.push_back(std::move(ir));
    };
    one_dim("triv", 1, 1);
    one_dim("det", 1, -1);
    if (n % 2 == 0) {
        one_dim("b1", -1, 1);
        one_dim("b2", -1, -1);
    }
    for (int h = 1; 2 * h < n; ++h) {
        Irrep ir{"psi" + std::to_string(h), 2, {}};
        for (int x = 0; x < 2 * n; ++x) {
            if (x >= n) {
                ir.values.emplace_back(0L);
            } else {
                ir.values.push_back(Cyclotomic::root_of_unity(n, static_cast<long>(h) * x) +
                                    Cyclotomic::root_of_unity(n, -static_cast<long>(h) * x));
            }
        }
        irreps.push_back(std::move(ir));
    }
    return CharacterTable::create(std::move(g), std::move(irreps));
}

CharacterTable symmetric_characters(int n) {
    FiniteGroup g = symmetric_group(n);
    const auto perms = permutations(n);
    std::vector<std::vector<int>> cycle_types;
    std::vector<long> signs;
    std::vector<long> fixed;
    for (const auto& p : perms) {
        std::vector<bool> seen(n, false);
        std::vector<int> lens;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        long sign = 1;
        for (int l : lens)
            if (l % 2 == 0) sign = -sign;
        signs.push_back(sign);
        fixed.push_back(std::count(lens.begin(), lens.end(), 1));
        cycle_types.push_back(lens);
    }
    std::vector<Irrep> irreps;
    auto add = [&](const std::string& name, int degree, auto&& value) {
        Irrep ir{name, degree, {}};
        for (std::size_t x = 0; x < perms.size(); ++x) ir.values.emplace_back(static_cast<long>(value(x)));
        irreps.push_back(std::move(ir));
    };
    add("triv", 1, [](std::size_t) { return 1L; });
    if (n >= 2) add("sign", 1, [&](std::size_t x) { return signs[x]; });
    if (n == 3) add("std", 2, [&](std::size_t x) { return fixed[x] - 1; });
    if (n == 4) {
        add("two", 2, [&](std::size_t x) {
            const auto& c = cycle_types[x];
            if (c == std::vector<int>{1, 1, 1, 1} || c == std::vector<int>{2, 2}) return 2L;
            if (c == std::vector<int>{3, 1}) return -1L;
            return 0L;
        });
        add("std", 3, [&](std::size_t x) { return fixed[x] - 1; });
        add("std_sign", 3, [&](std::size_t x) { return (fixed[x] - 1) * signs[x]; });
    }
    return CharacterTable::create(std::move(g), std::move(irreps));
}

CharacterTable product_characters(const CharacterTable& a, const CharacterTable& b) {
    FiniteGroup g = direct_product(a.group(), b.group());
    const int nb = b.group().order();
    std::vector<Irrep> irreps;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            Irrep ir{a.name(i) + "*" + b.name(j), a.degree(i) * b.degree(j), {}};
            for (int x = 0; x < g.order(); ++x) ir.values.push_back(a.character(i)[x / nb] * b.character(j)[x % nb]);
            irreps.push_back(std::move(ir));
        }
    }
    return CharacterTable::create(std::move(g), std::move(irreps));
}

CharacterTable cyclic_subgroup_characters(const Subgroup& h) {
    const FiniteGroup& g = h.group;
    const int n = g.order();
    int gen = -1;
    for (int x = 0; x < n; ++x) {
        if (g.element_order(x) == n) {
            gen = x;
            break;
        }
    }
    if (gen < 0) throw structural("subgroup is not cyclic; supply its character table explicitly");
    std::vector<int> exponent_of(n, 0);
    for (int e = 0, x = 0; e < n; ++e, x = g.mul(x, gen)) exponent_of[x] = e;
    std::vector<Irrep> irreps;
    for (int j = 0; j < n; ++j) {
        Irrep ir{"chi" + std::to_string(j), 1, {}};
        for (int x = 0; x < n; ++x) ir.values.push_back(Cyclotomic::root_of_unity(n, static_cast<long>(j) * exponent_of[x]));
        irreps.push_back(std::move(ir));
    }
    return CharacterTable::create(g, std::move(irreps));
}

namespace {

template <class Scalar>
bool matrices_equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero_matrix<Scalar>(a - b, tol);
}

template <class Scalar>
std::vector<Matrix<Scalar>> expand(const FiniteGroup& g, const std::vector<int>& gens,
                                   const std::vector<Matrix<Scalar>>& mats, const std::string& what, double tol) {
    if (gens.size() != mats.size()) throw structural(what + ": one matrix per generator required");
    if (mats.empty()) {
        if (g.order() != 1) throw structural(what + ": generators required for a nontrivial group");
        return {};
    }
    const auto n = mats.front().rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n) throw structural(what + ": generator matrices must be square of equal size");
    std::vector<Matrix<Scalar>> out(g.order());
    std::vector<bool> known(g.order(), false);
    out[0] = identity<Scalar>(n);
    known[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i] < 0 || gens[i] >= g.order()) throw structural(what + ": generator index out of range");
            const int y = g.mul(x, gens[i]);
            Matrix<Scalar> m = out[x] * mats[i];
            if (!known[y]) {
                out[y] = std::move(m);
                known[y] = true;
                queue.push_back(y);
            } else if (!matrices_equal<Scalar>(out[y], m, tol)) {
                throw structural(what + ": generator matrices do not define a homomorphism",
                                 {{"element", std::to_string(y)}});
            }
        }
    }
    for (int x = 0; x < g.order(); ++x)
        if (!known[x]) throw structural(what + ": generators do not generate the group");
    return out;
}

}  // namespace

template <class Scalar>
void check_homomorphism(const FiniteGroup& g, const std::vector<Matrix<Scalar>>& rep, double tol) {
    if (static_cast<int>(rep.size()) != g.order()) throw structural("representation needs one matrix per element");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (!matrices_equal<Scalar>(rep[g.mul(a, b)], rep[a] * rep[b], tol))
                throw structural("matrices are not a representation",
                                 {{"a", std::to_string(a)}, {"b", std::to_string(b)}});
}

template <class Scalar>
GroupAction<Scalar> GroupAction<Scalar>::create(CliffordSymbol<Scalar> symbol, FiniteGroup group,
                                                const std::vector<int>& generators, const std::vector<Mat>& r,
                                                const std::vector<Mat>& u_plus, const std::vector<Mat>& u_minus,
                                                double tol) {
    if constexpr (is_exact_v<Scalar>) tol = 0.0;
    const int k = symbol.k();
    const int d = symbol.d();
    GroupAction act(std::move(symbol), std::move(group));
    const FiniteGroup& g = act.group_;
    if (generators.empty() && g.order() == 1) {
        act.r_ = {identity<Scalar>(k)};
        act.up_ = {identity<Scalar>(d)};
        act.um_ = {identity<Scalar>(d)};
    } else {
        act.r_ = expand<Scalar>(g, generators, r, "R", tol);
        act.up_ = expand<Scalar>(g, generators, u_plus, "Uplus", tol);
        act.um_ = expand<Scalar>(g, generators, u_minus, "Uminus", tol);
    }
    if (act.r_[0].rows() != k) throw structural("R must act on R^k");
    if (act.up_[0].rows() != d || act.um_[0].rows() != d) throw structural("fiber actions must be d x d");
    check_homomorphism<Scalar>(g, act.r_, tol);
    check_homomorphism<Scalar>(g, act.up_, tol);
    check_homomorphism<Scalar>(g, act.um_, tol);
    for (int x = 0; x < g.order(); ++x) {
        const std::string el = std::to_string(x);
        if (!matrices_equal<Scalar>(conj_transpose(act.r_[x]) * act.r_[x], identity<Scalar>(k), tol) ||
            !matrices_equal<Scalar>(conj_transpose(act.r_[x]), act.r_[x].transpose(), tol))
            throw Error("validation", "rep_theory", "R_g is not real orthogonal", {{"element", el}});
        if (!matrices_equal<Scalar>(conj_transpose(act.up_[x]) * act.up_[x], identity<Scalar>(d), tol) ||
            !matrices_equal<Scalar>(conj_transpose(act.um_[x]) * act.um_[x], identity<Scalar>(d), tol))
            throw Error("validation", "rep_theory", "fiber action is not unitary", {{"element", el}});
        for (int i = 0; i < k; ++i) {
            Mat rhs = zeros<Scalar>(d, d);
            for (int j = 0; j < k; ++j) rhs += act.r_[x](j, i) * act.symbol_.A(j);
            rhs = rhs * act.up_[x];
            if (!matrices_equal<Scalar>(act.um_[x] * act.symbol_.A(i), rhs, tol))
                throw Error("validation", "rep_theory", "action does not commute with the symbol",
                            {{"element", el}, {"i", std::to_string(i + 1)}});
        }
    }
    return act;
}

template <class Scalar>
GroupAction<Scalar> GroupAction<Scalar>::trivial(CliffordSymbol<Scalar> symbol) {
    return create(std::move(symbol), cyclic_group(1), {}, {}, {}, {});
}

template <class Scalar>
Matrix<Scalar> isotypic_projector(const std::vector<Matrix<Scalar>>& rep, const CharacterTable& table, int rho,
                                  bool verify) {
    const FiniteGroup& g = table.group();
    if (rho < 0 || rho >= table.size()) throw structural("irreducible index out of range");
    if (verify) check_homomorphism<Scalar>(g, rep);
    const auto n = rep.at(0).rows();
    Matrix<Scalar> p = zeros<Scalar>(n, n);
    for (int x = 0; x < g.order(); ++x) {
        const Cyclotomic c = conj(table.character(rho)[x]);
        if (c.is_zero()) continue;
        if constexpr (is_exact_v<Scalar>) {
            p += c * rep[x];
        } else {
            p += c.to_complex() * rep[x];
        }
    }
    const Cyclotomic scale = Cyclotomic(static_cast<long>(table.degree(rho))) / Cyclotomic(static_cast<long>(g.order()));
    if constexpr (is_exact_v<Scalar>) {
        p *= scale;
    } else {
        p *= scale.to_complex();
    }
    return p;
}

std::vector<long> restriction_multiplicities(const CharacterTable& table_g, const CharacterTable& table_h,
                                             const std::vector<int>& embedding, int rho) {
    const int nh = table_h.group().order();
    if (static_cast<int>(embedding.size()) != nh) throw structural("embedding must list one ambient element per subgroup element");
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b)
            if (embedding[table_h.group().mul(a, b)] != table_g.group().mul(embedding[a], embedding[b]))
                throw structural("embedding is not a homomorphism");
    std::vector<Cyclotomic> res;
    for (int h = 0; h < nh; ++h) res.push_back(table_g.character(rho)[embedding[h]]);
    std::vector<long> out;
    for (int s = 0; s < table_h.size(); ++s) out.push_back(table_h.multiplicity(res, s));
    return out;
}

long induced_multiplicity(const CharacterTable& table_g, const CharacterTable& table_h,
                          const std::vector<int>& embedding, int sigma, int rho) {
    const FiniteGroup& g = table_g.group();
    std::vector<int> local(g.order(), -1);
    for (std::size_t h = 0; h < embedding.size(); ++h) local[embedding[h]] = static_cast<int>(h);
    std::vector<Cyclotomic> ind(g.order(), Cyclotomic(0L));
    for (int x = 0; x < g.order(); ++x) {
        Cyclotomic s(0L);
        for (int y = 0; y < g.order(); ++y) {
            const int c = local[g.conjugate(x, y)];
            if (c >= 0) s += table_h.character(sigma)[c];
        }
        ind[x] = s / Cyclotomic(static_cast<long>(table_h.group().order()));
    }
    return table_g.multiplicity(ind, rho);
}

std::vector<int> conjugation_map(const FiniteGroup& g, const std::vector<int>& embedding, int n) {
    std::vector<int> local(g.order(), -1);
    for (std::size_t h = 0; h < embedding.size(); ++h) local[embedding[h]] = static_cast<int>(h);
    std::vector<int> out;
    for (int e : embedding) {
        const int c = local[g.conjugate(e, n)];
        if (c < 0) throw structural("conjugation leaves the subgroup", {{"n", std::to_string(n)}});
        out.push_back(c);
    }
    return out;
}

int sigma_conjugate(const CharacterTable& table_h, int sigma, const std::vector<int>& conj_map) {
    if (static_cast<int>(conj_map.size()) != table_h.group().order()) throw structural("conjugation map has the wrong size");
    std::vector<Cyclotomic> v;
    for (int h = 0; h < table_h.group().order(); ++h) v.push_back(table_h.character(sigma)[conj_map[h]]);
    const int out = table_h.find(v);
    if (out < 0) throw structural("conjugated character is not in the table");
    return out;
}

std::vector<FineBlock> fine_partition(const CharacterTable& table_h, const std::vector<std::vector<int>>& conj_maps) {
    std::vector<int> block_of(table_h.size(), -1);
    std::vector<FineBlock> out;
    for (int s = 0; s < table_h.size(); ++s) {
        if (block_of[s] >= 0) continue;
        FineBlock b;
        std::deque<int> queue{s};
        block_of[s] = static_cast<int>(out.size());
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            b.labels.push_back(x);
            for (const auto& m : conj_maps) {
                const int y = sigma_conjugate(table_h, x, m);
                if (block_of[y] < 0) {
                    block_of[y] = block_of[s];
                    queue.push_back(y);
                }
            }
        }
        std::sort(b.labels.begin(), b.labels.end());
        out.push_back(std::move(b));
    }
    return out;
}

CanonicalBundle canonical_bundle_data(const CharacterTable& table_g, const CharacterTable& table_h,
                                      const std::vector<int>& embedding, int sigma,
                                      const std::vector<std::vector<int>>& conj_maps) {
    for (int j = 0; j < table_g.size(); ++j) {
        const long m = restriction_multiplicities(table_g, table_h, embedding, j)[sigma];
        if (m > 0) {
            int n = 1;
            for (const auto& b : fine_partition(table_h, conj_maps))
                if (std::find(b.labels.begin(), b.labels.end(), sigma) != b.labels.end()) n = b.size();
            return {j, m, table_h.degree(sigma), n};
        }
    }
    throw Error("internal", "rep_theory", "no G-irreducible restricts to contain sigma");
}

template void check_homomorphism<Cyclotomic>(const FiniteGroup&, const std::vector<ExactMatrix>&, double);
template void check_homomorphism<Complex>(const FiniteGroup&, const std::vector<ComplexMatrix>&, double);
template class GroupAction<Cyclotomic>;
template class GroupAction<Complex>;
template ExactMatrix isotypic_projector(const std::vector<ExactMatrix>&, const CharacterTable&, int, bool);
template ComplexMatrix isotypic_projector(const std::vector<ComplexMatrix>&, const CharacterTable&, int, bool);

}  // namespace equispectra
