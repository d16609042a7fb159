#include "gtp/centralizer.hpp"

#include "gtp/linsolve.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gtp {

namespace {

int dot(const Root& a, const Root& b) { return a.m * b.m + a.n * b.n; }

bool smono_less_deglex(const Mono& a, const Mono& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct DegLexLess {
    bool operator()(const Mono& a, const Mono& b) const { return smono_less_deglex(a, b); }
};
struct DegLexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return smono_less_deglex(b, a); }
};

}  // namespace

// ---------------------------------------------------------------- root lists

std::vector<Root> list_roots(const ChevalleyAlgebra& g, const MultVec& v) {
    std::vector<Root> out;
    auto rg = g.root_indices();
    for (std::size_t s = 0; s < v.size(); ++s)
        for (int n = 0; n < v[s]; ++n) out.push_back(g.gens[rg[s]].root);
    return out;
}

Root list_weight(const ChevalleyAlgebra& g, const MultVec& v) {
    Root w;
    auto rg = g.root_indices();
    for (std::size_t s = 0; s < v.size(); ++s) w = w + Root{v[s] * g.gens[rg[s]].root.m, v[s] * g.gens[rg[s]].root.n};
    return w;
}

MultVec list_from_roots(const ChevalleyAlgebra& g, const std::vector<Root>& roots) {
    auto rg = g.root_indices();
    MultVec v(rg.size(), 0);
    for (const auto& r : roots) {
        bool found = false;
        for (std::size_t s = 0; s < rg.size(); ++s)
            if (g.gens[rg[s]].root == r) {
                ++v[s];
                found = true;
            }
        if (!found) throw MathError("not a root: " + r.str());
    }
    return v;
}

bool dominates(const MultVec& a, const MultVec& b) {
    for (std::size_t s = 0; s < a.size(); ++s)
        if (a[s] < b[s]) return false;
    return true;
}

EnumerationResult enumerate_indecomposable(const ChevalleyAlgebra& g) {
    auto rg = g.root_indices();
    const std::size_t k = rg.size();
    std::vector<Root> alpha;
    for (int x : rg) alpha.push_back(g.gens[x].root);

    EnumerationResult res;
    std::set<MultVec> frontier;
    for (std::size_t s = 0; s < k; ++s) {
        MultVec v(k, 0);
        v[s] = 1;
        frontier.insert(v);
    }
    auto dominated = [&](const MultVec& v) {
        for (const auto& s : res.lists)
            if (dominates(v, s)) return true;
        return false;
    };
    while (!frontier.empty()) {
        std::set<MultVec> next;
        std::vector<MultVec> level_solutions;
        for (const auto& v : frontier) {
            ++res.visited;
            Root w = list_weight(g, v);
            if (w.is_zero()) {
                level_solutions.push_back(v);
                continue;
            }
            for (std::size_t s = 0; s < k; ++s) {
                if (dot(w, alpha[s]) >= 0) continue;
                MultVec u = v;
                ++u[s];
                if (!dominated(u)) next.insert(u);
            }
        }
        res.lists.insert(res.lists.end(), level_solutions.begin(), level_solutions.end());
        frontier.clear();
        for (const auto& v : next)
            if (!dominated(v)) frontier.insert(v);
    }
    std::sort(res.lists.begin(), res.lists.end(), [](const MultVec& a, const MultVec& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a > b;
    });
    return res;
}

PrimitivityResult is_primitive(const ChevalleyAlgebra& g, const std::vector<Root>& list) {
    PrimitivityResult res;
    for (const auto& w : weyl_group(g)) {
        ++res.tried;
        std::vector<Root> img;
        int pos = 0;
        for (const auto& r : list) {
            img.push_back(weyl_apply(g, w, r));
            if (img.back().positive()) ++pos;
        }
        const int neg = static_cast<int>(img.size()) - pos;
        if (pos == 1 || neg == 1) {
            res.primitive = true;
            res.witness = w;
            res.image = img;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------- Centralizer

Centralizer::Centralizer(AlgebraId id) : id_(id), g_(algebra(id)), u_(gtp::uea(id)) {
    root_gens_ = g_.root_indices();
    slot_of_gen_.assign(g_.gens.size(), -1);
    for (std::size_t s = 0; s < root_gens_.size(); ++s) slot_of_gen_[root_gens_[s]] = static_cast<int>(s);
    perfect_of_cartan_gen_.assign(g_.gens.size(), -1);

    lists_ = enumerate_indecomposable(g_).lists;
    std::vector<bool> used(lists_.size(), false);
    for (const auto& entry : tables::perfect(id)) {
        PerfectMonomial p;
        p.label = entry.label;
        p.printed = entry.word;
        auto letters = u_.parse_word(entry.word);
        if (!std::is_sorted(letters.begin(), letters.end()))
            throw MathError("perfect monomial " + entry.label + " is not a standard monomial");
        for (int x : letters) p.word.push_back(static_cast<std::uint8_t>(x));
        p.list.assign(root_gens_.size(), 0);
        if (letters.size() == 1 && g_.gens[letters[0]].cartan) {
            p.cartan = true;
            perfect_of_cartan_gen_[letters[0]] = static_cast<int>(perfect_.size());
        } else {
            for (int x : letters) {
                if (slot_of_gen_[x] < 0) throw MathError("Cartan letter inside " + entry.label);
                ++p.list[slot_of_gen_[x]];
            }
            auto it = std::find(lists_.begin(), lists_.end(), p.list);
            if (it == lists_.end())
                throw MathError("perfect monomial " + entry.label + " matches no indecomposable list");
            auto pos = static_cast<std::size_t>(it - lists_.begin());
            if (used[pos]) throw MathError("two perfect monomials share a list: " + entry.label);
            used[pos] = true;
        }
        perfect_.push_back(std::move(p));
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw MathError("an indecomposable list has no perfect monomial");
    for (int h : g_.cartan_indices())
        if (perfect_of_cartan_gen_[h] < 0) throw MathError("Cartan generator without a perfect label");
}

int Centralizer::perfect_index(std::string_view label) const {
    for (std::size_t p = 0; p < perfect_.size(); ++p)
        if (perfect_[p].label == label) return static_cast<int>(p);
    throw MathError("unknown perfect monomial " + std::string(label));
}

bool Centralizer::feasible(const MultVec& v, int min_label) const {
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return true;
    auto key = std::make_pair(v, min_label);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = feasible_memo_.find(key);
        if (it != feasible_memo_.end()) return it->second;
    }
    bool ok = false;
    for (int p = std::max(min_label, 2); p < static_cast<int>(perfect_.size()) && !ok; ++p) {
        const auto& l = perfect_[p].list;
        if (!dominates(v, l)) continue;
        MultVec rest = v;
        for (std::size_t s = 0; s < rest.size(); ++s) rest[s] -= l[s];
        ok = feasible(rest, p);
    }
    std::lock_guard<std::mutex> lock(mu_);
    feasible_memo_.emplace(key, ok);
    return ok;
}

SMono Centralizer::canonical_factorization(const MultVec& v) const {
    SMono out;
    MultVec rest = v;
    int min_label = 2;
    while (!std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
        bool advanced = false;
        for (int p = min_label; p < static_cast<int>(perfect_.size()); ++p) {
            const auto& l = perfect_[p].list;
            if (!dominates(rest, l)) continue;
            MultVec r2 = rest;
            for (std::size_t s = 0; s < r2.size(); ++s) r2[s] -= l[s];
            if (!feasible(r2, p)) continue;
            out.push_back(static_cast<std::uint8_t>(p));
            rest = std::move(r2);
            min_label = p;
            advanced = true;
            break;
        }
        if (!advanced) throw MathError("multiplicity vector has no factorization");
    }
    return out;
}

MultVec Centralizer::smono_list(const SMono& y) const {
    MultVec v(root_gens_.size(), 0);
    for (auto p : y)
        for (std::size_t s = 0; s < v.size(); ++s) v[s] += perfect_[p].list[s];
    return v;
}

bool Centralizer::is_semi_perfect(const SMono& y) const {
    if (!std::is_sorted(y.begin(), y.end())) return false;
    SMono c;
    for (auto p : y)
        if (!perfect_[p].cartan) c.push_back(p);
    return canonical_factorization(smono_list(y)) == c;
}

SMono Centralizer::semi_perfect_of(const Mono& x) const {
    SMono out;
    MultVec v(root_gens_.size(), 0);
    for (auto letter : x) {
        if (g_.gens[letter].cartan) out.push_back(static_cast<std::uint8_t>(perfect_of_cartan_gen_[letter]));
        else ++v[slot_of_gen_[letter]];
    }
    if (!list_weight(g_, v).is_zero()) throw MathError("monomial of nonzero weight");
    std::sort(out.begin(), out.end());
    for (auto p : canonical_factorization(v)) out.push_back(p);
    return out;
}

Mono Centralizer::leading_monomial(const SMono& y) const {
    Mono m;
    for (auto p : y) m.insert(m.end(), perfect_[p].word.begin(), perfect_[p].word.end());
    std::sort(m.begin(), m.end());
    return m;
}

int Centralizer::degree(const SMono& y) const {
    int d = 0;
    for (auto p : y) d += static_cast<int>(perfect_[p].word.size());
    return d;
}

std::vector<SMono> Centralizer::semi_perfect_basis(int max_degree) const {
    std::vector<SMono> out;
    SMono cur;
    std::function<void(int, int)> rec = [&](int from, int budget) {
        if (is_semi_perfect(cur)) out.push_back(cur);
        else return;  // every prefix of a semi-perfect monomial is semi-perfect
        for (int p = from; p < static_cast<int>(perfect_.size()); ++p) {
            int d = static_cast<int>(perfect_[p].word.size());
            if (d > budget) continue;
            cur.push_back(static_cast<std::uint8_t>(p));
            rec(p, budget - d);
            cur.pop_back();
        }
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end(), [this](const SMono& a, const SMono& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

std::vector<Mono> Centralizer::weight_zero_standard(int max_degree) const {
    std::vector<Mono> out;
    const int n = g_.dimension();
    std::vector<int> cnt(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, Root)> rec = [&](int x, int budget, Root w) {
        if (x == n) {
            if (!w.is_zero()) return;
            Mono m;
            for (int y = 0; y < n; ++y)
                for (int t = 0; t < cnt[y]; ++t) m.push_back(static_cast<std::uint8_t>(y));
            out.push_back(std::move(m));
            return;
        }
        const Root r = g_.gens[x].root;
        for (int c = 0; c <= budget; ++c) {
            cnt[x] = c;
            rec(x + 1, budget - c, w + Root{c * r.m, c * r.n});
        }
        cnt[x] = 0;
    };
    rec(0, max_degree, Root{});
    std::sort(out.begin(), out.end(), smono_less_deglex);
    return out;
}

std::shared_ptr<const UEAElement> Centralizer::omega(const SMono& y) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = omega_memo_.find(y);
        if (it != omega_memo_.end()) return it->second;
    }
    UEAElement r;
    if (y.empty()) {
        r = u_.unit();
    } else {
        SMono head(y.begin(), y.end() - 1);
        r = *omega(head);
        for (auto letter : perfect_[y.back()].word) r = u_.mul_gen(r, letter);
    }
    auto ptr = std::make_shared<const UEAElement>(std::move(r));
    std::lock_guard<std::mutex> lock(mu_);
    return omega_memo_.emplace(y, ptr).first->second;
}

UEAElement Centralizer::expand(const SElement& x) const {
    UEAElement r;
    for (const auto& [y, c] : x) r += *omega(y) * c;
    return r;
}

SElement Centralizer::normal_form(const UEAElement& x) const {
    std::map<Mono, Rational, DegLexGreater> work(x.terms().begin(), x.terms().end());
    for (const auto& [m, c] : work)
        if (!u_.mono_weight(m).is_zero()) throw MathError("normal form of an element of nonzero weight");
    SElement out;
    while (!work.empty()) {
        auto top = work.begin();
        const Mono m = top->first;
        const Rational c = top->second;
        SMono y = semi_perfect_of(m);
        out[y] += c;
        for (const auto& [n, d] : omega(y)->terms()) {
            auto [it, inserted] = work.emplace(n, -c * d);
            if (!inserted) {
                it->second -= c * d;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        if (work.count(m)) throw MathError("normal form did not remove the leading term");
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::string Centralizer::smono_str(const SMono& y) const {
    if (y.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < y.size();) {
        std::size_t r = t;
        while (r < y.size() && y[r] == y[t]) ++r;
        if (!s.empty()) s += "*";
        s += perfect_[y[t]].label;
        if (r - t > 1) s += "^" + std::to_string(r - t);
        t = r;
    }
    return s;
}

std::string Centralizer::str(const SElement& x) const {
    if (x.empty()) return "0";
    std::vector<std::pair<SMono, Rational>> terms(x.begin(), x.end());
    std::stable_sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
        int da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string s;
    for (const auto& [y, c] : terms) {
        if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) s += "-";
        Rational a = c.abs();
        if (y.empty()) s += a.str();
        else if (a == Rational(1)) s += smono_str(y);
        else s += a.str() + "*" + smono_str(y);
    }
    return s;
}

std::optional<UEAElement> Centralizer::symbol(const std::string& name) const {
    for (std::size_t p = 0; p < perfect_.size(); ++p)
        if (perfect_[p].label == name) return *omega(SMono{static_cast<std::uint8_t>(p)});
    if (name == "h3" && id_ == AlgebraId::C2) return *omega(SMono{0}) + *omega(SMono{1});
    if (auto x = g_.find(name)) return u_.gen(*x);
    if (g_.cartan_element(name)) return u_.cartan(name);
    return std::nullopt;
}

namespace {

bool is_one(const UEAElement& x) { return x == UEAElement::scalar(Rational(1)); }

struct LocalOps {
    const Centralizer& c;
    const Centralizer::SymbolTable* extra;

    LocalElement num(const Rational& r) const { return {UEAElement::scalar(Rational(1)), UEAElement::scalar(r)}; }
    LocalElement sym(const std::string& name) const {
        if (extra) {
            auto it = extra->find(name);
            if (it != extra->end()) return it->second;
        }
        auto v = c.symbol(name);
        if (!v) throw MathError("unknown symbol " + name);
        return {UEAElement::scalar(Rational(1)), *v};
    }
    void require_weight_zero(const LocalElement& a, const LocalElement& b) const {
        if (is_one(a.den) && is_one(b.den)) return;
        auto wa = c.uea().weight_of(a.num), wb = c.uea().weight_of(b.num);
        if (!wa || !wb || !wa->is_zero() || !wb->is_zero())
            throw MathError("localized arithmetic needs weight-zero operands");
    }
    LocalElement add(const LocalElement& a, const LocalElement& b) const {
        require_weight_zero(a, b);
        if (a.den == b.den) return {a.den, a.num + b.num};
        const UEA& u = c.uea();
        return {u.multiply(a.den, b.den), u.multiply(b.den, a.num) + u.multiply(a.den, b.num)};
    }
    LocalElement neg(const LocalElement& a) const { return {a.den, -a.num}; }
    LocalElement sub(const LocalElement& a, const LocalElement& b) const { return add(a, neg(b)); }
    LocalElement mul(const LocalElement& a, const LocalElement& b) const {
        require_weight_zero(a, b);
        const UEA& u = c.uea();
        UEAElement den = is_one(a.den) ? b.den : (is_one(b.den) ? a.den : u.multiply(a.den, b.den));
        return {den, u.multiply(a.num, b.num)};
    }
    LocalElement div(const LocalElement& a, const LocalElement& b) const {
        if (!is_cartan_polynomial(c.lie(), b.num) || b.num.is_zero())
            throw MathError("division by an element that is not a nonzero Cartan polynomial");
        if (b.num.size() == 1 && b.num.terms().begin()->first.empty()) {
            const Rational inv = Rational(1) / b.num.terms().begin()->second;
            return mul(a, LocalElement{UEAElement::scalar(Rational(1)), b.den * inv});
        }
        return mul(a, LocalElement{b.num, b.den});
    }
    LocalElement bracket(const LocalElement& a, const LocalElement& b) const { return sub(mul(a, b), mul(b, a)); }
};

}  // namespace

LocalElement Centralizer::eval_local(const Expr& e, const SymbolTable* extra) const {
    LocalOps ops{*this, extra};
    return evaluate<LocalElement>(e, ops);
}

LocalElement Centralizer::eval_local(std::string_view text, const SymbolTable* extra) const {
    return eval_local(*parse_expr(text), extra);
}

UEAElement Centralizer::eval(std::string_view text) const {
    LocalElement v = eval_local(text);
    if (!is_one(v.den)) throw MathError("expression has a nontrivial denominator");
    return v.num;
}

const Centralizer& centralizer(AlgebraId id) {
    static const Centralizer a2(AlgebraId::A2);
    static const Centralizer c2(AlgebraId::C2);
    static const Centralizer g2(AlgebraId::G2);
    switch (id) {
        case AlgebraId::A2: return a2;
        case AlgebraId::C2: return c2;
        case AlgebraId::G2: break;
    }
    return g2;
}

bool is_cartan_polynomial(const ChevalleyAlgebra& g, const UEAElement& x) {
    for (const auto& [m, c] : x.terms())
        for (auto letter : m)
            if (!g.gens[letter].cartan) return false;
    return true;
}

std::vector<std::string> noncentral_generators(const UEA& u, const UEAElement& z) {
    std::vector<std::string> out;
    for (int x = 0; x < u.lie().dimension(); ++x)
        if (!u.commutator(z, u.gen(x)).is_zero()) out.push_back(u.lie().gens[x].label);
    return out;
}

// ---------------------------------------------------------------- relations

RelationCheck check_relation(const Centralizer& c, const std::string& lhs, const std::string& rhs) {
    RelationCheck rc;
    rc.lhs = lhs;
    rc.rhs = rhs;
    LocalElement l = c.eval_local(lhs), r = c.eval_local(rhs);
    LocalOps ops{c, nullptr};
    LocalElement d = ops.sub(l, r);
    rc.denominator = c.str(c.normal_form(d.den));
    rc.residual = c.normal_form(d.num);
    rc.holds = rc.residual.empty();
    if (rc.holds) return rc;
    // lhs = rhs + den^{-1} * residual
    if (rc.denominator == "1") rc.corrected_rhs = "(" + rhs + ") + (" + c.str(rc.residual) + ")";
    else rc.corrected_rhs = "(" + rhs + ") + 1/(" + rc.denominator + ") (" + c.str(rc.residual) + ")";
    LocalElement fixed = ops.sub(l, c.eval_local(rc.corrected_rhs));
    rc.correction_verified = fixed.num.is_zero();
    return rc;
}

std::vector<RelationCheck> check_printed_relations(AlgebraId id) {
    const Centralizer& c = centralizer(id);
    std::vector<RelationCheck> out;
    if (id == AlgebraId::C2)
        for (const auto& e : tables::c2_eliminations()) out.push_back(check_relation(c, e.lhs, e.rhs));
    for (const auto& e : tables::relations(id)) out.push_back(check_relation(c, e.lhs, e.rhs));
    return out;
}

std::string word_str(const Centralizer& c, const std::vector<int>& word) {
    std::string s;
    for (int p : word) {
        if (!s.empty()) s += " ";
        s += c.perfect()[p].label;
    }
    return s;
}

std::vector<ExtractedRelation> extract_relations(AlgebraId id, int max_length) {
    if (id == AlgebraId::G2) throw MathError("relation extraction is not supported for G2");
    const Centralizer& c = centralizer(id);
    const int P = static_cast<int>(c.perfect().size());
    std::map<std::string, std::string> printed;
    for (const auto& e : tables::relations(id)) printed[e.lhs] = e.rhs;

    std::vector<std::vector<int>> words;
    for (int p = 0; p < P; ++p)
        for (int q = 0; q < P; ++q) {
            SMono s{static_cast<std::uint8_t>(std::min(p, q)), static_cast<std::uint8_t>(std::max(p, q))};
            if (p <= q && c.is_semi_perfect(s)) continue;
            words.push_back({p, q});
        }
    for (int len = 3; len <= max_length; ++len) {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == len) {
                SMono s(cur.begin(), cur.end());
                bool proper_ok = true;
                for (int drop = 0; drop < len && proper_ok; ++drop) {
                    SMono t;
                    for (int u = 0; u < len; ++u)
                        if (u != drop) t.push_back(s[u]);
                    proper_ok = c.is_semi_perfect(t);
                }
                if (proper_ok && !c.is_semi_perfect(s)) words.push_back(cur);
                return;
            }
            for (int p = from; p < P; ++p) {
                cur.push_back(p);
                rec(p);
                cur.pop_back();
            }
        };
        rec(2);
    }

    std::vector<ExtractedRelation> out;
    for (const auto& w : words) {
        ExtractedRelation r;
        r.lhs = w;
        UEAElement prod = c.uea().unit();
        for (int p : w) prod = c.uea().multiply(prod, *c.omega(SMono{static_cast<std::uint8_t>(p)}));
        r.rhs = c.normal_form(prod);
        r.verified = c.expand(r.rhs) == prod;
        auto it = printed.find(word_str(c, w));
        if (it != printed.end()) r.matches_printed = c.normal_form(c.eval(it->second)) == r.rhs;
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------- Casimirs

namespace {

struct KeyLess {
    bool operator()(const std::pair<int, Mono>& a, const std::pair<int, Mono>& b) const {
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

struct Fit {
    SElement element;
    std::vector<SMono> mismatched;
};

Fit nearest_in_span(const std::vector<SElement>& basis, const SElement& target,
                    const std::function<int(const SMono&)>& degree) {
    const std::size_t k = basis.size();
    std::set<SMono> coords;
    for (const auto& b : basis)
        for (const auto& [y, c] : b) coords.insert(y);
    for (const auto& [y, c] : target) coords.insert(y);
    // Pinned coordinates are drawn from the highest-degree terms plus the terms of degree <= 1.
    std::vector<SMono> cand(coords.begin(), coords.end());
    std::stable_sort(cand.begin(), cand.end(),
                     [&](const SMono& a, const SMono& b) { return degree(a) > degree(b); });
    if (cand.size() > 24) {
        std::vector<SMono> low;
        for (const auto& y : cand)
            if (degree(y) <= 1) low.push_back(y);
        cand.resize(18);
        cand.insert(cand.end(), low.begin(), low.end());
    }

    auto value = [](const SElement& e, const SMono& y) {
        auto it = e.find(y);
        return it == e.end() ? Rational(0) : it->second;
    };
    Fit best;
    std::size_t best_count = static_cast<std::size_t>(-1);
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
            std::vector<Rational> rhs(k);
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t col = 0; col < k; ++col) a[r][col] = value(basis[col], cand[idx[r]]);
                rhs[r] = value(target, cand[idx[r]]);
            }
            auto x = solve_dense(a, rhs);
            if (!x) return;
            std::size_t count = 0;
            for (const auto& y : coords) {
                Rational v;
                for (std::size_t col = 0; col < k; ++col) v += (*x)[col] * value(basis[col], y);
                if (v != value(target, y) && ++count >= best_count) return;
            }
            best_count = count;
            best.element.clear();
            best.mismatched.clear();
            for (const auto& y : coords) {
                Rational v;
                for (std::size_t col = 0; col < k; ++col) v += (*x)[col] * value(basis[col], y);
                if (!v.is_zero()) best.element[y] = v;
                if (v != value(target, y)) best.mismatched.push_back(y);
            }
            return;
        }
        for (std::size_t t = start; t < cand.size(); ++t) {
            idx[depth] = t;
            rec(t + 1, depth + 1);
            if (best_count == 0) return;
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace

std::vector<SElement> central_elements(AlgebraId id, int max_degree) {
    const Centralizer& c = centralizer(id);
    const UEA& u = c.uea();
    std::vector<int> simple;
    for (const char* lab : {"e10", "e01", "f10", "f01"}) simple.push_back(u.lie().index(lab));
    auto basis = c.semi_perfect_basis(max_degree);
    IncrementalEliminator<std::pair<int, Mono>, KeyLess> elim;
    std::vector<SElement> out;
    for (const auto& y : basis) {
        IncrementalEliminator<std::pair<int, Mono>, KeyLess>::Vec v;
        auto w = c.omega(y);
        for (int s : simple) {
            UEAElement com = u.commutator(*w, u.gen(s));
            for (const auto& [m, coef] : com.terms()) v.emplace(std::make_pair(s, m), coef);
        }
        if (auto dep = elim.add(std::move(v))) {
            SElement z;
            for (const auto& [i, coef] : *dep) z[basis[i]] = coef;
            out.push_back(std::move(z));
        }
    }
    return out;
}

namespace {

CasimirInfo build_casimir_info(AlgebraId id, int index) {
    const Centralizer& c = centralizer(id);
    auto forms = tables::casimirs(id);
    if (index < 1 || index > static_cast<int>(forms.size()))
        throw MathError("unsupported Casimir index for " + std::string(algebra_name(id)));
    const auto& f = forms[static_cast<std::size_t>(index - 1)];
    CasimirInfo info;
    info.name = f.name;
    info.printed = f.formula;
    info.printed_element = c.eval(f.formula);
    info.printed_failures = noncentral_generators(c.uea(), info.printed_element);
    info.printed_central = info.printed_failures.empty();
    SElement printed_nf = c.normal_form(info.printed_element);
    if (info.printed_central) {
        info.corrected = printed_nf;
        info.element = info.printed_element;
    } else {
        const int d = c.uea().degree_of(info.printed_element);
        auto basis = central_elements(id, d);
        Fit fit = nearest_in_span(basis, printed_nf, [&c](const SMono& y) { return c.degree(y); });
        info.corrected = fit.element;
        info.mismatches = fit.mismatched.size();
        for (const auto& y : fit.mismatched) info.mismatch_terms.push_back(c.smono_str(y));
        info.element = c.expand(info.corrected);
    }
    info.central = noncentral_generators(c.uea(), info.element).empty();
    return info;
}

}  // namespace

const CasimirInfo& casimir_info(AlgebraId id, int index) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<CasimirInfo>> cache;
    auto key = std::make_pair(static_cast<int>(id), index);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto info = std::make_unique<CasimirInfo>(build_casimir_info(id, index));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(info));
    return *it->second;
}

const UEAElement& casimir(AlgebraId id, int index) { return casimir_info(id, index).element; }

std::vector<EmbeddedCasimir> g2_embedded_casimirs() {
    const Centralizer& c = centralizer(AlgebraId::G2);
    const UEA& u = c.uea();
    std::vector<EmbeddedCasimir> out;
    for (const auto& f : tables::g2_embedded_casimirs()) {
        EmbeddedCasimir e;
        e.name = f.name;
        e.element = c.eval(f.formula);
        for (const auto& [hat, lab] : tables::g2_embedding()) {
            UEAElement x = u.lie().find(lab) ? u.gen(lab) : u.cartan(lab);
            if (!u.commutator(e.element, x).is_zero()) e.subalgebra_failures.push_back(lab);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------- width decomposition

namespace {

using Word = std::vector<std::uint8_t>;
using FreeElem = std::map<Word, RationalFunction>;

void free_add_term(FreeElem& x, const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = x.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    }
}

struct FreeOps {
    const std::vector<std::string>& letters;
    const std::map<std::string, FreeElem>& assigned;

    FreeElem num(const Rational& r) const {
        FreeElem x;
        free_add_term(x, {}, RationalFunction(r));
        return x;
    }
    FreeElem sym(const std::string& name) const {
        if (auto it = assigned.find(name); it != assigned.end()) return it->second;
        for (std::size_t l = 0; l < letters.size(); ++l)
            if (letters[l] == name) return FreeElem{{Word{static_cast<std::uint8_t>(l)}, RationalFunction(1)}};
        FreeElem x;
        if (name == "h3") free_add_term(x, {}, RationalFunction::var(Sym::h1) + RationalFunction::var(Sym::h2));
        else if (auto s = sym_from_name(name); s && (*s == Sym::h1 || *s == Sym::h2 || *s == Sym::z1 || *s == Sym::z2))
            free_add_term(x, {}, RationalFunction::var(*s));
        else throw MathError("symbol " + name + " is not available in the reduced generating set");
        return x;
    }
    FreeElem add(const FreeElem& a, const FreeElem& b) const {
        FreeElem r = a;
        for (const auto& [w, c] : b) free_add_term(r, w, c);
        return r;
    }
    FreeElem neg(const FreeElem& a) const {
        FreeElem r = a;
        for (auto& [w, c] : r) c = -c;
        return r;
    }
    FreeElem sub(const FreeElem& a, const FreeElem& b) const { return add(a, neg(b)); }
    FreeElem mul(const FreeElem& a, const FreeElem& b) const {
        FreeElem r;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                free_add_term(r, w, ca * cb);
            }
        return r;
    }
    FreeElem div(const FreeElem& a, const FreeElem& b) const {
        if (b.size() != 1 || !b.begin()->first.empty()) throw MathError("division by a noncentral element");
        const RationalFunction inv = RationalFunction(1) / b.begin()->second;
        FreeElem r = a;
        for (auto& [w, c] : r) c *= inv;
        return r;
    }
    FreeElem bracket(const FreeElem& a, const FreeElem& b) const { return sub(mul(a, b), mul(b, a)); }
};

// Solves z = coeff * label + rest for label, as an expression string.
std::string solve_for(const Centralizer& c, const std::string& zname, const SElement& z, const std::string& label) {
    SMono key{static_cast<std::uint8_t>(c.perfect_index(label))};
    auto it = z.find(key);
    if (it == z.end()) throw MathError(zname + " does not involve " + label);
    SElement rest = z;
    rest.erase(key);
    return "1/(" + it->second.str() + ") (" + zname + " - (" + c.str(rest) + "))";
}

}  // namespace

WidthDecomposition width_decomposition(AlgebraId id) {
    if (id == AlgebraId::G2) throw MathError("width decomposition is not supported for G2");
    const Centralizer& c = centralizer(id);
    const UEA& u = c.uea();
    WidthDecomposition wd;
    wd.s1 = {"h1", "h2", "z1", "z2"};
    if (id == AlgebraId::A2) {
        wd.s2 = {"c1"};
        wd.s3 = {"c2"};
        wd.eliminations = {
            {"c3", solve_for(c, "z1", casimir_info(id, 1).corrected, "c3")},
            {"p",
             "z2 - 1/3 (h1 - h2) c3 + 1/3 (6 + 2 h1 + h2) c2 - 1/3 (h1 + 2 h2) c1 - "
             "1/27 (-h2 - 3 + h1) (6 + 2 h1 + h2) (h1 + 2 h2)"},
            {"c4", "1/2 (p - c1 c2 + c2 c1)"},
            {"c5", "1/2 (p + c1 c2 - c2 c1)"}};
    } else {
        wd.s2 = {"c1", "c2"};
        wd.s3 = {"c3"};
        wd.eliminations.push_back({"c4", solve_for(c, "z1", casimir_info(id, 1).corrected, "c4")});
        wd.elimination_corrected.push_back(false);
        auto elim = tables::c2_eliminations();
        for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
            RelationCheck rc = check_relation(c, it->lhs, it->rhs);
            const bool fix = !rc.holds && rc.correction_verified;
            wd.eliminations.push_back({it->lhs, fix ? rc.corrected_rhs : it->rhs});
            wd.elimination_corrected.push_back(fix);
        }
    }
    wd.elimination_corrected.resize(wd.eliminations.size(), false);

    // Each elimination must be an identity in U(g) (localized where needed).
    Centralizer::SymbolTable extra;
    extra["z1"] = {u.unit(), casimir(id, 1)};
    extra["z2"] = {u.unit(), casimir(id, 2)};
    LocalOps lops{c, &extra};
    for (const auto& [name, text] : wd.eliminations) {
        LocalElement v = c.eval_local(text, &extra);
        if (auto s = c.symbol(name)) {
            LocalElement d = lops.sub(LocalElement{u.unit(), *s}, v);
            wd.elimination_holds.push_back(d.num.is_zero());
        } else {
            wd.elimination_holds.push_back(true);
            extra[name] = v;
        }
    }

    std::vector<std::string> letters = wd.s2;
    letters.insert(letters.end(), wd.s3.begin(), wd.s3.end());
    std::map<std::string, FreeElem> assigned;
    FreeOps fops{letters, assigned};
    for (const auto& [name, text] : wd.eliminations) assigned[name] = evaluate<FreeElem>(*parse_expr(text), fops);

    const std::size_t first_s3 = wd.s2.size();
    for (const auto& e : tables::relations(id)) {
        if (e.expected_width < 0) continue;
        FreeElem v = fops.sub(evaluate<FreeElem>(*parse_expr(e.lhs), fops), evaluate<FreeElem>(*parse_expr(e.rhs), fops));
        WidthRelation wr;
        wr.lhs = e.lhs;
        wr.expected = e.expected_width;
        wr.terms = v.size();
        wr.width = v.empty() ? -1 : 0;
        for (const auto& [w, coef] : v) {
            int n = static_cast<int>(std::count_if(w.begin(), w.end(), [&](std::uint8_t l) { return l >= first_s3; }));
            wr.width = std::max(wr.width, n);
        }
        wd.relations.push_back(wr);
    }

    wd.s1_central = casimir_info(id, 1).central && casimir_info(id, 2).central;
    for (const char* h : {"h1", "h2"}) {
        auto hv = *c.symbol(h);
        for (std::size_t p = 0; p < c.perfect().size(); ++p)
            if (!u.commutator(hv, *c.omega(SMono{static_cast<std::uint8_t>(p)})).is_zero()) wd.s1_central = false;
    }
    wd.s12_commutative = wd.s1_central;
    std::vector<UEAElement> s12;
    for (const auto& s : wd.s2) s12.push_back(*c.symbol(s));
    for (std::size_t a = 0; a < s12.size(); ++a) {
        for (std::size_t b = a + 1; b < s12.size(); ++b)
            if (!u.commutator(s12[a], s12[b]).is_zero()) wd.s12_commutative = false;
        for (int z = 1; z <= 2; ++z)
            if (!u.commutator(s12[a], casimir(id, z)).is_zero()) wd.s12_commutative = false;
    }
    return wd;
}

}  // namespace gtp
